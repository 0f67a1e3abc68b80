#include "grouplabel/labeling.hpp"

#include <algorithm>
#include <string>

namespace grouplabel {
namespace {

bool all_conform(const GroupSpec& g, const std::vector<GroupElement>& labels) {
  return std::all_of(labels.begin(), labels.end(), [&](const auto& a) { return g.conforms(a); });
}

bool any_above_one(const ClassCounts& counts) {
  return std::any_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second > 1; });
}

Verdict mismatch() { return Verdict{{}, {}, Violation::size_mismatch}; }

// Tree-shaped graph on exactly |A| vertices with conforming edge labels.
bool antimagic_shape_ok(const SimpleGraph& tree, const EdgeLabeling& f) {
  return tree.is_tree_shaped() && tree.n() == f.group.order() && f.labels.size() == tree.edge_count() &&
         all_conform(f.group, f.labels);
}

}  // namespace

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::size_mismatch: return "size-mismatch";
    case Violation::zero_edge_forbidden: return "zero-edge-forbidden";
    case Violation::edge_imbalance: return "edge-imbalance";
    case Violation::edge_collision: return "edge-collision";
    case Violation::vertex_imbalance: return "vertex-imbalance";
    case Violation::vertex_collision: return "vertex-collision";
  }
  return "size-mismatch";
}

Violation violation_from_string(std::string_view text) {
  for (auto v : {Violation::size_mismatch, Violation::zero_edge_forbidden, Violation::edge_imbalance,
                 Violation::edge_collision, Violation::vertex_imbalance, Violation::vertex_collision}) {
    if (to_string(v) == text) return v;
  }
  throw std::invalid_argument("unknown violation '" + std::string(text) + "'");
}

VertexLabeling induce_vertex_labels(const SimpleGraph& graph, const EdgeLabeling& f) {
  if (f.labels.size() != graph.edge_count()) {
    throw SizeMismatch("edge labeling has " + std::to_string(f.labels.size()) + " labels for " +
                       std::to_string(graph.edge_count()) + " edges");
  }
  for (const auto& a : f.labels) f.group.require_conforming(a);
  VertexLabeling out{f.group, std::vector<GroupElement>(static_cast<std::size_t>(graph.n()), f.group.zero())};
  for (int v = 0; v < graph.n(); ++v) {
    for (int e : graph.incident(v)) out.labels[v] = add(f.group, out.labels[v], f.labels[e]);
  }
  return out;
}

EdgeLabeling induce_edge_labels(const SimpleGraph& graph, const VertexLabeling& c) {
  if (c.labels.size() != static_cast<std::size_t>(graph.n())) {
    throw SizeMismatch("vertex labeling has " + std::to_string(c.labels.size()) + " labels for " +
                       std::to_string(graph.n()) + " vertices");
  }
  for (const auto& a : c.labels) c.group.require_conforming(a);
  EdgeLabeling out{c.group, {}};
  out.labels.reserve(graph.edge_count());
  for (auto [u, v] : graph.edges()) out.labels.push_back(add(c.group, c.labels[u], c.labels[v]));
  return out;
}

ClassCounts class_counts(const GroupSpec& group, const std::vector<GroupElement>& labels) {
  ClassCounts counts;
  for (auto& a : enumerate_elements(group)) counts.emplace(std::move(a), 0);
  for (const auto& a : labels) {
    group.require_conforming(a);
    ++counts[a];
  }
  return counts;
}

bool is_equitable(const ClassCounts& counts) {
  if (counts.empty()) return true;
  auto [lo, hi] = std::minmax_element(counts.begin(), counts.end(),
                                      [](const auto& a, const auto& b) { return a.second < b.second; });
  return hi->second - lo->second <= 1;
}

Verdict verify_ea_cordial(const SimpleGraph& graph, const EdgeLabeling& f) {
  if (f.labels.size() != graph.edge_count() || !all_conform(f.group, f.labels)) return mismatch();
  auto vertex = induce_vertex_labels(graph, f);
  Verdict out{class_counts(f.group, f.labels), class_counts(f.group, vertex.labels), std::nullopt};
  if (!is_equitable(out.edge_class_counts)) {
    out.violation = Violation::edge_imbalance;
  } else if (!is_equitable(out.vertex_class_counts)) {
    out.violation = Violation::vertex_imbalance;
  }
  return out;
}

Verdict verify_a_cordial(const SimpleGraph& graph, const VertexLabeling& c) {
  if (c.labels.size() != static_cast<std::size_t>(graph.n()) || !all_conform(c.group, c.labels)) return mismatch();
  auto edge = induce_edge_labels(graph, c);
  Verdict out{class_counts(c.group, edge.labels), class_counts(c.group, c.labels), std::nullopt};
  if (!is_equitable(out.edge_class_counts)) {
    out.violation = Violation::edge_imbalance;
  } else if (!is_equitable(out.vertex_class_counts)) {
    out.violation = Violation::vertex_imbalance;
  }
  return out;
}

Verdict verify_a_antimagic(const SimpleGraph& tree, const EdgeLabeling& f) {
  if (!antimagic_shape_ok(tree, f)) return mismatch();
  auto vertex = induce_vertex_labels(tree, f);
  Verdict out{class_counts(f.group, f.labels), class_counts(f.group, vertex.labels), std::nullopt};
  if (any_above_one(out.edge_class_counts)) {
    out.violation = Violation::edge_collision;
  } else if (any_above_one(out.vertex_class_counts)) {
    out.violation = Violation::vertex_collision;
  }
  return out;
}

Verdict verify_a_star_antimagic(const SimpleGraph& tree, const EdgeLabeling& f) {
  if (!antimagic_shape_ok(tree, f)) return mismatch();
  auto vertex = induce_vertex_labels(tree, f);
  Verdict out{class_counts(f.group, f.labels), class_counts(f.group, vertex.labels), std::nullopt};
  // |E| = |A| - 1, so injective and zero-free means a bijection onto A \ {0}
  if (out.edge_class_counts.at(f.group.zero()) > 0) {
    out.violation = Violation::zero_edge_forbidden;
  } else if (any_above_one(out.edge_class_counts)) {
    out.violation = Violation::edge_collision;
  } else if (any_above_one(out.vertex_class_counts)) {
    out.violation = Violation::vertex_collision;
  }
  return out;
}

}  // namespace grouplabel
