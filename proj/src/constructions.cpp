#include "grouplabel/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "grouplabel/figures.hpp"

namespace grouplabel {
namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void require_kind(const SimpleGraph& g, GraphKind kind, const char* what) {
  if (g.kind() != kind) throw PreconditionError(std::string(what) + " expects a " + std::string(to_string(kind)));
}

Certificate checked(Notion notion, const SimpleGraph& graph, const EdgeLabeling& f, const char* route) {
  auto cert = certify(notion, graph, f);
  if (!cert.verdict.ok()) {
    throw std::logic_error(std::string("construction ") + route + " produced an invalid labeling (" +
                           std::string(to_string(*cert.verdict.violation)) + ")");
  }
  return cert;
}

GroupElement join(std::int64_t x, std::int64_t four_m, const GroupElement& h) {
  GroupElement e;
  e.residues.reserve(h.residues.size() + 1);
  e.residues.push_back(((x % four_m) + four_m) % four_m);
  e.residues.insert(e.residues.end(), h.residues.begin(), h.residues.end());
  return e;
}

}  // namespace

EdgeLabeling cycle_vertex_to_edge(const SimpleGraph& cycle, const VertexLabeling& c, bool permissive) {
  require_kind(cycle, GraphKind::cycle, "cycle_vertex_to_edge");
  if (c.labels.size() != static_cast<std::size_t>(cycle.n())) throw PreconditionError("one label per vertex expected");
  if (!permissive) {
    auto v = verify_a_cordial(cycle, c);
    if (!v.ok()) throw PreconditionError("vertex labeling is not A-cordial (" + std::string(to_string(*v.violation)) + ")");
  }
  // edge i of a cycle joins v_i and v_{i+1}
  return {c.group, c.labels};
}

EdgeLabeling shift_labeling(const EdgeLabeling& f, const GroupElement& g) {
  f.group.require_conforming(g);
  EdgeLabeling out{f.group, {}};
  out.labels.reserve(f.labels.size());
  for (const auto& a : f.labels) out.labels.push_back(subtract(f.group, a, g));
  return out;
}

PathLabeling cycle_to_path(const SimpleGraph& cycle, const EdgeLabeling& f) {
  require_kind(cycle, GraphKind::cycle, "cycle_to_path");
  auto v = verify_ea_cordial(cycle, f);
  if (!v.ok()) throw PreconditionError("cycle labeling is not EA-cordial (" + std::string(to_string(*v.violation)) + ")");

  int n = cycle.n();
  std::int64_t cap = ceil_div(n, f.group.order());
  GroupElement g;
  for (const auto& [element, count] : v.edge_class_counts) {
    if (count == cap) {
      g = element;
      break;
    }
  }
  auto shifted = shift_labeling(f, g);
  auto zero = f.group.zero();
  int i = static_cast<int>(std::find(shifted.labels.begin(), shifted.labels.end(), zero) - shifted.labels.begin());

  PathLabeling out{SimpleGraph::path(n), {f.group, {}}};
  for (int t = 1; t < n; ++t) out.labeling.labels.push_back(shifted.labels[(i + t) % n]);
  checked(Notion::ea_cordial, out.path, out.labeling, "cycle-to-path");
  return out;
}

EdgeLabeling project_labeling(const SimpleGraph& tree, const EdgeLabeling& f, const std::vector<std::size_t>& keep) {
  if (!tree.is_tree_shaped()) throw PreconditionError("projection expects a tree");
  if (tree.n() != f.group.order()) throw PreconditionError("projection expects a tree on |A| vertices");
  auto v = verify_ea_cordial(tree, f);
  if (!v.ok()) throw PreconditionError("labeling is not EA-cordial (" + std::string(to_string(*v.violation)) + ")");
  if (!std::is_sorted(keep.begin(), keep.end()) || std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw PreconditionError("kept coordinates must be strictly increasing");
  }
  std::vector<std::int64_t> factors;
  for (auto c : keep) {
    if (c >= f.group.rank()) throw PreconditionError("kept coordinate out of range");
    factors.push_back(f.group.factors()[c]);
  }
  EdgeLabeling out{GroupSpec(factors), {}};
  for (const auto& a : f.labels) {
    GroupElement b;
    for (auto c : keep) b.residues.push_back(a.residues[c]);
    out.labels.push_back(std::move(b));
  }
  checked(Notion::ea_cordial, tree, out, "projection");
  return out;
}

AntLayout make_ant_layout(const GroupSpec& spec, SearchBudget budget) {
  auto dec = ant_decomposition(spec);
  if (!dec) throw InapplicableGroup(spec.to_string() + " has no Z_4m + H decomposition with m > 1");
  std::int64_t k = dec->h.order();
  std::vector<GroupElement> base;
  if (k == 1) {
    base.push_back(dec->h.zero());
  } else {
    auto r = search_ea_cordial(SimpleGraph::cycle(static_cast<int>(k)), dec->h, budget, {dec->h.zero()});
    if (!r.found()) {
      if (r.status == SearchStatus::not_exists) throw std::logic_error("no EA-cordial base cycle over " + dec->h.to_string());
      throw BudgetExhausted("base cycle search over " + dec->h.to_string() + " ran out of budget");
    }
    base = r.witness->edge_labels;
  }
  GroupSpec source = concat(GroupSpec::cyclic(dec->four_m), dec->h);
  return AntLayout{dec->m(), k, dec->h, std::move(base), CoordinateMap(source, spec)};
}

EdgeLabeling construct_ant_path(const AntLayout& layout) {
  const std::int64_t m = layout.m, k = layout.k, four_m = 4 * m;
  auto h = [&](std::int64_t j) { return layout.base_cycle_labels[j % k]; };
  std::vector<GroupElement> labels;
  labels.reserve(four_m * k - 1);
  for (std::int64_t j = 0; j < k; ++j) {
    for (std::int64_t i = 0; i < four_m - 1; ++i) {
      std::int64_t x;
      if (j == 0) {
        if (i % 2 == 0) x = i / 2;
        else if (i <= 2 * m - 1) x = 2 * m + (i - 1) / 2;
        else x = 2 * m + 1 + (i - 1) / 2;
      } else if (j % 2 == 1) {
        x = i % 2 == 0 ? 2 * m + i / 2 : 1 + (i - 1) / 2;
      } else {
        x = i % 2 == 0 ? i / 2 : 2 * m + 1 + (i - 1) / 2;
      }
      labels.push_back(join(x, four_m, h(j)));
    }
    if (j + 1 < k) labels.push_back(join(j % 2 == 0 ? 0 : 2 * m, four_m, h(j + 1)));
  }
  EdgeLabeling out{layout.to_target.target(), {}};
  out.labels.reserve(labels.size());
  for (const auto& a : labels) out.labels.push_back(layout.to_target(a));
  return out;
}

EdgeLabeling construct_ant_path(const GroupSpec& spec, SearchBudget budget) {
  auto f = construct_ant_path(make_ant_layout(spec, budget));
  checked(Notion::ea_cordial, SimpleGraph::path(static_cast<int>(spec.order())), f, "block");
  return f;
}

bool decide_cycle_zk_cordial(std::int64_t n, std::int64_t k) {
  if (n < 3 || k < 2) throw std::domain_error("decide_cycle_zk_cordial needs n >= 3 and k >= 2");
  return k % 2 == 1 || n % k != 0 || (n / k) % 2 == 0;
}

bool decide_path_ek_cordial(std::int64_t n, std::int64_t k) {
  if (n < 2 || k < 2) throw std::domain_error("decide_path_ek_cordial needs n >= 2 and k >= 2");
  if (n == 2) return false;
  return k % 4 != 2 || n % k != 0 || (n / k) % 2 == 0;
}

bool decide_tree_2mod4_obstruction(std::int64_t n, const GroupSpec& spec) {
  if (n < 1) throw std::domain_error("trees need at least one vertex");
  return n % 4 == 2 && spec.order() % 4 == 2;
}

bool decide_path_a_antimagic(const GroupSpec& spec) {
  if (spec.order() < 2) throw std::domain_error("A-antimagic paths need |A| >= 2");
  return spec.order() % 4 != 2;
}

std::string_view to_string(ConstructionStatus status) {
  switch (status) {
    case ConstructionStatus::constructed: return "constructed";
    case ConstructionStatus::impossible: return "impossible";
    case ConstructionStatus::unknown: return "unknown";
  }
  return "?";
}

ConstructionResult construct_path_ek(std::int64_t n, std::int64_t k, SearchBudget budget) {
  if (n > 65535) throw std::domain_error("paths are limited to 65535 vertices");
  if (!decide_path_ek_cordial(n, k)) return {ConstructionStatus::impossible, "obstruction", std::nullopt, 0};
  auto path = SimpleGraph::path(static_cast<int>(n));
  auto zk = GroupSpec::cyclic(k);

  if (n == 4 && k == 4) {
    EdgeLabeling f{zk, {{0}, {1}, {2}}};
    return {ConstructionStatus::constructed, "base", checked(Notion::ea_cordial, path, f, "base"), 0};
  }
  if (k % 4 == 0 && n % k == 0 && (n / k) % 2 == 1) {
    GroupSpec big = n == k ? zk : GroupSpec({k, n / k});
    auto f = construct_ant_path(big, budget);
    auto g = project_labeling(path, f, {0});
    return {ConstructionStatus::constructed, "block-projection", checked(Notion::ea_cordial, path, g, "block-projection"), 0};
  }
  auto cycle = SimpleGraph::cycle(static_cast<int>(n));
  auto r = search_ea_cordial(cycle, zk, budget);
  if (r.status == SearchStatus::unknown) return {ConstructionStatus::unknown, "cycle-search", std::nullopt, r.nodes_explored};
  if (r.status == SearchStatus::not_exists) {
    throw std::logic_error("no EA-cordial labeling of C_" + std::to_string(n) + " over Z" + std::to_string(k));
  }
  auto p = cycle_to_path(cycle, r.witness->edge_labeling());
  return {ConstructionStatus::constructed, "cycle-search", checked(Notion::ea_cordial, path, p.labeling, "cycle-search"),
          r.nodes_explored};
}

RStarSequence rotate_to_star(const RStarSequence& rs) {
  validate(rs);
  std::size_t len = rs.seq.size();
  RStarSequence out{rs.group, {}, 0};
  for (std::size_t t = 0; t < len; ++t) out.seq.push_back(rs.seq[(t + rs.star_index) % len]);
  validate(out);
  return out;
}

EdgeLabeling rstar_to_path_antimagic(const RStarSequence& rs) {
  if (!is_elementary_two(rs.group)) throw PreconditionError("R*-sequence conversion needs an elementary Abelian 2-group");
  try {
    validate(rs);
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(e.what());
  }
  if (rs.star_index != 0) throw PreconditionError("R*-sequence must be rotated so the star is at index 0");
  EdgeLabeling f{rs.group, {rs.group.zero()}};
  for (std::size_t t = 1; t < rs.seq.size(); ++t) f.labels.push_back(rs.seq[t]);
  checked(Notion::a_antimagic, SimpleGraph::path(static_cast<int>(rs.group.order())), f, "rstar");
  return f;
}

ConstructionResult construct_path_antimagic(const GroupSpec& spec, SearchBudget budget) {
  if (spec.order() > 65535) throw std::domain_error("paths are limited to 65535 vertices");
  if (!decide_path_a_antimagic(spec)) return {ConstructionStatus::impossible, "obstruction", std::nullopt, 0};
  const int n = static_cast<int>(spec.order());
  auto path = SimpleGraph::path(n);
  auto done = [&](const EdgeLabeling& f, const char* route, std::uint64_t nodes) {
    return ConstructionResult{ConstructionStatus::constructed, route, checked(Notion::a_antimagic, path, f, route), nodes};
  };
  auto unknown = [](const char* route, std::uint64_t nodes) {
    return ConstructionResult{ConstructionStatus::unknown, route, std::nullopt, nodes};
  };

  if (n % 2 == 1) {
    auto cycle = SimpleGraph::cycle(n);
    auto r = search_ea_cordial(cycle, spec, budget);
    if (r.status == SearchStatus::unknown) return unknown("odd-order", r.nodes_explored);
    if (r.status == SearchStatus::not_exists) throw std::logic_error("no EA-cordial cycle over " + spec.to_string());
    return done(cycle_to_path(cycle, r.witness->edge_labeling()).labeling, "odd-order", r.nodes_explored);
  }
  if (spec == GroupSpec::cyclic(4)) return done(EdgeLabeling{spec, {{0}, {1}, {2}}}, "base", 0);
  if (ant_decomposition(spec)) {
    try {
      return done(construct_ant_path(spec, budget), "block", 0);
    } catch (const BudgetExhausted&) {
      return unknown("block", 0);
    }
  }
  if (!is_elementary_two(spec)) {
    auto rc = search_rainbow_cycle(spec, budget);
    if (rc.status == SearchStatus::unknown) return unknown("rainbow-cycle", rc.nodes_explored);
    if (rc.status == SearchStatus::not_exists) throw std::logic_error("no sum-rainbow cycle over " + spec.to_string());
    auto cycle = SimpleGraph::cycle(n);
    VertexLabeling c{spec, rc.witness->order};
    auto f = cycle_vertex_to_edge(cycle, c);
    return done(cycle_to_path(cycle, f).labeling, "rainbow-cycle", rc.nodes_explored);
  }
  if (spec.rank() == 3) return done(figure_certificate(4).edge_labeling(), "small-case", 0);
  auto rs = search_rstar_sequence(spec, budget);
  if (rs.status == SearchStatus::unknown) return unknown("rstar", rs.nodes_explored);
  if (rs.status == SearchStatus::not_exists) throw std::logic_error("no R*-sequence over " + spec.to_string());
  return done(rstar_to_path_antimagic(rotate_to_star(*rs.witness)), "rstar", rs.nodes_explored);
}

}  // namespace grouplabel
