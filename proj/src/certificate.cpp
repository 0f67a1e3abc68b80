#include "grouplabel/certificate.hpp"

namespace grouplabel {
namespace {

Json counts_to_json(const ClassCounts& counts) {
  Json out = Json::array();
  for (const auto& [element, count] : counts) out.push_back({{"element", element_to_json(element)}, {"count", count}});
  return out;
}

ClassCounts counts_from_json(const Json& j) {
  ClassCounts out;
  for (const auto& entry : j) {
    out[element_from_json(entry.at("element"))] = entry.at("count").get<std::int64_t>();
  }
  return out;
}

std::vector<GroupElement> labels_from_json(const Json& j) {
  std::vector<GroupElement> out;
  for (const auto& e : j) out.push_back(element_from_json(e));
  return out;
}

Json labels_to_json(const std::vector<GroupElement>& labels) {
  Json out = Json::array();
  for (const auto& a : labels) out.push_back(element_to_json(a));
  return out;
}

}  // namespace

std::string_view to_string(Notion notion) {
  switch (notion) {
    case Notion::ea_cordial: return "EA-cordial";
    case Notion::a_cordial: return "A-cordial";
    case Notion::a_antimagic: return "A-antimagic";
    case Notion::a_star_antimagic: return "A*-antimagic";
  }
  return "EA-cordial";
}

Notion notion_from_string(std::string_view text) {
  for (auto n : {Notion::ea_cordial, Notion::a_cordial, Notion::a_antimagic, Notion::a_star_antimagic}) {
    if (to_string(n) == text) return n;
  }
  throw CertificateError("unknown notion '" + std::string(text) + "'");
}

Verdict verify(Notion notion, const SimpleGraph& graph, const EdgeLabeling& f) {
  switch (notion) {
    case Notion::ea_cordial: return verify_ea_cordial(graph, f);
    case Notion::a_antimagic: return verify_a_antimagic(graph, f);
    case Notion::a_star_antimagic: return verify_a_star_antimagic(graph, f);
    case Notion::a_cordial: break;
  }
  throw std::invalid_argument("A-cordial labelings are vertex labelings");
}

Certificate certify(Notion notion, const SimpleGraph& graph, const EdgeLabeling& f) {
  if (notion == Notion::a_cordial) throw std::invalid_argument("A-cordial labelings are vertex labelings");
  auto verdict = verify(notion, graph, f);
  std::vector<GroupElement> induced;
  if (verdict.violation != Violation::size_mismatch) induced = induce_vertex_labels(graph, f).labels;
  return Certificate{notion, f.group, graph, f.labels, std::move(induced), std::move(verdict)};
}

Certificate certify(const SimpleGraph& graph, const VertexLabeling& c) {
  auto verdict = verify_a_cordial(graph, c);
  std::vector<GroupElement> induced;
  if (verdict.violation != Violation::size_mismatch) induced = induce_edge_labels(graph, c).labels;
  return Certificate{Notion::a_cordial, c.group, graph, std::move(induced), c.labels, std::move(verdict)};
}

Certificate recertify(const Certificate& cert) {
  if (cert.notion == Notion::a_cordial) return certify(cert.graph, cert.vertex_labeling());
  return certify(cert.notion, cert.graph, cert.edge_labeling());
}

Json group_to_json(const GroupSpec& g) { return Json(std::vector<std::int64_t>(g.factors().begin(), g.factors().end())); }

GroupSpec group_from_json(const Json& j) {
  if (j.is_string()) return GroupSpec::parse(j.get<std::string>());
  if (!j.is_array()) throw CertificateError("group must be an array of factor orders or a string");
  return GroupSpec(j.get<std::vector<std::int64_t>>());
}

Json element_to_json(const GroupElement& a) { return Json(a.residues); }

GroupElement element_from_json(const Json& j) {
  if (!j.is_array()) throw CertificateError("group element must be an array of integers");
  return GroupElement(j.get<std::vector<std::int64_t>>());
}

Json graph_to_json(const SimpleGraph& g) {
  Json out;
  out["kind"] = std::string(to_string(g.kind()));
  out["n"] = g.n();
  if (g.kind() == GraphKind::tree || g.kind() == GraphKind::general) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    out["edges"] = std::move(edges);
  }
  return out;
}

SimpleGraph graph_from_json(const Json& j) {
  auto kind = graph_kind_from_string(j.at("kind").get<std::string>());
  switch (kind) {
    case GraphKind::path: return SimpleGraph::path(j.at("n").get<int>());
    case GraphKind::cycle: return SimpleGraph::cycle(j.at("n").get<int>());
    case GraphKind::tree:
    case GraphKind::general: {
      std::vector<Edge> edges;
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw CertificateError("edge must be a pair of vertex ids");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(edges.size()) + 1;
      return kind == GraphKind::tree ? SimpleGraph::tree(n, std::move(edges)) : SimpleGraph::general(n, std::move(edges));
    }
  }
  throw CertificateError("unknown graph kind");
}

Json verdict_to_json(const Verdict& v) {
  Json out;
  out["ok"] = v.ok();
  out["violation"] = v.violation ? Json(std::string(to_string(*v.violation))) : Json(nullptr);
  out["edge_class_counts"] = counts_to_json(v.edge_class_counts);
  out["vertex_class_counts"] = counts_to_json(v.vertex_class_counts);
  return out;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  const auto& violation = j.at("violation");
  if (!violation.is_null()) v.violation = violation_from_string(violation.get<std::string>());
  if (j.at("ok").get<bool>() != v.ok()) throw CertificateError("verdict ok flag disagrees with violation");
  v.edge_class_counts = counts_from_json(j.at("edge_class_counts"));
  v.vertex_class_counts = counts_from_json(j.at("vertex_class_counts"));
  return v;
}

Json to_json(const Certificate& cert) {
  Json out;
  out["notion"] = std::string(to_string(cert.notion));
  out["group"] = group_to_json(cert.group);
  out["graph"] = graph_to_json(cert.graph);
  out["labeling"] = cert.notion == Notion::a_cordial ? "vertex" : "edge";
  out["edge_labels"] = labels_to_json(cert.edge_labels);
  out["vertex_labels"] = labels_to_json(cert.vertex_labels);
  out["verdict"] = verdict_to_json(cert.verdict);
  return out;
}

Certificate certificate_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw CertificateError("certificate must be a JSON object");
    auto notion = notion_from_string(j.at("notion").get<std::string>());
    auto group = group_from_json(j.at("group"));
    auto graph = graph_from_json(j.at("graph"));
    auto edges = j.contains("edge_labels") ? labels_from_json(j.at("edge_labels")) : std::vector<GroupElement>{};
    auto vertices = j.contains("vertex_labels") ? labels_from_json(j.at("vertex_labels")) : std::vector<GroupElement>{};
    const auto& assigned = notion == Notion::a_cordial ? vertices : edges;
    for (const auto& a : assigned)
      if (!group.conforms(a)) throw CertificateError("label does not belong to " + group.to_string());
    auto fresh = notion == Notion::a_cordial ? certify(graph, VertexLabeling{group, assigned})
                                             : certify(notion, graph, EdgeLabeling{group, assigned});
    const auto& induced = notion == Notion::a_cordial ? edges : vertices;
    const auto& fresh_induced = notion == Notion::a_cordial ? fresh.edge_labels : fresh.vertex_labels;
    bool has_induced = j.contains(notion == Notion::a_cordial ? "edge_labels" : "vertex_labels");
    if (has_induced && induced != fresh_induced) throw CertificateError("induced labels disagree with the labeling");
    if (j.contains("verdict") && verdict_from_json(j.at("verdict")) != fresh.verdict)
      throw CertificateError("verdict disagrees with the labeling");
    return fresh;
  } catch (const CertificateError&) {
    throw;
  } catch (const std::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace grouplabel
