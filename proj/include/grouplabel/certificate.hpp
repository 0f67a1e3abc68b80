#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grouplabel/graph.hpp"
#include "grouplabel/group.hpp"
#include "grouplabel/labeling.hpp"

namespace grouplabel {

using Json = nlohmann::ordered_json;

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Notion { ea_cordial, a_cordial, a_antimagic, a_star_antimagic };

std::string_view to_string(Notion notion);
Notion notion_from_string(std::string_view text);

/// A labeling together with its induced labels and verdict. For a_cordial the
/// vertex labels are the assigned side; for every other notion the edge labels are.
struct Certificate {
  Notion notion;
  GroupSpec group;
  SimpleGraph graph;
  std::vector<GroupElement> edge_labels;
  std::vector<GroupElement> vertex_labels;
  Verdict verdict;

  EdgeLabeling edge_labeling() const { return {group, edge_labels}; }
  VertexLabeling vertex_labeling() const { return {group, vertex_labels}; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

Verdict verify(Notion notion, const SimpleGraph& graph, const EdgeLabeling& f);

Certificate certify(Notion notion, const SimpleGraph& graph, const EdgeLabeling& f);
Certificate certify(const SimpleGraph& graph, const VertexLabeling& c);

/// Recomputes induced labels and verdict from the assigned side.
Certificate recertify(const Certificate& cert);

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);
Json element_to_json(const GroupElement& a);
GroupElement element_from_json(const Json& j);
Json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const Certificate& cert);
/// Throws CertificateError on any malformed or inconsistent field.
Certificate certificate_from_json(const Json& j);

}  // namespace grouplabel
