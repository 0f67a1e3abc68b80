#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "grouplabel/graph.hpp"
#include "grouplabel/group.hpp"

namespace grouplabel {

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// f : E -> A, one label per edge index.
struct EdgeLabeling {
  GroupSpec group;
  std::vector<GroupElement> labels;

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

/// c : V -> A, one label per vertex.
struct VertexLabeling {
  GroupSpec group;
  std::vector<GroupElement> labels;

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;
};

/// Class sizes over every element of the group, zeros included.
using ClassCounts = std::map<GroupElement, std::int64_t>;

enum class Violation {
  size_mismatch,
  zero_edge_forbidden,
  edge_imbalance,
  edge_collision,
  vertex_imbalance,
  vertex_collision,
};

std::string_view to_string(Violation v);
Violation violation_from_string(std::string_view text);

struct Verdict {
  ClassCounts edge_class_counts;
  ClassCounts vertex_class_counts;
  std::optional<Violation> violation;

  bool ok() const { return !violation.has_value(); }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// f*(v) = sum of the labels of the edges incident to v; isolated vertices get 0.
VertexLabeling induce_vertex_labels(const SimpleGraph& graph, const EdgeLabeling& f);

/// c*(uv) = c(u) + c(v).
EdgeLabeling induce_edge_labels(const SimpleGraph& graph, const VertexLabeling& c);

ClassCounts class_counts(const GroupSpec& group, const std::vector<GroupElement>& labels);

/// max - min <= 1.
bool is_equitable(const ClassCounts& counts);

// Verifiers never throw on malformed input; they report size_mismatch.
// Violations are reported in the order: size, zero edge, edge side, vertex side.

Verdict verify_ea_cordial(const SimpleGraph& graph, const EdgeLabeling& f);
Verdict verify_a_cordial(const SimpleGraph& graph, const VertexLabeling& c);

/// Tree on |A| vertices with pairwise distinct edge labels and pairwise
/// distinct induced vertex labels.
Verdict verify_a_antimagic(const SimpleGraph& tree, const EdgeLabeling& f);

/// As verify_a_antimagic, and the edge labels are exactly the nonzero elements.
Verdict verify_a_star_antimagic(const SimpleGraph& tree, const EdgeLabeling& f);

}  // namespace grouplabel
