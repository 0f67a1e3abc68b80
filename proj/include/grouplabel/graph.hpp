#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grouplabel {

class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GraphKind { path, cycle, tree, general };

std::string_view to_string(GraphKind kind);
GraphKind graph_kind_from_string(std::string_view text);

using Edge = std::pair<int, int>;

/// A simple undirected graph. Paths use edges {i, i+1}; cycles add {n-1, 0}.
class SimpleGraph {
 public:
  static SimpleGraph path(int n);
  static SimpleGraph cycle(int n);
  /// Validates connectivity and |E| = n - 1.
  static SimpleGraph tree(int n, std::vector<Edge> edges);
  static SimpleGraph star(int leaves);
  static SimpleGraph general(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  GraphKind kind() const { return kind_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Edge indices incident to v, ascending.
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  int degree(int v) const { return static_cast<int>(incident_[v].size()); }

  /// Path or tree shape: connected with n - 1 edges.
  bool is_tree_shaped() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.kind_ == b.kind_ && a.edges_ == b.edges_;
  }

 private:
  SimpleGraph(int n, GraphKind kind, std::vector<Edge> edges);

  int n_ = 0;
  GraphKind kind_ = GraphKind::general;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace grouplabel
