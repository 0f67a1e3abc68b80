#include "grouplabel/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace grouplabel {
namespace {

bool connected(int n, const std::vector<Edge>& edges) {
  if (n == 0) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::path: return "path";
    case GraphKind::cycle: return "cycle";
    case GraphKind::tree: return "tree";
    case GraphKind::general: return "general";
  }
  return "general";
}

GraphKind graph_kind_from_string(std::string_view text) {
  if (text == "path") return GraphKind::path;
  if (text == "cycle") return GraphKind::cycle;
  if (text == "tree") return GraphKind::tree;
  if (text == "general") return GraphKind::general;
  throw InvalidGraph("unknown graph kind '" + std::string(text) + "'");
}

SimpleGraph::SimpleGraph(int n, GraphKind kind, std::vector<Edge> edges)
    : n_(n), kind_(kind), edges_(std::move(edges)), incident_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 1) throw InvalidGraph("graph needs at least one vertex");
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidGraph("edge endpoint out of range");
    if (u == v) throw InvalidGraph("loops are not allowed");
    if (!seen.insert(std::minmax(u, v)).second) throw InvalidGraph("duplicate edge");
    incident_[u].push_back(static_cast<int>(i));
    incident_[v].push_back(static_cast<int>(i));
  }
}

SimpleGraph SimpleGraph::path(int n) {
  if (n < 1) throw InvalidGraph("path needs at least one vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, GraphKind::path, std::move(e));
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) throw InvalidGraph("cycle needs at least three vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, GraphKind::cycle, std::move(e));
}

SimpleGraph SimpleGraph::tree(int n, std::vector<Edge> edges) {
  if (static_cast<int>(edges.size()) != n - 1) throw InvalidGraph("a tree on n vertices has n - 1 edges");
  SimpleGraph g(n, GraphKind::tree, std::move(edges));
  if (!connected(n, g.edges_)) throw InvalidGraph("tree edges do not connect all vertices");
  return g;
}

SimpleGraph SimpleGraph::star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return tree(leaves + 1, std::move(e));
}

SimpleGraph SimpleGraph::general(int n, std::vector<Edge> edges) {
  return SimpleGraph(n, GraphKind::general, std::move(edges));
}

bool SimpleGraph::is_tree_shaped() const {
  return static_cast<int>(edges_.size()) == n_ - 1 && connected(n_, edges_);
}

}  // namespace grouplabel
