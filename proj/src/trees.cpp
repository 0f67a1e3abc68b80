#include "grouplabel/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace grouplabel {
namespace {

std::vector<std::vector<int>> adjacency(const SimpleGraph& g) {
  std::vector<std::vector<int>> adj(g.n());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<int> centers(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> degree(n), leaves;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(leaves.size());
    std::vector<int> next;
    for (int leaf : leaves) {
      for (int u : adj[leaf]) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    leaves = std::move(next);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

std::string encode(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> children;
  for (int u : adj[v]) {
    if (u != parent) children.push_back(encode(adj, u, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

}  // namespace

std::string canonical_tree_form(const SimpleGraph& tree) {
  if (!tree.is_tree_shaped()) throw InvalidGraph("canonical form is defined for trees only");
  auto adj = adjacency(tree);
  std::string best;
  for (int c : centers(adj)) {
    auto form = encode(adj, c, -1);
    if (best.empty() || form < best) best = form;
  }
  return best;
}

SimpleGraph tree_from_canonical_form(const std::string& form) {
  std::vector<Edge> edges;
  std::vector<int> stack;
  int next = 0;
  for (char ch : form) {
    if (ch == '(') {
      int v = next++;
      if (!stack.empty()) edges.emplace_back(stack.back(), v);
      stack.push_back(v);
    } else if (ch == ')') {
      if (stack.empty()) throw InvalidGraph("unbalanced tree form");
      stack.pop_back();
    } else {
      throw InvalidGraph("unexpected character in tree form");
    }
  }
  if (!stack.empty() || next == 0) throw InvalidGraph("unbalanced tree form");
  return SimpleGraph::tree(next, std::move(edges));
}

std::vector<SimpleGraph> enumerate_trees(int n) {
  if (n < 1 || n > kMaxTreeEnumeration) {
    throw std::invalid_argument("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeEnumeration));
  }
  // grow every class of size k by one leaf at every vertex, then deduplicate
  std::set<std::string> level{"()"};
  for (int k = 1; k < n; ++k) {
    std::set<std::string> grown;
    for (const auto& form : level) {
      auto tree = tree_from_canonical_form(form);
      for (int v = 0; v < tree.n(); ++v) {
        auto edges = tree.edges();
        edges.emplace_back(v, tree.n());
        grown.insert(canonical_tree_form(SimpleGraph::tree(tree.n() + 1, std::move(edges))));
      }
    }
    level = std::move(grown);
  }
  std::vector<SimpleGraph> out;
  for (const auto& form : level) out.push_back(tree_from_canonical_form(form));
  return out;
}

}  // namespace grouplabel
