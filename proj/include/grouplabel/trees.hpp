#pragma once

#include <string>
#include <vector>

#include "grouplabel/graph.hpp"

namespace grouplabel {

inline constexpr int kMaxTreeEnumeration = 10;

/// Parenthesis encoding of the tree rooted at its center, minimized over the
/// two centers when there are two. Equal iff the trees are isomorphic.
std::string canonical_tree_form(const SimpleGraph& tree);

/// Builds the tree described by a canonical form; vertices are numbered in
/// preorder from the root.
SimpleGraph tree_from_canonical_form(const std::string& form);

/// One representative per isomorphism class of trees on n vertices, ordered by
/// canonical form. Requires 1 <= n <= 10.
std::vector<SimpleGraph> enumerate_trees(int n);

}  // namespace grouplabel
