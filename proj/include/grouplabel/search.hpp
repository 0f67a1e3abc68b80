#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "grouplabel/certificate.hpp"
#include "grouplabel/graph.hpp"
#include "grouplabel/group.hpp"

namespace grouplabel {

enum class SearchStatus { found, not_exists, unknown };

std::string_view to_string(SearchStatus status);

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Budgets are counted in explored nodes, so results do not depend on machine
/// speed. For labeling searches the node budget applies to each value of the
/// first label separately; those root branches are also the unit of
/// parallelism.
struct SearchBudget {
  std::uint64_t nodes = kDefaultNodeBudget;
  unsigned threads = 1;
};

template <class Witness>
struct SearchOutcome {
  SearchStatus status = SearchStatus::unknown;
  std::optional<Witness> witness;
  std::uint64_t nodes_explored = 0;

  bool found() const { return status == SearchStatus::found; }
};

using LabelingOutcome = SearchOutcome<Certificate>;

// Every search assigns labels in index order and tries elements in
// enumeration order, so a Found witness is the lexicographically first
// solution (unless an earlier root branch ran out of budget).
// NotExists is reported only after the whole space was exhausted.

/// Edge labelings with equitable edge and induced vertex classes. `prefix`
/// pins the labels of the first edges.
LabelingOutcome search_ea_cordial(const SimpleGraph& graph, const GroupSpec& spec, SearchBudget budget = {},
                                  const std::vector<GroupElement>& prefix = {});

/// Vertex labelings with equitable vertex and induced edge classes.
LabelingOutcome search_a_cordial(const SimpleGraph& graph, const GroupSpec& spec, SearchBudget budget = {});

/// Injective edge labelings of a tree on |A| vertices with distinct vertex sums
/// (0 allowed). Throws std::invalid_argument unless the tree has |A| vertices.
LabelingOutcome search_a_antimagic(const SimpleGraph& tree, const GroupSpec& spec, SearchBudget budget = {});

/// Bijections E -> A \ {0} with distinct vertex sums.
LabelingOutcome search_a_star_antimagic(const SimpleGraph& tree, const GroupSpec& spec, SearchBudget budget = {});

}  // namespace grouplabel
