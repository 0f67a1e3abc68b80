#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grouplabel/group.hpp"
#include "grouplabel/search.hpp"

namespace grouplabel {

/// The nonzero elements listed once each so that the cyclic differences
/// seq[i+1] - seq[i] are pairwise distinct (an R-sequencing), together with a
/// position i where seq[i-1] + seq[i+1] = seq[i].
struct RStarSequence {
  GroupSpec group;
  std::vector<GroupElement> seq;
  std::size_t star_index = 0;

  friend bool operator==(const RStarSequence&, const RStarSequence&) = default;
};

bool is_r_sequencing(const GroupSpec& group, const std::vector<GroupElement>& seq);

/// First position (cyclic) satisfying the star condition.
std::optional<std::size_t> find_star(const GroupSpec& group, const std::vector<GroupElement>& seq);

/// Throws std::invalid_argument when any invariant fails. Sequences shorter
/// than 3 are degenerate and always rejected.
void validate(const RStarSequence& rs);

/// Backtracking over orderings of the nonzero elements. Groups with fewer
/// than 3 nonzero elements report NotExists without searching.
SearchOutcome<RStarSequence> search_rstar_sequence(const GroupSpec& spec, SearchBudget budget = {});

}  // namespace grouplabel
