#pragma once

#include <cstdint>
#include <vector>

#include "grouplabel/group.hpp"
#include "grouplabel/search.hpp"

namespace grouplabel {

/// A cyclic ordering of every element of the group.
struct HamiltonianCycle {
  GroupSpec group;
  std::vector<GroupElement> order;
  std::int64_t distinct_sum_count = 0;

  friend bool operator==(const HamiltonianCycle&, const HamiltonianCycle&) = default;
};

/// Number of distinct sums order[i] + order[i+1], indices cyclic.
std::int64_t distinct_consecutive_sums(const GroupSpec& group, const std::vector<GroupElement>& order);

/// Throws std::invalid_argument unless `order` lists every element once and
/// distinct_sum_count is correct.
void validate(const HamiltonianCycle& cycle);

/// Closed form for the maximum number of distinct consecutive sums.
std::int64_t sigma_max_formula(const GroupSpec& spec);

/// Branch and bound over Hamiltonian cycles starting at 0, one orientation
/// each. Found means the maximum is proven; Unknown carries the best cycle seen.
SearchOutcome<HamiltonianCycle> compute_sigma_max(const GroupSpec& spec, SearchBudget budget = {});

/// First Hamiltonian cycle (starting at 0) whose |A| consecutive sums are
/// pairwise distinct.
SearchOutcome<HamiltonianCycle> search_rainbow_cycle(const GroupSpec& spec, SearchBudget budget = {});

}  // namespace grouplabel
