#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplabel/certificate.hpp"
#include "grouplabel/search.hpp"

namespace grouplabel {

struct ExplorationRow {
  int n = 0;
  GroupSpec group;
  SimpleGraph tree;
  std::string tree_form;
  LabelingOutcome antimagic;
  LabelingOutcome star;

  /// The conjectured answer for A-antimagic: n is not 2 mod 4.
  bool expected() const { return n % 4 != 2; }
  /// Settled rows that disagree with the conjecture.
  bool counterexample() const;
};

/// For one tree: is it A*-antimagic for every group of its order with
/// |I(A)| != 1? Unknown if some search ran out before a NotExists appeared.
struct StarSummary {
  int n = 0;
  std::string tree_form;
  SearchStatus all_groups = SearchStatus::unknown;
};

struct ExplorationReport {
  int n_max = 0;
  std::vector<ExplorationRow> rows;
  std::vector<StarSummary> star_summaries;

  std::size_t unknown_rows() const;
  std::vector<const ExplorationRow*> counterexamples() const;
};

inline constexpr int kMaxExploration = 10;

/// Every tree on n vertices against every Abelian group of order n, for
/// 2 <= n <= n_max.
ExplorationReport explore_conjecture(int n_max, SearchBudget budget = {});

Json to_json(const ExplorationReport& report);

}  // namespace grouplabel
