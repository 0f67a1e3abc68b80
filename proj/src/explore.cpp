#include "grouplabel/explore.hpp"

#include <stdexcept>

#include "grouplabel/trees.hpp"

namespace grouplabel {
namespace {

Json outcome_to_json(const LabelingOutcome& o) {
  Json out;
  out["status"] = std::string(to_string(o.status));
  out["nodes_explored"] = o.nodes_explored;
  out["certificate"] = o.witness ? to_json(*o.witness) : Json(nullptr);
  return out;
}

}  // namespace

bool ExplorationRow::counterexample() const {
  if (antimagic.status == SearchStatus::unknown) return false;
  return antimagic.found() != expected();
}

std::size_t ExplorationReport::unknown_rows() const {
  std::size_t count = 0;
  for (const auto& r : rows) count += r.antimagic.status == SearchStatus::unknown || r.star.status == SearchStatus::unknown;
  return count;
}

std::vector<const ExplorationRow*> ExplorationReport::counterexamples() const {
  std::vector<const ExplorationRow*> out;
  for (const auto& r : rows)
    if (r.counterexample()) out.push_back(&r);
  return out;
}

ExplorationReport explore_conjecture(int n_max, SearchBudget budget) {
  if (n_max < 2 || n_max > kMaxExploration) throw std::domain_error("explore_conjecture needs 2 <= n_max <= 10");
  ExplorationReport report;
  report.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    auto groups = abelian_groups_of_order(n);
    for (const auto& tree : enumerate_trees(n)) {
      StarSummary summary{n, canonical_tree_form(tree), SearchStatus::found};
      bool unsettled = false;
      for (const auto& g : groups) {
        ExplorationRow row{n, g, tree, summary.tree_form, search_a_antimagic(tree, g, budget),
                           search_a_star_antimagic(tree, g, budget)};
        if (involution_count(g) != 1) {
          if (row.star.status == SearchStatus::not_exists) summary.all_groups = SearchStatus::not_exists;
          if (row.star.status == SearchStatus::unknown) unsettled = true;
        }
        report.rows.push_back(std::move(row));
      }
      if (unsettled && summary.all_groups == SearchStatus::found) summary.all_groups = SearchStatus::unknown;
      report.star_summaries.push_back(std::move(summary));
    }
  }
  return report;
}

Json to_json(const ExplorationReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["n"] = r.n;
    row["group"] = group_to_json(r.group);
    row["tree"] = r.tree_form;
    row["graph"] = graph_to_json(r.tree);
    row["expected_antimagic"] = r.expected();
    row["a_antimagic"] = outcome_to_json(r.antimagic);
    row["a_star_antimagic"] = outcome_to_json(r.star);
    rows.push_back(std::move(row));
  }
  Json counter = Json::array();
  for (const auto* r : report.counterexamples()) {
    Json c;
    c["n"] = r->n;
    c["group"] = group_to_json(r->group);
    c["tree"] = r->tree_form;
    c["certificate"] = r->antimagic.witness ? to_json(*r->antimagic.witness) : Json(nullptr);
    counter.push_back(std::move(c));
  }
  Json summaries = Json::array();
  for (const auto& s : report.star_summaries) {
    summaries.push_back({{"n", s.n}, {"tree", s.tree_form}, {"star_for_all_groups", std::string(to_string(s.all_groups))}});
  }
  Json out;
  out["n_max"] = report.n_max;
  out["rows"] = std::move(rows);
  out["counterexamples"] = std::move(counter);
  out["conjecture_consistent"] = counter.empty();
  out["unknown_rows"] = report.unknown_rows();
  out["star_summaries"] = std::move(summaries);
  return out;
}

}  // namespace grouplabel
