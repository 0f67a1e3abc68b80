#include "grouplabel/sigma.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace grouplabel {
namespace {

HamiltonianCycle make_cycle(const GroupTable& t, const std::vector<int>& order) {
  HamiltonianCycle c{t.spec(), {}, 0};
  for (int a : order) c.order.push_back(t.element(a));
  c.distinct_sum_count = distinct_consecutive_sums(c.group, c.order);
  return c;
}

void require_nontrivial(const GroupSpec& spec) {
  if (spec.order() < 2) throw std::invalid_argument("sum-rainbow cycles need |A| >= 2");
}

class SigmaSearch {
 public:
  SigmaSearch(const GroupTable& t, std::uint64_t budget)
      : t_(t), n_(t.order()), budget_(budget), used_(n_, false), sum_count_(n_, 0), order_(n_, 0) {}

  bool run() {
    used_[0] = true;
    return dfs(1);
  }

  int best() const { return best_; }
  const std::vector<int>& best_order() const { return best_order_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // returns false when the budget ran out
  bool dfs(int depth) {
    if (depth == n_) {
      if (n_ >= 3 && order_[1] > order_[n_ - 1]) return true;  // other orientation
      int closing = t_.add(order_[n_ - 1], order_[0]);
      int total = distinct_ + (sum_count_[closing] == 0);
      if (total > best_) {
        best_ = total;
        best_order_ = order_;
      }
      return true;
    }
    for (int c = 1; c < n_; ++c) {
      if (used_[c]) continue;
      if (best_ == n_) return true;
      if (++nodes_ > budget_) return false;
      int s = t_.add(order_[depth - 1], c);
      int fresh = distinct_ + (sum_count_[s] == 0);
      // edges still to place after c, including the closing one
      int bound = std::min(n_, fresh + (n_ - depth));
      if (bound <= best_) continue;
      used_[c] = true;
      order_[depth] = c;
      ++sum_count_[s];
      distinct_ = fresh;
      bool ok = dfs(depth + 1);
      --sum_count_[s];
      distinct_ -= (sum_count_[s] == 0);
      used_[c] = false;
      if (!ok) return false;
    }
    return true;
  }

  const GroupTable& t_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> used_;
  std::vector<int> sum_count_;
  std::vector<int> order_;
  int distinct_ = 0;
  int best_ = 0;
  std::vector<int> best_order_;
};

class RainbowSearch {
 public:
  RainbowSearch(const GroupTable& t, std::uint64_t budget)
      : t_(t), n_(t.order()), budget_(budget), used_(n_, false), sum_used_(n_, false), order_(n_, 0) {}

  enum class Result { found, dead, aborted };

  Result run() {
    used_[0] = true;
    return dfs(1);
  }

  const std::vector<int>& order() const { return order_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Key {
    std::uint64_t used, sums;
    int last;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>{}(k.used * 0x9e3779b97f4a7c15ULL ^ k.sums) ^ static_cast<std::size_t>(k.last);
    }
  };

  Key key(int depth) const {
    Key k{0, 0, order_[depth - 1]};
    for (int a = 0; a < n_; ++a) {
      if (used_[a]) k.used |= std::uint64_t{1} << a;
      if (sum_used_[a]) k.sums |= std::uint64_t{1} << a;
    }
    return k;
  }

  Result dfs(int depth) {
    if (depth == n_) return sum_used_[t_.add(order_[n_ - 1], order_[0])] ? Result::dead : Result::found;
    for (int c = 1; c < n_; ++c) {
      if (used_[c]) continue;
      if (++nodes_ > budget_) return Result::aborted;
      int s = t_.add(order_[depth - 1], c);
      if (sum_used_[s]) continue;
      used_[c] = true;
      sum_used_[s] = true;
      order_[depth] = c;
      bool memo = n_ <= 64 && depth + 1 < n_;
      Key k{};
      Result r = Result::dead;
      if (memo) k = key(depth + 1);
      if (!memo || !dead_.contains(k)) {
        r = dfs(depth + 1);
        if (r == Result::dead && memo) dead_.insert(k);
      }
      if (r == Result::found) return r;
      used_[c] = false;
      sum_used_[s] = false;
      if (r == Result::aborted) return r;
    }
    return Result::dead;
  }

  const GroupTable& t_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> used_;
  std::vector<bool> sum_used_;
  std::vector<int> order_;
  std::unordered_set<Key, KeyHash> dead_;
};

}  // namespace

std::int64_t distinct_consecutive_sums(const GroupSpec& group, const std::vector<GroupElement>& order) {
  std::set<GroupElement> sums;
  for (std::size_t i = 0; i < order.size(); ++i) sums.insert(add(group, order[i], order[(i + 1) % order.size()]));
  return static_cast<std::int64_t>(sums.size());
}

void validate(const HamiltonianCycle& cycle) {
  if (static_cast<std::int64_t>(cycle.order.size()) != cycle.group.order()) {
    throw std::invalid_argument("Hamiltonian cycle must visit every element");
  }
  std::set<GroupElement> seen(cycle.order.begin(), cycle.order.end());
  for (const auto& a : cycle.order) cycle.group.require_conforming(a);
  if (seen.size() != cycle.order.size()) throw std::invalid_argument("Hamiltonian cycle repeats an element");
  if (distinct_consecutive_sums(cycle.group, cycle.order) != cycle.distinct_sum_count) {
    throw std::invalid_argument("distinct_sum_count does not match the cycle");
  }
}

std::int64_t sigma_max_formula(const GroupSpec& spec) {
  require_nontrivial(spec);
  auto involutions = involution_count(spec);
  if (involutions == 1) return spec.order() - 1;
  if (is_elementary_two(spec)) return spec.order() - 2;
  return spec.order();
}

SearchOutcome<HamiltonianCycle> compute_sigma_max(const GroupSpec& spec, SearchBudget budget) {
  require_nontrivial(spec);
  GroupTable table(spec);
  SigmaSearch s(table, budget.nodes);
  bool complete = s.run();
  SearchOutcome<HamiltonianCycle> out{complete ? SearchStatus::found : SearchStatus::unknown, std::nullopt, s.nodes()};
  if (!s.best_order().empty()) out.witness = make_cycle(table, s.best_order());
  return out;
}

SearchOutcome<HamiltonianCycle> search_rainbow_cycle(const GroupSpec& spec, SearchBudget budget) {
  require_nontrivial(spec);
  GroupTable table(spec);
  // the consecutive sums total twice the element sum, and a rainbow cycle hits each element once
  int total = 0;
  for (int a = 0; a < table.order(); ++a) total = table.add(total, a);
  if (total != 0) return {SearchStatus::not_exists, std::nullopt, 0};
  std::vector<bool> reachable(table.order());
  for (int a = 0; a < table.order(); ++a)
    for (int b = a + 1; b < table.order(); ++b) reachable[table.add(a, b)] = true;
  if (std::find(reachable.begin(), reachable.end(), false) != reachable.end())
    return {SearchStatus::not_exists, std::nullopt, 0};
  RainbowSearch s(table, budget.nodes);
  auto r = s.run();
  SearchOutcome<HamiltonianCycle> out{SearchStatus::unknown, std::nullopt, s.nodes()};
  if (r == RainbowSearch::Result::found) {
    out.status = SearchStatus::found;
    out.witness = make_cycle(table, s.order());
    if (out.witness->distinct_sum_count != spec.order()) throw std::logic_error("rainbow search produced a repeated sum");
  } else if (r == RainbowSearch::Result::dead) {
    out.status = SearchStatus::not_exists;
  }
  return out;
}

}  // namespace grouplabel
