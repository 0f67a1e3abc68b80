#include "grouplabel/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace grouplabel {
namespace {

// Dead states remembered per root branch.
constexpr std::size_t kMemoCap = std::size_t{1} << 20;

// Assign labels to `items` in index order; each derived quantity is the sum of
// the labels of its member items. Both sides must end up equitable, and the
// item labels may exclude zero. Edge labelings (items = edges, derived =
// vertex sums) and vertex labelings (items = vertices, derived = edge sums)
// are both instances.
struct SumProblem {
  int order = 0;
  int items = 0;
  int derived = 0;
  std::vector<std::vector<int>> item_to_derived;
  std::vector<std::vector<int>> completing;  // derived whose last member is item i
  std::vector<std::vector<int>> open_after;  // derived touched but incomplete after item i
  std::vector<int> memberless;               // derived that are constantly 0
  std::vector<int> derived_remaining_after;  // derived still incomplete after item i
  int item_cap = 0, item_floor = 0, derived_cap = 0, derived_floor = 0;
  bool forbid_zero = false;
  std::vector<int> prefix;
};

SumProblem make_problem(int order, int items, const std::vector<std::vector<int>>& members, bool forbid_zero,
                        std::vector<int> prefix) {
  SumProblem p;
  p.order = order;
  p.items = items;
  p.derived = static_cast<int>(members.size());
  p.item_to_derived.resize(items);
  p.completing.resize(items);
  p.open_after.resize(items);
  p.derived_remaining_after.assign(items, 0);
  std::vector<int> first(p.derived, -1), last(p.derived, -1);
  for (int j = 0; j < p.derived; ++j) {
    if (members[j].empty()) {
      p.memberless.push_back(j);
      continue;
    }
    first[j] = *std::min_element(members[j].begin(), members[j].end());
    last[j] = *std::max_element(members[j].begin(), members[j].end());
    for (int i : members[j]) p.item_to_derived[i].push_back(j);
    p.completing[last[j]].push_back(j);
  }
  for (int i = 0; i < items; ++i) {
    for (int j = 0; j < p.derived; ++j) {
      if (last[j] < 0) continue;
      if (first[j] <= i && last[j] > i) p.open_after[i].push_back(j);
      if (last[j] > i) ++p.derived_remaining_after[i];
    }
  }
  p.item_floor = items / order;
  p.item_cap = (items + order - 1) / order;
  p.derived_floor = p.derived / order;
  p.derived_cap = (p.derived + order - 1) / order;
  p.forbid_zero = forbid_zero;
  p.prefix = std::move(prefix);
  return p;
}

enum class Result { found, dead, aborted };

class BranchSearch {
 public:
  BranchSearch(const SumProblem& p, const GroupTable& t, int root_label, std::uint64_t budget)
      : p_(p), t_(t), root_label_(root_label), budget_(budget), labels_(p.items, -1), item_count_(p.order, 0),
        derived_count_(p.order, 0), partial_(p.derived, 0) {
    item_deficit_ = p.order * p.item_floor;
    derived_deficit_ = p.order * p.derived_floor;
    for (std::size_t k = 0; k < p.memberless.size(); ++k) bump_derived(0, +1);
  }

  Result run() {
    if (p_.items == 0) return deficits_ok(-1) && over_ == 0 ? Result::found : Result::dead;
    return dfs(0);
  }

  const std::vector<int>& labels() const { return labels_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void bump_item(int a, int delta) {
    int before = item_count_[a];
    item_count_[a] += delta;
    if (delta > 0) {
      if (before < p_.item_floor) --item_deficit_;
      if (before == p_.item_cap) ++over_;
    } else {
      if (item_count_[a] < p_.item_floor) ++item_deficit_;
      if (item_count_[a] == p_.item_cap) --over_;
    }
  }

  void bump_derived(int a, int delta) {
    int before = derived_count_[a];
    derived_count_[a] += delta;
    if (delta > 0) {
      if (before < p_.derived_floor) --derived_deficit_;
      if (before == p_.derived_cap) ++over_;
    } else {
      if (derived_count_[a] < p_.derived_floor) ++derived_deficit_;
      if (derived_count_[a] == p_.derived_cap) --over_;
    }
  }

  void assign(int i, int a) {
    labels_[i] = a;
    bump_item(a, +1);
    for (int j : p_.item_to_derived[i]) partial_[j] = t_.add(partial_[j], a);
    for (int j : p_.completing[i]) bump_derived(partial_[j], +1);
  }

  void unassign(int i, int a) {
    for (int j : p_.completing[i]) bump_derived(partial_[j], -1);
    for (int j : p_.item_to_derived[i]) partial_[j] = t_.sub(partial_[j], a);
    bump_item(a, -1);
    labels_[i] = -1;
  }

  bool deficits_ok(int i) const {
    int items_left = p_.items - (i + 1);
    int derived_left = i < 0 ? p_.derived - static_cast<int>(p_.memberless.size()) : p_.derived_remaining_after[i];
    return item_deficit_ <= items_left && derived_deficit_ <= derived_left;
  }

  std::string key(int i) const {
    // two bytes per field; counts and indices stay below 2^16 for any searchable size
    std::string k;
    k.reserve(2 * (1 + 2 * p_.order + p_.open_after[i].size()));
    auto put = [&k](int v) {
      k.push_back(static_cast<char>(v & 0xff));
      k.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    put(i);
    for (int c : item_count_) put(c);
    for (int c : derived_count_) put(c);
    for (int j : p_.open_after[i]) put(partial_[j]);
    return k;
  }

  Result dfs(int i) {
    if (i == p_.items) return Result::found;
    int lo = 0, hi = p_.order - 1;
    if (i < static_cast<int>(p_.prefix.size())) {
      lo = hi = p_.prefix[i];
    } else if (i == 0) {
      lo = hi = root_label_;
    }
    for (int a = lo; a <= hi; ++a) {
      if (p_.forbid_zero && a == 0) continue;
      if (++nodes_ > budget_) return Result::aborted;
      assign(i, a);
      if (over_ != 0 || !deficits_ok(i)) {
        unassign(i, a);
        continue;
      }
      std::string k = key(i);
      if (dead_.contains(k)) {
        unassign(i, a);
        continue;
      }
      Result r = dfs(i + 1);
      if (r == Result::found) return r;
      if (r == Result::aborted) {
        unassign(i, a);
        return r;
      }
      if (dead_.size() < kMemoCap) dead_.insert(std::move(k));
      unassign(i, a);
    }
    return Result::dead;
  }

  const SumProblem& p_;
  const GroupTable& t_;
  int root_label_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> labels_;
  std::vector<int> item_count_;
  std::vector<int> derived_count_;
  std::vector<int> partial_;
  int item_deficit_ = 0;
  int derived_deficit_ = 0;
  int over_ = 0;
  std::unordered_set<std::string> dead_;
};

struct SumSolution {
  SearchStatus status = SearchStatus::unknown;
  std::vector<int> labels;
  std::uint64_t nodes = 0;
};

SumSolution solve(const SumProblem& p, const GroupTable& t, SearchBudget budget) {
  std::vector<int> roots;
  if (p.items == 0) {
    roots.push_back(0);
  } else if (!p.prefix.empty()) {
    roots.push_back(p.prefix.front());
  } else {
    for (int a = 0; a < p.order; ++a) {
      if (!(p.forbid_zero && a == 0)) roots.push_back(a);
    }
  }

  struct BranchResult {
    Result result = Result::dead;
    std::vector<int> labels;
    std::uint64_t nodes = 0;
  };
  std::vector<BranchResult> results(roots.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
  auto worker = [&] {
    for (std::size_t b; (b = next.fetch_add(1)) < roots.size();) {
      // branches past a known solution cannot change the answer
      if (b > first_found.load()) continue;
      BranchSearch s(p, t, roots[b], budget.nodes);
      auto r = s.run();
      results[b] = {r, s.labels(), s.nodes()};
      if (r == Result::found) {
        auto cur = first_found.load();
        while (b < cur && !first_found.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(budget.threads, static_cast<unsigned>(roots.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  SumSolution out;
  bool unknown = false;
  for (std::size_t b = 0; b < roots.size(); ++b) {
    out.nodes += results[b].nodes;
    if (results[b].result == Result::found) {
      out.status = SearchStatus::found;
      out.labels = results[b].labels;
      return out;
    }
    unknown |= results[b].result == Result::aborted;
  }
  out.status = unknown ? SearchStatus::unknown : SearchStatus::not_exists;
  return out;
}

std::vector<int> prefix_indices(const GroupTable& t, const std::vector<GroupElement>& prefix) {
  std::vector<int> out;
  for (const auto& a : prefix) out.push_back(t.index(a));
  return out;
}

LabelingOutcome edge_search(Notion notion, const SimpleGraph& graph, const GroupSpec& spec, SearchBudget budget,
                            bool forbid_zero, const std::vector<GroupElement>& prefix) {
  GroupTable table(spec);
  if (graph.n() >= 65536) throw std::invalid_argument("graph too large for exhaustive search");
  if (prefix.size() > graph.edge_count()) throw std::invalid_argument("prefix longer than the edge list");
  std::vector<std::vector<int>> members(static_cast<std::size_t>(graph.n()));
  for (int v = 0; v < graph.n(); ++v) members[v] = graph.incident(v);
  auto problem = make_problem(table.order(), static_cast<int>(graph.edge_count()), members, forbid_zero,
                              prefix_indices(table, prefix));
  auto sol = solve(problem, table, budget);
  LabelingOutcome out{sol.status, std::nullopt, sol.nodes};
  if (sol.status == SearchStatus::found) {
    EdgeLabeling f{spec, {}};
    for (int a : sol.labels) f.labels.push_back(table.element(a));
    out.witness = certify(notion, graph, f);
    if (!out.witness->verdict.ok()) throw std::logic_error("search produced a labeling that fails verification");
  }
  return out;
}

void require_tree_of_group_order(const SimpleGraph& tree, const GroupSpec& spec) {
  if (!tree.is_tree_shaped()) throw std::invalid_argument("antimagic searches need a tree");
  if (tree.n() != spec.order()) {
    throw std::invalid_argument("antimagic searches need a tree on |A| = " + std::to_string(spec.order()) +
                                " vertices, got " + std::to_string(tree.n()));
  }
}

}  // namespace

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::not_exists: return "not-exists";
    case SearchStatus::unknown: return "unknown";
  }
  return "unknown";
}

LabelingOutcome search_ea_cordial(const SimpleGraph& graph, const GroupSpec& spec, SearchBudget budget,
                                  const std::vector<GroupElement>& prefix) {
  return edge_search(Notion::ea_cordial, graph, spec, budget, false, prefix);
}

LabelingOutcome search_a_cordial(const SimpleGraph& graph, const GroupSpec& spec, SearchBudget budget) {
  GroupTable table(spec);
  if (graph.n() >= 65536) throw std::invalid_argument("graph too large for exhaustive search");
  std::vector<std::vector<int>> members;
  for (auto [u, v] : graph.edges()) members.push_back({u, v});
  auto problem = make_problem(table.order(), graph.n(), members, false, {});
  auto sol = solve(problem, table, budget);
  LabelingOutcome out{sol.status, std::nullopt, sol.nodes};
  if (sol.status == SearchStatus::found) {
    VertexLabeling c{spec, {}};
    for (int a : sol.labels) c.labels.push_back(table.element(a));
    out.witness = certify(graph, c);
    if (!out.witness->verdict.ok()) throw std::logic_error("search produced a labeling that fails verification");
  }
  return out;
}

LabelingOutcome search_a_antimagic(const SimpleGraph& tree, const GroupSpec& spec, SearchBudget budget) {
  require_tree_of_group_order(tree, spec);
  // with |V| = |A| and |E| = |A| - 1 the equitable bounds are exactly "injective"
  return edge_search(Notion::a_antimagic, tree, spec, budget, false, {});
}

LabelingOutcome search_a_star_antimagic(const SimpleGraph& tree, const GroupSpec& spec, SearchBudget budget) {
  require_tree_of_group_order(tree, spec);
  return edge_search(Notion::a_star_antimagic, tree, spec, budget, true, {});
}

}  // namespace grouplabel
