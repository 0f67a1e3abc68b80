#include "grouplabel/rstar.hpp"

#include <set>
#include <stdexcept>

namespace grouplabel {
namespace {

class RStarSearch {
 public:
  RStarSearch(const GroupTable& t, std::uint64_t budget)
      : t_(t), n_(t.order()), len_(n_ - 1), budget_(budget), used_(n_, false), diff_used_(n_, false), seq_(len_, 0) {}

  enum class Result { found, dead, aborted };

  Result run() { return dfs(0); }

  const std::vector<int>& seq() const { return seq_; }
  std::size_t star() const { return star_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::optional<std::size_t> star_position() const {
    for (int i = 0; i < len_; ++i) {
      int prev = seq_[(i + len_ - 1) % len_], next = seq_[(i + 1) % len_];
      if (t_.add(prev, next) == seq_[i]) return static_cast<std::size_t>(i);
    }
    return std::nullopt;
  }

  Result dfs(int depth) {
    if (depth == len_) {
      if (diff_used_[t_.sub(seq_[0], seq_[len_ - 1])]) return Result::dead;
      auto star = star_position();
      if (!star) return Result::dead;
      star_ = *star;
      return Result::found;
    }
    for (int c = 1; c < n_; ++c) {
      if (used_[c]) continue;
      if (++nodes_ > budget_) return Result::aborted;
      int d = depth > 0 ? t_.sub(c, seq_[depth - 1]) : -1;
      if (d >= 0 && diff_used_[d]) continue;
      used_[c] = true;
      if (d >= 0) diff_used_[d] = true;
      seq_[depth] = c;
      auto r = dfs(depth + 1);
      if (r == Result::found) return r;
      used_[c] = false;
      if (d >= 0) diff_used_[d] = false;
      if (r == Result::aborted) return r;
    }
    return Result::dead;
  }

  const GroupTable& t_;
  int n_;
  int len_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> used_;
  std::vector<bool> diff_used_;
  std::vector<int> seq_;
  std::size_t star_ = 0;
};

}  // namespace

bool is_r_sequencing(const GroupSpec& group, const std::vector<GroupElement>& seq) {
  if (static_cast<std::int64_t>(seq.size()) != group.order() - 1) return false;
  std::set<GroupElement> elements, diffs;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!group.conforms(seq[i]) || seq[i] == group.zero()) return false;
    elements.insert(seq[i]);
    diffs.insert(subtract(group, seq[(i + 1) % seq.size()], seq[i]));
  }
  return elements.size() == seq.size() && diffs.size() == seq.size();
}

std::optional<std::size_t> find_star(const GroupSpec& group, const std::vector<GroupElement>& seq) {
  std::size_t len = seq.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (add(group, seq[(i + len - 1) % len], seq[(i + 1) % len]) == seq[i]) return i;
  }
  return std::nullopt;
}

void validate(const RStarSequence& rs) {
  if (rs.seq.size() < 3) throw std::invalid_argument("R*-sequences need at least 3 nonzero elements");
  if (!is_r_sequencing(rs.group, rs.seq)) throw std::invalid_argument("not an R-sequencing of the nonzero elements");
  std::size_t len = rs.seq.size();
  std::size_t i = rs.star_index;
  if (i >= len || add(rs.group, rs.seq[(i + len - 1) % len], rs.seq[(i + 1) % len]) != rs.seq[i]) {
    throw std::invalid_argument("star condition fails at star_index");
  }
}

SearchOutcome<RStarSequence> search_rstar_sequence(const GroupSpec& spec, SearchBudget budget) {
  if (spec.order() - 1 < 3) return {SearchStatus::not_exists, std::nullopt, 0};
  GroupTable table(spec);
  // the cyclic differences telescope to 0, and they cover every nonzero element once
  int total = 0;
  for (int a = 0; a < table.order(); ++a) total = table.add(total, a);
  if (total != 0) return {SearchStatus::not_exists, std::nullopt, 0};
  RStarSearch s(table, budget.nodes);
  auto r = s.run();
  SearchOutcome<RStarSequence> out{SearchStatus::unknown, std::nullopt, s.nodes()};
  if (r == RStarSearch::Result::found) {
    RStarSequence rs{spec, {}, s.star()};
    for (int a : s.seq()) rs.seq.push_back(table.element(a));
    validate(rs);
    out.status = SearchStatus::found;
    out.witness = std::move(rs);
  } else if (r == RStarSearch::Result::dead) {
    out.status = SearchStatus::not_exists;
  }
  return out;
}

}  // namespace grouplabel
