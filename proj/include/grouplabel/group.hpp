#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grouplabel {

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of a direct product of cyclic groups, one residue per factor.
struct GroupElement {
  std::vector<std::int64_t> residues;

  GroupElement() = default;
  GroupElement(std::initializer_list<std::int64_t> r) : residues(r) {}
  explicit GroupElement(std::vector<std::int64_t> r) : residues(std::move(r)) {}

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A finite Abelian group Z_{d_1} + ... + Z_{d_r} in the factor order it was
/// given. The empty factor list is the trivial group.
class GroupSpec {
 public:
  GroupSpec() = default;
  explicit GroupSpec(std::vector<std::int64_t> factors);

  static GroupSpec cyclic(std::int64_t n);
  /// Parses "Z8xZ3" (case-insensitive). "Z1" is the trivial group.
  static GroupSpec parse(std::string_view text);

  std::span<const std::int64_t> factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const { return order_; }
  bool is_trivial() const { return factors_.empty(); }

  GroupElement zero() const;
  bool conforms(const GroupElement& a) const;
  void require_conforming(const GroupElement& a) const;

  /// Mixed-radix index of an element, last coordinate fastest.
  std::size_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::size_t index) const;

  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
};

/// Direct sum of two presentations, factors of `first` then `second`.
GroupSpec concat(const GroupSpec& first, const GroupSpec& second);

/// Primary decomposition into prime-power factors sorted by (prime, exponent).
GroupSpec canonicalize_spec(std::span<const std::int64_t> factors);
GroupSpec canonicalize_spec(const GroupSpec& spec);
bool isomorphic(const GroupSpec& a, const GroupSpec& b);

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupSpec& spec, const GroupElement& a);
GroupElement subtract(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);

inline constexpr std::int64_t kDefaultEnumerationCap = std::int64_t{1} << 20;

/// All elements in mixed-radix lexicographic order (last coordinate fastest).
std::vector<GroupElement> enumerate_elements(const GroupSpec& spec,
                                             std::int64_t cap = kDefaultEnumerationCap);

/// Number of elements of order exactly 2, i.e. 2^e - 1 with e the number of
/// even-order factors in the primary decomposition.
std::int64_t involution_count(const GroupSpec& spec);

struct SylowSplit {
  GroupSpec two_part;
  GroupSpec odd_part;
};

/// Splits into the Sylow 2-subgroup and the odd-order complement, both in
/// primary form.
SylowSplit sylow_split(const GroupSpec& spec);

/// A presentation spec = Z_{four_m} + h with four_m = 4m, m > 1 and |h| odd.
struct AntDecomposition {
  std::int64_t four_m = 0;
  GroupSpec h;

  std::int64_t m() const { return four_m / 4; }
};

/// Present only when the Sylow 2-part is cyclic of order at least 4 and the
/// group is not Z4 itself. A group given as a single cyclic factor keeps it
/// whole; otherwise a 2-part of order >= 8 is taken alone, and a 2-part of
/// order 4 absorbs the largest cyclic odd-order piece.
std::optional<AntDecomposition> ant_decomposition(const GroupSpec& spec);

bool is_elementary_two(const GroupSpec& spec);

/// Every isomorphism class of Abelian group of order n, in primary form,
/// ordered by their factor lists.
std::vector<GroupSpec> abelian_groups_of_order(std::int64_t n);

/// An explicit isomorphism between two presentations of the same group,
/// built by matching prime-power components of the two primary decompositions.
class CoordinateMap {
 public:
  CoordinateMap(GroupSpec source, GroupSpec target);

  const GroupSpec& source() const { return source_; }
  const GroupSpec& target() const { return target_; }

  GroupElement operator()(const GroupElement& a) const;

 private:
  struct Slot {
    std::size_t factor;
    std::int64_t modulus;  // p^e
  };
  GroupSpec source_;
  GroupSpec target_;
  std::vector<Slot> source_slots_;
  std::vector<Slot> target_slots_;  // target_slots_[k] receives source_slots_[k]
};

/// Addition and negation tables over element indices, for searches over
/// small groups.
class GroupTable {
 public:
  static constexpr std::int64_t kMaxOrder = 1024;

  explicit GroupTable(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  int order() const { return order_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  const GroupElement& element(int index) const { return elements_[index]; }
  int index(const GroupElement& a) const { return static_cast<int>(spec_.index_of(a)); }

 private:
  GroupSpec spec_;
  int order_;
  std::vector<GroupElement> elements_;
  std::vector<int> add_;
  std::vector<int> neg_;
};

}  // namespace grouplabel
