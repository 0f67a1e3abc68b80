#include <gtest/gtest.h>

#include <random>

#include "grouplabel/group.hpp"
#include "oracle.hpp"

using namespace grouplabel;

namespace {

GroupSpec random_spec(std::mt19937_64& rng, int max_rank = 3, int max_factor = 9) {
  std::uniform_int_distribution<int> rank(1, max_rank), factor(2, max_factor);
  std::vector<std::int64_t> f(rank(rng));
  for (auto& d : f) d = factor(rng);
  return GroupSpec(f);
}

GroupElement random_element(std::mt19937_64& rng, const GroupSpec& g) {
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  return g.element_at(pick(rng));
}

}  // namespace

TEST(GroupSpec, OrderAndParse) {
  EXPECT_EQ(GroupSpec({8, 3}).order(), 24);
  EXPECT_EQ(GroupSpec::parse("Z8xZ3"), GroupSpec({8, 3}));
  EXPECT_EQ(GroupSpec::parse("z2XZ2xz2"), GroupSpec({2, 2, 2}));
  EXPECT_TRUE(GroupSpec::parse("Z1").is_trivial());
  EXPECT_EQ(GroupSpec::parse("Z1").order(), 1);
  EXPECT_EQ(GroupSpec({4, 2}).to_string(), "Z4xZ2");
  EXPECT_THROW(GroupSpec::parse("Q3"), InvalidSpec);
  EXPECT_THROW(GroupSpec::parse("Z"), InvalidSpec);
  EXPECT_THROW(GroupSpec::parse("Z8x"), InvalidSpec);
  EXPECT_THROW(GroupSpec({1}), InvalidSpec);
  EXPECT_THROW(GroupSpec({4, 0}), InvalidSpec);
}

TEST(GroupSpec, ParseRoundTrips) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto g = random_spec(rng, 4, 30);
    EXPECT_EQ(GroupSpec::parse(g.to_string()), g);
  }
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize_spec(GroupSpec({24})), GroupSpec({8, 3}));
  EXPECT_EQ(canonicalize_spec(GroupSpec({4, 2, 3})), GroupSpec({2, 4, 3}));
  EXPECT_EQ(canonicalize_spec(GroupSpec({6, 6})), GroupSpec({2, 2, 3, 3}));
  std::vector<std::int64_t> bad{4, 1};
  EXPECT_THROW(canonicalize_spec(std::span<const std::int64_t>(bad)), InvalidSpec);
}

TEST(Canonicalize, IdempotentAndOrderPreserving) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    auto g = random_spec(rng, 4, 40);
    auto c = canonicalize_spec(g);
    EXPECT_EQ(canonicalize_spec(c), c);
    EXPECT_EQ(c.order(), g.order());
    EXPECT_TRUE(isomorphic(g, c));
  }
}

TEST(Canonicalize, IsomorphismClasses) {
  EXPECT_TRUE(isomorphic(GroupSpec({6}), GroupSpec({2, 3})));
  EXPECT_TRUE(isomorphic(GroupSpec({12, 2}), GroupSpec({2, 4, 3})));
  EXPECT_FALSE(isomorphic(GroupSpec({4}), GroupSpec({2, 2})));
  EXPECT_FALSE(isomorphic(GroupSpec({8, 2}), GroupSpec({4, 4})));
}

TEST(Arithmetic, Examples) {
  GroupSpec g({8, 3});
  EXPECT_EQ(add(g, {7, 2}, {1, 1}), GroupElement({0, 0}));
  EXPECT_EQ(add(g, {5, 1}, g.zero()), GroupElement({5, 1}));
  GroupSpec e({2, 2, 2});
  EXPECT_EQ(add(e, {1, 0, 1}, {1, 0, 1}), GroupElement({0, 0, 0}));
  EXPECT_EQ(negate(g, {3, 1}), GroupElement({5, 2}));
  EXPECT_EQ(negate(g, g.zero()), g.zero());
  for (const auto& a : enumerate_elements(GroupSpec({2, 2, 2, 2}))) EXPECT_EQ(negate(GroupSpec({2, 2, 2, 2}), a), a);
  EXPECT_EQ(subtract(g, {0, 0}, {1, 1}), GroupElement({7, 2}));
}

TEST(Arithmetic, ShapeErrors) {
  GroupSpec g({8, 3});
  EXPECT_THROW(add(g, {1}, {1, 1}), InvalidElement);
  EXPECT_THROW(negate(g, {8, 0}), InvalidElement);
  EXPECT_THROW(add(g, {1, -1}, {0, 0}), InvalidElement);
}

TEST(Arithmetic, GroupAxiomsRandomized) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    auto g = random_spec(rng);
    auto a = random_element(rng, g), b = random_element(rng, g), c = random_element(rng, g);
    EXPECT_EQ(add(g, add(g, a, b), c), add(g, a, add(g, b, c)));
    EXPECT_EQ(add(g, a, b), add(g, b, a));
    EXPECT_EQ(add(g, a, g.zero()), a);
    EXPECT_EQ(add(g, a, negate(g, a)), g.zero());
    EXPECT_EQ(subtract(g, add(g, a, b), b), a);
  }
}

TEST(Arithmetic, AgreesWithIntegerOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto g = random_spec(rng);
    std::vector<int> d(g.factors().begin(), g.factors().end());
    oracle::SmallGroup A(d);
    std::uniform_int_distribution<int> pick(0, A.order - 1);
    int a = pick(rng), b = pick(rng);
    EXPECT_EQ(add(g, A.element(a), A.element(b)), A.element(A.add(a, b)));
    EXPECT_EQ(g.index_of(A.element(a)), static_cast<std::size_t>(a));
    EXPECT_EQ(g.element_at(a), A.element(a));
  }
}

TEST(Enumerate, Examples) {
  auto z4 = enumerate_elements(GroupSpec({4}));
  ASSERT_EQ(z4.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(z4[i], GroupElement({i}));
  auto v = enumerate_elements(GroupSpec({2, 2}));
  std::vector<GroupElement> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(v, expected);
  EXPECT_EQ(enumerate_elements(GroupSpec({8, 3})).size(), 24u);
  EXPECT_EQ(enumerate_elements(GroupSpec()).size(), 1u);
  EXPECT_THROW(enumerate_elements(GroupSpec({64, 64}), 1000), InvalidSpec);
}

TEST(Involutions, Examples) {
  EXPECT_EQ(involution_count(GroupSpec({4})), 1);
  EXPECT_EQ(involution_count(GroupSpec({2, 2, 2})), 7);
  EXPECT_EQ(involution_count(GroupSpec({15})), 0);
  EXPECT_EQ(involution_count(GroupSpec({6, 10})), 3);
}

TEST(Involutions, MatchEnumerationForAllGroupsUpTo64) {
  for (int n = 1; n <= 64; ++n) {
    for (const auto& g : abelian_groups_of_order(n)) {
      std::int64_t count = 0;
      for (const auto& a : enumerate_elements(g)) count += a != g.zero() && add(g, a, a) == g.zero();
      EXPECT_EQ(involution_count(g), count) << g.to_string();
    }
  }
}

TEST(Sylow, Examples) {
  auto s = sylow_split(GroupSpec({24}));
  EXPECT_EQ(s.two_part, GroupSpec({8}));
  EXPECT_EQ(s.odd_part, GroupSpec({3}));
  s = sylow_split(GroupSpec({15}));
  EXPECT_TRUE(s.two_part.is_trivial());
  EXPECT_TRUE(isomorphic(s.odd_part, GroupSpec({15})));
  s = sylow_split(GroupSpec({2, 4, 9}));
  EXPECT_EQ(s.two_part, GroupSpec({2, 4}));
  EXPECT_EQ(s.odd_part, GroupSpec({9}));
}

TEST(Sylow, ConcatenationIsomorphicRandomized) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    auto g = random_spec(rng, 4, 48);
    auto s = sylow_split(g);
    EXPECT_TRUE(isomorphic(concat(s.two_part, s.odd_part), g));
    for (auto d : s.two_part.factors()) EXPECT_EQ(d & (d - 1), 0);
    EXPECT_EQ(s.odd_part.order() % 2, 1);
  }
}

TEST(AntDecomposition, Examples) {
  auto a = ant_decomposition(GroupSpec({8, 3}));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->four_m, 8);
  EXPECT_EQ(a->h, GroupSpec({3}));
  a = ant_decomposition(GroupSpec({24}));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->four_m, 24);
  EXPECT_TRUE(a->h.is_trivial());
  EXPECT_FALSE(ant_decomposition(GroupSpec({4})));
  EXPECT_FALSE(ant_decomposition(GroupSpec({2, 4})));
  EXPECT_FALSE(ant_decomposition(GroupSpec({6})));
  EXPECT_FALSE(ant_decomposition(GroupSpec({15})));
  a = ant_decomposition(GroupSpec({4, 3}));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->four_m, 12);
  a = ant_decomposition(GroupSpec({4, 3, 3}));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->four_m, 12);
  EXPECT_EQ(a->h, GroupSpec({3}));
}

TEST(AntDecomposition, PropertyOverManyPresentations) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1500; ++i) {
    auto g = random_spec(rng, 3, 24);
    auto two = sylow_split(g).two_part;
    bool cyclic_two = two.rank() == 1 && two.order() >= 4;
    auto a = ant_decomposition(g);
    EXPECT_EQ(a.has_value(), cyclic_two && !isomorphic(g, GroupSpec({4}))) << g.to_string();
    if (!a) continue;
    EXPECT_EQ(a->four_m % 4, 0);
    EXPECT_GT(a->m(), 1);
    EXPECT_EQ(a->h.order() % 2, 1);
    EXPECT_TRUE(isomorphic(concat(GroupSpec::cyclic(a->four_m), a->h), g)) << g.to_string();
  }
}

TEST(ElementaryTwo, Examples) {
  EXPECT_TRUE(is_elementary_two(GroupSpec({2, 2, 2})));
  EXPECT_FALSE(is_elementary_two(GroupSpec({4, 2})));
  EXPECT_TRUE(is_elementary_two(GroupSpec({2})));
  EXPECT_FALSE(is_elementary_two(GroupSpec({6})));
}

TEST(AbelianGroups, CountsMatchPartitionFormula) {
  for (int n = 1; n <= 200; ++n) {
    auto groups = abelian_groups_of_order(n);
    EXPECT_EQ(static_cast<int>(groups.size()), oracle::abelian_group_count(n)) << n;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      EXPECT_EQ(groups[i].order(), n);
      EXPECT_EQ(canonicalize_spec(groups[i]), groups[i]);
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(isomorphic(groups[i], groups[j]));
    }
  }
}

TEST(CoordinateMap, IsomorphismRandomized) {
  std::mt19937_64 rng(6);
  int checked = 0;
  while (checked < 1000) {
    auto g = random_spec(rng, 3, 12);
    if (g.order() > 400) continue;
    auto target = canonicalize_spec(g);
    std::vector<std::int64_t> f(target.factors().begin(), target.factors().end());
    std::shuffle(f.begin(), f.end(), rng);
    GroupSpec shuffled(f);
    CoordinateMap phi(g, shuffled);
    auto a = random_element(rng, g), b = random_element(rng, g);
    EXPECT_EQ(phi(add(g, a, b)), add(shuffled, phi(a), phi(b)));
    EXPECT_TRUE(shuffled.conforms(phi(a)));
    ++checked;
  }
}

TEST(CoordinateMap, Bijective) {
  for (auto [s, t] : std::vector<std::pair<GroupSpec, GroupSpec>>{
           {GroupSpec({24}), GroupSpec({8, 3})}, {GroupSpec({12, 2}), GroupSpec({2, 4, 3})},
           {GroupSpec({4, 3, 3}), GroupSpec({3, 12})}, {GroupSpec({8, 9}), GroupSpec({72})}}) {
    CoordinateMap phi(s, t);
    std::set<GroupElement> image;
    for (const auto& a : enumerate_elements(s)) image.insert(phi(a));
    EXPECT_EQ(static_cast<std::int64_t>(image.size()), s.order());
    EXPECT_EQ(phi(s.zero()), t.zero());
  }
  EXPECT_THROW(CoordinateMap(GroupSpec({4}), GroupSpec({2, 2})), InvalidSpec);
}

TEST(GroupTable, AgreesWithArithmetic) {
  GroupSpec g({4, 6});
  GroupTable t(g);
  ASSERT_EQ(t.order(), 24);
  for (int a = 0; a < 24; ++a) {
    EXPECT_EQ(t.element(a), g.element_at(a));
    EXPECT_EQ(t.element(t.neg(a)), negate(g, t.element(a)));
    for (int b = 0; b < 24; ++b) EXPECT_EQ(t.element(t.add(a, b)), add(g, t.element(a), t.element(b)));
  }
}
