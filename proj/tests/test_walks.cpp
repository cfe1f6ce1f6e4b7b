#include <gtest/gtest.h>

#include "hurwitz/walks.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

HurwitzQuery query(int k, int l, Partition a, Partition b) { return HurwitzQuery{k, l, std::move(a), std::move(b)}; }

}  // namespace

TEST(GroupAlgebra, PermutationBasics) {
  const auto s12 = Permutation::transposition(3, 1, 2);
  const auto s23 = Permutation::transposition(3, 2, 3);
  EXPECT_EQ(s12 * s12, Permutation::identity(3));
  EXPECT_EQ((s12 * s23).cycle_type(), Partition{3});
  EXPECT_EQ(Permutation::identity(4).cycle_type(), Partition::ones(4));
  EXPECT_THROW(SymmetricGroup(7), LimitExceeded);
}

TEST(GroupAlgebra, ProductTableMatchesComposition) {
  const auto g = symmetric_group(4);
  for (std::size_t i = 0; i < g->order(); ++i)
    for (std::size_t j = 0; j < g->order(); ++j)
      EXPECT_EQ(g->element(g->product(i, j)), g->element(i) * g->element(j));
}

TEST(GroupAlgebra, ClassSumsAreCentral) {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      const auto c = class_sum(mu);
      for (const auto& nu : enumerate_partitions(d)) {
        const auto x = class_sum(nu);
        EXPECT_EQ(c * x, x * c);
      }
    }
  }
}

TEST(Walks, ClassSumOfIdentity) {
  const auto c = class_sum(Partition::ones(4));
  EXPECT_EQ(c.support_size(), 1u);
  EXPECT_EQ(c.coefficient(Permutation::identity(4)), 1);
}

TEST(Walks, JucysMurphyElements) {
  EXPECT_EQ(jm_element(1, 3), GroupAlgebraVector<Integer>::zero(3));
  auto j2 = GroupAlgebraVector<Integer>::zero(3);
  j2[j2.group().index_of(Permutation::transposition(3, 1, 2))] = 1;
  EXPECT_EQ(jm_element(2, 3), j2);
  auto j3 = GroupAlgebraVector<Integer>::zero(3);
  j3[j3.group().index_of(Permutation::transposition(3, 1, 3))] = 1;
  j3[j3.group().index_of(Permutation::transposition(3, 2, 3))] = 1;
  EXPECT_EQ(jm_element(3, 3), j3);
}

TEST(Walks, JucysMurphyElementsCommute) {
  for (int d = 2; d <= 5; ++d)
    for (int s = 1; s <= d; ++s)
      for (int t = 1; t <= d; ++t) EXPECT_EQ(jm_element(s, d) * jm_element(t, d), jm_element(t, d) * jm_element(s, d));
}

TEST(Walks, TimesJmMatchesConvolution) {
  const auto x = class_sum(Partition{3, 1}) + class_sum(Partition{2, 2});
  for (int t = 1; t <= 4; ++t) EXPECT_EQ(x.times_jm(t), x * jm_element(t, 4));
}

TEST(Walks, FrozenCounts) {
  EXPECT_EQ(count_walks(query(0, 0, {2, 1}, {2, 1})), 3);
  EXPECT_EQ(count_walks(query(0, 2, {3}, {3})), 12);
  EXPECT_EQ(count_walks(query(2, 0, {3}, {3})), 10);
  EXPECT_EQ(count_walks(query(0, 1, {2, 1}, {3})), 6);
  EXPECT_EQ(count_walks_direct(query(2, 0, {3}, {3})), 10);
}

TEST(Walks, DynamicProgramMatchesBruteForce) {
  for (int d = 1; d <= 4; ++d)
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l + k <= 3; ++l)
        for (const auto& a : enumerate_partitions(d))
          for (const auto& b : enumerate_partitions(d)) {
            const long expected = oracle::count_walks(k, l, a.parts(), b.parts());
            EXPECT_EQ(count_walks(query(k, l, a, b)), expected) << k << l << a << b;
            EXPECT_EQ(count_walks_direct(query(k, l, a, b)), expected) << k << l << a << b;
          }
}

TEST(Walks, DynamicProgramMatchesBruteForceAtFive) {
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l + k <= 2; ++l)
      for (const auto& a : enumerate_partitions(5))
        for (const auto& b : enumerate_partitions(5))
          EXPECT_EQ(count_walks(query(k, l, a, b)), oracle::count_walks(k, l, a.parts(), b.parts())) << k << l << a << b;
}

TEST(Walks, Limits) {
  EXPECT_THROW(count_walks(query(0, 1, {7}, {7})), LimitExceeded);
  EXPECT_THROW(count_walks(query(3, 3, {3}, {3})), LimitExceeded);
  EXPECT_THROW(count_walks(query(0, 1, {3}, {2})), SizeMismatch);
}

TEST(Walks, JmLevels) {
  for (int d = 1; d <= 6; ++d)
    for (int r = 0; r < d; ++r) EXPECT_TRUE(verify_jm_levels(d, r)) << d << " " << r;
  EXPECT_EQ(elementary_jm(3, 1), class_sum(Partition{2, 1}));
  EXPECT_THROW(verify_jm_levels(4, 4), PreconditionViolation);
}

TEST(Walks, CentralCharacters) {
  EXPECT_TRUE(verify_central_character(3, RegularFunctionSpec::parse("1")));
  EXPECT_TRUE(verify_central_character(3, RegularFunctionSpec::parse("E1")));
  EXPECT_TRUE(verify_central_character(4, RegularFunctionSpec::parse("H2")));
  EXPECT_TRUE(verify_central_character(4, RegularFunctionSpec::parse("H2+SIZE")));
  EXPECT_THROW(verify_central_character(6, RegularFunctionSpec::parse("H2")), LimitExceeded);
}

TEST(Walks, EvaluateOnJmOfE1IsTranspositionClass) {
  for (int d = 2; d <= 5; ++d) {
    const auto e1 = evaluate_on_jm(RegularFunctionSpec::parse("E1"), d);
    const auto c = class_sum(pad_with_ones(Partition{2}, d));
    for (std::size_t i = 0; i < e1.group().order(); ++i) EXPECT_EQ(e1[i], Rational(c[i]));
  }
}

TEST(Walks, SwapZeroStepAndFirstStepIdentities) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& a : enumerate_partitions(d))
      for (const auto& b : enumerate_partitions(d)) {
        EXPECT_EQ(count_walks(query(0, 0, a, b)), a == b ? class_size(a) : Integer(0));
        for (int k = 0; k <= 2; ++k)
          for (int l = 0; k + l <= 4; ++l) EXPECT_EQ(count_walks(query(k, l, a, b)), count_walks(query(k, l, b, a)));
        for (int l = 0; l <= 3; ++l) EXPECT_EQ(count_walks(query(1, l, a, b)), count_walks(query(0, l + 1, a, b)));
      }
}

TEST(Walks, DirectAndDynamicProgramAgreeAtSix) {
  for (const auto& a : enumerate_partitions(6))
    for (const auto& b : enumerate_partitions(6))
      for (int k = 0; k <= 2; ++k)
        for (int l = 0; k + l <= 2; ++l) EXPECT_EQ(count_walks(query(k, l, a, b)), count_walks_direct(query(k, l, a, b)));
}
