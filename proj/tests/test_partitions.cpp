#include <gtest/gtest.h>

#include <set>

#include "hurwitz/partitions.hpp"
#include "oracles.hpp"

using namespace hurwitz;

TEST(Partitions, EnumerateSmall) {
  auto zero = enumerate_partitions(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());
  EXPECT_EQ(enumerate_partitions(4).size(), 5u);
  EXPECT_EQ(enumerate_partitions(4).front(), Partition{4});
  EXPECT_EQ(enumerate_partitions(4).back(), Partition::ones(4));
}

TEST(Partitions, CountsMatchPentagonalRecurrence) {
  const auto p = oracle::partition_counts(16);
  for (int d = 0; d <= 16; ++d) EXPECT_EQ(static_cast<long>(enumerate_partitions(d).size()), p[static_cast<std::size_t>(d)]) << d;
  EXPECT_EQ(enumerate_partitions(10).size(), 42u);
}

TEST(Partitions, EnumerationIsStrictlyDecreasingAndDistinct) {
  for (int d = 1; d <= 12; ++d) {
    const auto all = enumerate_partitions(d);
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
    for (const auto& p : all) EXPECT_EQ(p.size(), d);
  }
}

TEST(Partitions, Validation) {
  EXPECT_THROW(Partition({1, 2}), PreconditionViolation);
  EXPECT_THROW(Partition({2, 0}), PreconditionViolation);
  EXPECT_EQ(Partition::parse("1,3"), (Partition{3, 1}));
  EXPECT_EQ(Partition::parse(""), Partition{});
  EXPECT_THROW(Partition::parse("3,x"), ParseError);
  EXPECT_THROW(Partition::parse("3,"), ParseError);
  EXPECT_THROW(Partition::parse("0"), ParseError);
}

TEST(Partitions, ZOrder) {
  EXPECT_EQ(z_order(Partition{2, 1}), 2);
  EXPECT_EQ(z_order(Partition{1, 1, 1}), 6);
  EXPECT_EQ(z_order(Partition{3}), 3);
}

TEST(Partitions, ClassSize) {
  EXPECT_EQ(class_size(Partition{3}), 2);
  EXPECT_EQ(class_size(Partition{2, 1}), 3);
  Integer total = 0;
  for (const auto& a : enumerate_partitions(4)) total += class_size(a);
  EXPECT_EQ(total, 24);
}

TEST(Partitions, ClassSizeAgreesWithBruteForce) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& a : enumerate_partitions(d)) EXPECT_EQ(class_size(a), oracle::class_size(a.parts())) << a;
}

TEST(Partitions, Contents) {
  EXPECT_EQ(contents(Partition{2, 1}), (ContentMultiset{{-1, 0, 1}}));
  EXPECT_EQ(contents(Partition{4}), (ContentMultiset{{0, 1, 2, 3}}));
  EXPECT_EQ(contents(Partition{1, 1, 1}), (ContentMultiset{{0, -1, -2}}));
}

TEST(Partitions, ContentsOfConjugateAreNegated) {
  for (int d = 1; d <= 8; ++d) {
    for (const auto& p : enumerate_partitions(d)) {
      auto c = contents(p);
      for (int& v : c.values) v = -v;
      EXPECT_EQ(c, contents(p.conjugate()));
      EXPECT_EQ(static_cast<int>(contents(p).cardinality()), d);
    }
  }
}

TEST(Partitions, Union) {
  EXPECT_EQ(union_of(Partition{2, 1}, Partition{3, 1}), (Partition{3, 2, 1, 1}));
  EXPECT_EQ(union_of(Partition{}, Partition{5}), Partition{5});
  EXPECT_EQ(union_of(Partition{2, 2}, Partition{2}), (Partition{2, 2, 2}));
}

TEST(Partitions, Padding) {
  EXPECT_EQ(pad_with_ones(Partition{2, 1}, 5), (Partition{2, 1, 1, 1}));
  EXPECT_EQ(pad_with_ones(Partition{3}, 3), Partition{3});
  EXPECT_EQ(pad_with_ones(Partition{}, 2), (Partition{1, 1}));
  EXPECT_THROW(pad_with_ones(Partition{3}, 2), PreconditionViolation);
}

TEST(Partitions, Dimension) {
  EXPECT_EQ(dimension(Partition{6}), 1);
  EXPECT_EQ(dimension(Partition{2, 1}), 2);
  for (int d = 1; d <= 9; ++d) {
    Integer sum = 0;
    for (const auto& p : enumerate_partitions(d)) {
      sum += dimension(p) * dimension(p);
      EXPECT_EQ(dimension(p), dimension(p.conjugate()));
    }
    EXPECT_EQ(sum, factorial(static_cast<unsigned>(d)));
  }
}

TEST(Partitions, ConjugateIsInvolution) {
  for (int d = 0; d <= 10; ++d)
    for (const auto& p : enumerate_partitions(d)) EXPECT_EQ(p.conjugate().conjugate(), p);
}

TEST(Partitions, ClassSizesSumToFactorial) {
  for (int d = 0; d <= 10; ++d) {
    Integer total = 0;
    for (const auto& a : enumerate_partitions(d)) total += class_size(a);
    EXPECT_EQ(total, factorial(static_cast<unsigned>(d)));
  }
}

TEST(Partitions, ContentSumFromRowsAndColumns) {
  auto choose2 = [](int n) { return n * (n - 1) / 2; };
  for (int d = 1; d <= 10; ++d) {
    for (const auto& p : enumerate_partitions(d)) {
      int direct = 0;
      for (int c : contents(p).values) direct += c;
      int formula = 0;
      for (int r : p) formula += choose2(r);
      for (int c : p.conjugate()) formula -= choose2(c);
      EXPECT_EQ(direct, formula) << p;
    }
  }
}

TEST(Partitions, UnionLaws) {
  const auto small = enumerate_partitions(4);
  for (const auto& a : small)
    for (const auto& b : small) {
      EXPECT_EQ(union_of(a, b), union_of(b, a));
      for (const auto& c : enumerate_partitions(3)) EXPECT_EQ(union_of(union_of(a, b), c), union_of(a, union_of(b, c)));
    }
  for (int d = 0; d <= 8; ++d)
    for (const auto& p : enumerate_partitions(d)) EXPECT_EQ(pad_with_ones(p, p.size()), p);
}
