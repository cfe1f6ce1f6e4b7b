#include <gtest/gtest.h>

#include "hurwitz/engine.hpp"
#include "hurwitz/toda.hpp"

using namespace hurwitz;

TEST(Toda, SingleCellCoefficient) {
  const Truncation tr{1, 3, 3};
  for (int n = -2; n <= 2; ++n) {
    const auto tau = build_tau(n, tr);
    // e^{nu}/(1-nt) = sum_{i,j} n^i t^i n^j u^j / j!
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j) {
        const Rational expected = pow(Rational(n), static_cast<unsigned>(i + j)) / Rational(factorial(static_cast<unsigned>(j)));
        EXPECT_EQ(tau.coefficient(SeriesKey{1, i, j, Partition{1}, Partition{1}}), expected) << n << i << j;
      }
  }
  EXPECT_EQ(build_tau(0, tr).coefficient(SeriesKey{1, 0, 0, Partition{1}, Partition{1}}), 1);
}

TEST(Toda, CauchyCollapse) {
  // with t and u truncated to order 0 every cell contributes z, leaving
  // sum_lambda s_lambda s_lambda = exp(z x y) on p_1
  const Truncation tr{6, 0, 0};
  for (int n : {-1, 0, 3}) {
    TruncatedSeries expected(tr);
    for (int d = 0; d <= 6; ++d)
      expected.add(SeriesKey{d, 0, 0, Partition::ones(d), Partition::ones(d)}, ratio(1, factorial(static_cast<unsigned>(d))));
    EXPECT_EQ(build_tau(n, tr), expected) << n;
  }
}

TEST(Toda, ContentWeightSeries) {
  const Truncation tr{2, 2, 2};
  const auto y = content_weight_series(2, tr);
  EXPECT_EQ(y.coefficient(SeriesKey{1, 2, 0, {}, {}}), 4);
  EXPECT_EQ(y.coefficient(SeriesKey{1, 1, 1, {}, {}}), 4);
  EXPECT_EQ(y.coefficient(SeriesKey{1, 0, 2, {}, {}}), 2);
}

TEST(Toda, FirstEquationSmall) {
  for (int n = -2; n <= 2; ++n) {
    const auto report = toda_first_equation_check(n, Truncation{4, 1, 1});
    EXPECT_TRUE(report.verdict) << n;
    EXPECT_TRUE(report.gamma_matches_content_weight) << n;
    EXPECT_FALSE(report.entries.empty());
  }
}

TEST(Toda, FirstEquationThroughP2) {
  const auto report = toda_first_equation_check(1, Truncation{4, 1, 1}, VariableProfile::through_p2());
  EXPECT_TRUE(report.verdict);
}

TEST(Toda, ReportDetectsPerturbation) {
  // gamma taken from the wrong neighbour must break the identity
  const Truncation tr{3, 1, 1};
  const auto tau = build_tau(0, tr);
  const auto dx = tau.derivative(Alphabet::A, 1);
  const auto lhs = tau * dx.derivative(Alphabet::B, 1) - dx * tau.derivative(Alphabet::B, 1);
  const auto wrong = content_weight_series(1, tr) * build_tau(1, tr) * build_tau(-1, tr);
  EXPECT_NE(lhs, wrong);
}

TEST(Toda, ShiftSubstitution) {
  EXPECT_TRUE(shift_substitution_check(0, Truncation{3, 2, 2}));
  EXPECT_TRUE(shift_substitution_check(1, Truncation{4, 2, 2}));
  EXPECT_TRUE(shift_substitution_check(-2, Truncation{3, 2, 2}));
  EXPECT_TRUE(shift_substitution_check(2, Truncation{3, 2, 1}, VariableProfile::all()));
}

TEST(Toda, TauZeroIsWalkSeries) {
  const Truncation tr{4, 2, 2};
  EXPECT_EQ(build_tau(0, tr, VariableProfile::all()), w_series(tr));
}

TEST(Toda, Limits) {
  EXPECT_THROW(build_tau(0, Truncation{9, 0, 0}), LimitExceeded);
  EXPECT_THROW(build_tau(0, Truncation{-1, 0, 0}), PreconditionViolation);
}

TEST(Toda, ReportJson) {
  const auto report = toda_first_equation_check(0, Truncation{3, 1, 1});
  const auto j = to_json(report);
  EXPECT_EQ(j["verdict"], true);
  EXPECT_EQ(j["compared"], report.entries.size());
  EXPECT_EQ(j.dump(), to_json(toda_first_equation_check(0, Truncation{3, 1, 1})).dump());
}

TEST(Toda, FirstEquationAtAcceptanceTruncation) {
  for (int n = -2; n <= 2; ++n) EXPECT_TRUE(toda_first_equation_check(n, Truncation{5, 2, 2}).verdict) << n;
  for (int n = -2; n <= 2; ++n) EXPECT_TRUE(shift_substitution_check(n, Truncation{4, 2, 2})) << n;
}
