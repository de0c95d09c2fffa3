// Copyright 2026 The normtrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "normtrace/charsum.hpp"
#include "normtrace/error.hpp"
#include "normtrace/oracle.hpp"

namespace normtrace::charsum {
namespace {

constexpr double kTol = 1e-9;

TEST(Characters, TrivialAndCanonical) {
  auto f3 = FieldTower::Build(3, 1, 2);
  EXPECT_NEAR(std::abs(EvalChar(*f3, {CharKind::kAdditive, Level::kMid, 0}, 2) - 1.0), 0, kTol);
  EXPECT_NEAR(std::abs(EvalChar(*f3, {CharKind::kMultiplicative, Level::kTop, 0}, 5) - 1.0), 0, kTol);
  const ComplexValue omega = std::polar(1.0, 2 * std::numbers::pi / 3);
  EXPECT_NEAR(std::abs(EvalChar(*f3, {CharKind::kAdditive, Level::kMid, 1}, 1) - omega), 0, kTol);
  auto f5 = FieldTower::Build(5, 1, 1);
  for (Elem k = 0; k < 5; ++k) {
    const ComplexValue zeta = std::polar(1.0, 2 * std::numbers::pi * k / 5);
    EXPECT_NEAR(std::abs(EvalChar(*f5, {CharKind::kAdditive, Level::kMid, 1}, k) - zeta), 0, kTol);
  }
  try {
    EvalChar(*f5, {CharKind::kMultiplicative, Level::kMid, 1}, 0);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kZeroArgument);
  }
}

TEST(GaussSums, KnownValues) {
  auto f4 = FieldTower::Build(2, 2, 1);
  const CharacterRef chi{CharKind::kAdditive, Level::kMid, 1};
  const CharacterRef chi0{CharKind::kAdditive, Level::kMid, 0};
  const CharacterRef lam0{CharKind::kMultiplicative, Level::kMid, 0};
  EXPECT_NEAR(std::abs(GaussSum(*f4, lam0, chi0) - 3.0), 0, kTol);
  EXPECT_NEAR(std::abs(GaussSum(*f4, lam0, {CharKind::kAdditive, Level::kMid, 3}) + 1.0), 0, kTol);
  for (std::uint64_t j : {1, 2}) {
    EXPECT_NEAR(std::abs(GaussSum(*f4, {CharKind::kMultiplicative, Level::kMid, j}, chi) - 2.0), 0, kTol);
  }
  auto f5 = FieldTower::Build(5, 1, 1);
  EXPECT_NEAR(std::abs(GaussSum(*f5, {CharKind::kMultiplicative, Level::kMid, 2}, chi) - std::sqrt(5.0)),
              0, kTol);
  auto f3 = FieldTower::Build(3, 1, 1);
  EXPECT_NEAR(std::abs(GaussSum(*f3, {CharKind::kMultiplicative, Level::kMid, 1}, chi) -
                       ComplexValue(0, std::sqrt(3.0))),
              0, kTol);
}

TEST(GaussSums, MagnitudeAndConjugation) {
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    auto t = FieldTower::Build(p, e, 1);
    GaussTable table(t->mid_ptr());
    const std::uint64_t q = t->q();
    for (std::uint64_t j = 1; j + 1 < q; ++j) {
      EXPECT_NEAR(std::norm(table.gauss(j)), static_cast<double>(q), 1e-9 * q);
      // G(conj lambda, chi) = lambda(-1) conj(G(lambda, chi))
      const ComplexValue lhs = table.gauss(q - 1 - j);
      const ComplexValue rhs = table.lambda(j, t->mid().neg(1)) * std::conj(table.gauss(j));
      EXPECT_NEAR(std::abs(lhs - rhs), 0, 1e-9);
      EXPECT_NEAR(std::abs(table.gauss(j) -
                           GaussSum(*t, {CharKind::kMultiplicative, Level::kMid, j},
                                    {CharKind::kAdditive, Level::kMid, 1})),
                  0, 1e-9);
    }
    for (Elem c = 1; c < q; ++c) EXPECT_EQ(table.gauss(0, c), ComplexValue(-1, 0));
    EXPECT_EQ(table.gauss(0, 0), ComplexValue(static_cast<double>(q - 1), 0));
  }
}

TEST(DavenportHasse, HandValuesAndDirectSums) {
  auto f3 = FieldTower::Build(3, 1, 1);
  GaussTable t3(f3->mid_ptr());
  EXPECT_NEAR(std::abs(DavenportHasseLift(t3, 1, 2) - 3.0), 0, 1e-9);
  auto f4 = FieldTower::Build(2, 2, 1);
  GaussTable t4(f4->mid_ptr());
  EXPECT_NEAR(std::abs(DavenportHasseLift(t4, 1, 3) - 8.0), 0, 1e-9);
  try {
    DavenportHasseLift(t4, 0, 3);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kTrivialCharacter);
  }
  for (auto [p, e, n] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {3, 1, 2}, {3, 1, 3}, {5, 1, 2}, {2, 2, 3}, {7, 1, 2}, {3, 2, 2}}) {
    auto t = FieldTower::Build(p, e, n);
    GaussTable table(t->mid_ptr());
    const CharacterRef mu{CharKind::kAdditive, Level::kTop, 1};
    for (std::uint64_t j = 1; j + 1 < t->q(); ++j) {
      const ComplexValue direct = GaussSum(*t, LiftToTop(*t, j), mu);
      EXPECT_NEAR(std::abs(direct - DavenportHasseLift(table, j, n)), 0, 1e-6);
    }
  }
}

TEST(CurveGauss, HandValues) {
  auto f3 = FieldTower::Build(3, 1, 1);
  GaussTable t3(f3->mid_ptr());
  EXPECT_EQ(CountCurveGauss(t3, 2, 1, 1).value, 7);
  EXPECT_EQ(CountCurveGauss(t3, 2, 2, 1).value, 13);
  auto f2 = FieldTower::Build(2, 1, 1);
  GaussTable t2(f2->mid_ptr());
  EXPECT_EQ(CountCurveGauss(t2, 4, 1, 1).value, 17);
}

TEST(CurveGauss, MatchesOracle) {
  for (auto [p, e, n] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {3, 1, 4}, {5, 1, 3}, {2, 2, 4}, {7, 1, 3}, {2, 3, 3}, {3, 2, 3}}) {
    auto t = FieldTower::Build(p, e, n);
    GaussTable table(t->mid_ptr());
    for (Elem a = 1; a < t->q(); ++a) {
      const auto hist = oracle::CurveTraceHistogram(*t, t->NormPreimageIndex(a));
      for (Elem b = 0; b < t->q(); ++b) {
        const auto gauss = CountCurveGauss(table, n, a, b);
        EXPECT_EQ(gauss.value, BigCount(t->q()) * FromUint64(hist[b]) + 1);
        EXPECT_LT(gauss.residual, 1e-6 * std::pow(t->q(), n / 2.0));
      }
    }
  }
}

TEST(ToricGauss, MatchesEnumeration) {
  for (unsigned q : {3u, 4u, 5u, 7u}) {
    auto t = FieldTower::Build(q == 4 ? 2 : q, q == 4 ? 2 : 1, 1);
    GaussTable table(t->mid_ptr());
    for (unsigned n = 1; n <= 5; ++n) {
      for (Elem u = 1; u < q; ++u) {
        EXPECT_EQ(CountToricGauss(table, n, u).value, oracle::CountToricPoints(t->mid(), n, u))
            << "q=" << q << " n=" << n << " u=" << u;
      }
    }
  }
  auto f3 = FieldTower::Build(3, 1, 1);
  GaussTable t3(f3->mid_ptr());
  EXPECT_EQ(CountToricGauss(t3, 3, 2).value, 3);
  EXPECT_EQ(CountToricGauss(t3, 3, 1).value, 0);
}

TEST(Relations, CurveAndToricRecoverN) {
  EXPECT_EQ(NnViaCurve(3, 7), 1);
  EXPECT_EQ(NnViaCurve(3, 13), 2);
  EXPECT_EQ(NnViaCurve(2, Pow(2, 9) + 1), Pow(2, 8));
  try {
    NnViaCurve(3, 8);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kDivisibilityViolation);
  }
  EXPECT_EQ(NnViaToric(3, 3, 3), 6);
  EXPECT_EQ(NnViaToric(3, 3, 0), 3);
  for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(NnViaToric(2, n, n == 1 ? 1 : (n % 2 == 1 ? 1 : 0)), Pow(2, n - 1));
}

TEST(Relations, ToricPathMatchesOracleOnSmallGrid) {
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {2, 2}, {5, 1}}) {
    for (unsigned n = 1; n <= 5; ++n) {
      auto t = FieldTower::Build(p, e, n);
      if (t->order() > 300000) continue;
      const auto census = oracle::NormTraceCensus(*t);
      const std::uint64_t q = t->q();
      for (Elem a = 1; a < q; ++a) {
        for (Elem b = 1; b < q; ++b) {
          const Elem u = ToricParameter(t->mid(), n, a, b);
          const BigCount via = NnViaToric(q, n, oracle::CountToricPoints(t->mid(), n, u));
          EXPECT_EQ(via, FromUint64(census[a * q + b])) << "q=" << q << " n=" << n;
        }
      }
    }
  }
}

}  // namespace
}  // namespace normtrace::charsum
