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


#include "normtrace/pnab.hpp"

#include <gtest/gtest.h>

#include <tuple>
#include <vector>

#include "normtrace/error.hpp"

namespace normtrace::pnab {
namespace {

using closedforms::Source;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  return ErrorCode::kInternal;
}

TEST(Mobius, Values) {
  EXPECT_EQ(Mobius(1), 1);
  EXPECT_EQ(Mobius(4), 0);
  EXPECT_EQ(Mobius(6), 1);
  EXPECT_EQ(Mobius(30), -1);
  EXPECT_THROW(Mobius(0), Error);
}

TEST(Pn, HandValues) {
  const auto f2 = OracleProvider(2, 1);
  EXPECT_EQ(Pn(f2, 3, 1, 1), 1);  // T^3 + T^2 + 1
  EXPECT_EQ(Pn(f2, 5, 1, 1), 3);
  const auto f3 = OracleProvider(3, 1);
  EXPECT_EQ(Pn(f3, 3, 1, 1), 1);
}

struct GridCase {
  unsigned p, e, n_max;
};

TEST(Pn, MatchesDirectEnumeration) {
  for (auto [p, e, n_max] : std::vector<GridCase>{{2, 1, 6}, {3, 1, 6}, {5, 1, 6}, {2, 2, 4}}) {
    const auto oracle_provider = OracleProvider(p, e);
    const auto gauss_provider = GaussProvider(p, e);
    const auto closed_provider = ClosedProvider(p, e, Source::kErrataCorrected);
    const auto& F = *oracle_provider.field;
    const std::uint64_t q = F.order();
    for (unsigned n = 2; n <= n_max; ++n) {
      for (Elem a = 1; a < q; ++a) {
        for (Elem b = 1; b < q; ++b) {
          const BigCount direct = oracle::CountIrreducible(F, n, a, b);
          EXPECT_EQ(Pn(oracle_provider, n, a, b), direct) << "q=" << q << " n=" << n << " a=" << a << " b=" << b;
          EXPECT_EQ(Pn(gauss_provider, n, a, b), direct);
          EXPECT_EQ(Pn(closed_provider, n, a, b), direct);
          EXPECT_EQ(PnClosed(q, n, a, b, Source::kErrataCorrected), direct);
        }
      }
    }
  }
}

TEST(Pn, NecklaceCensus) {
  for (auto [p, e, n_max] : std::vector<GridCase>{{2, 1, 10}, {3, 1, 7}, {2, 2, 5}, {5, 1, 5}, {7, 1, 4}}) {
    const auto provider = OracleProvider(p, e);
    const std::uint64_t q = provider.field->order();
    for (unsigned n = 1; n <= n_max; ++n) {
      BigCount total = 0;
      for (const auto& value : PnCensus(provider, n)) total += value;
      EXPECT_EQ(total, NecklaceCount(q, n)) << q << " " << n;
    }
  }
  EXPECT_EQ(NecklaceCount(2, 4), 3);
  EXPECT_EQ(NecklaceCount(3, 2), 3);
}

TEST(Pn, PrimeDegreeOverF2) {
  const auto provider = OracleProvider(2, 1);
  // n = 2: 1 is the trace of no element of F_2, so nothing is subtracted and
  // P_2(1,1) = 2/2 rather than (2 - 1)/2.
  EXPECT_EQ(Pn(provider, 2, 1, 1), 1);
  for (unsigned n : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const BigCount pn = Pn(provider, n, 1, 1);
    if (n > 2) EXPECT_EQ(pn * n, Pow(2, n - 1) - 1);
    // |P - 2^{n-1}/n| <= 1/n
    EXPECT_LE(abs(BigInt(n) * pn - Pow(2, n - 1)), 1);
  }
}

TEST(Pn, LiteralInversionBreaks) {
  const auto f3 = OracleProvider(3, 1);
  // (N_3(1,1) - N_1(1,1)) / 3 = 2/3.
  EXPECT_EQ(CodeOf([&] { PnLiteralInversion(f3, 3, 1, 1); }), ErrorCode::kDivisibilityViolation);
  const auto f2 = OracleProvider(2, 1);
  // (N_2(1,1) - N_1(1,1)) / 2 = 1/2.
  EXPECT_EQ(CodeOf([&] { PnLiteralInversion(f2, 2, 1, 1); }), ErrorCode::kDivisibilityViolation);
  // Prime n over F_2 happens to agree.
  EXPECT_EQ(PnLiteralInversion(f2, 5, 1, 1), 3);
}

TEST(PnClosed, PrintedFormulas) {
  // Over F_2 the printed sum is not integral at n = 2 and n = 6.
  EXPECT_EQ(CodeOf([] { PnClosed(2, 2, 1, 1, Source::kPaperStated); }), ErrorCode::kDivisibilityViolation);
  EXPECT_EQ(CodeOf([] { PnClosed(2, 6, 1, 1, Source::kPaperStated); }), ErrorCode::kDivisibilityViolation);
  EXPECT_EQ(PnClosed(2, 5, 1, 1, Source::kPaperStated), 3);
  EXPECT_EQ(PnClosed(2, 6, 1, 1, Source::kErrataCorrected), 5);
  EXPECT_EQ(CodeOf([] { PnClosed(4, 3, 1, 2, Source::kPaperStated); }), ErrorCode::kUnsupported);
  EXPECT_EQ(PnClosed(3, 3, 1, 1, Source::kErrataCorrected), 1);
}

TEST(PnClosed, Errors) {
  EXPECT_EQ(CodeOf([] { PnClosed(3, 3, 0, 1, Source::kPaperStated); }), ErrorCode::kZeroArgument);
  EXPECT_EQ(CodeOf([] { PnClosed(7, 3, 1, 1, Source::kPaperStated); }), ErrorCode::kUnsupported);
  EXPECT_EQ(CodeOf([] { PnClosed(3, 1, 1, 1, Source::kPaperStated); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace normtrace::pnab
