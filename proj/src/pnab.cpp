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

#include <map>
#include <mutex>
#include <tuple>

#include "normtrace/charsum.hpp"
#include "normtrace/error.hpp"
#include "normtrace/numtheory.hpp"
#include "normtrace/tower.hpp"

namespace normtrace::pnab {

namespace {

using closedforms::Source;

struct OracleCache {
  std::mutex mutex;
  std::map<unsigned, std::vector<std::uint64_t>> census;
};

BigCount SmallDegree(Elem norm, Elem trace) { return norm == trace ? 1 : 0; }

}  // namespace

int Mobius(std::uint64_t t) {
  Require(t >= 1, ErrorCode::kInvalidArgument, "mobius needs t >= 1");
  return nt::Mobius(t);
}

NnProvider OracleProvider(std::uint32_t p, unsigned e, std::uint64_t seed,
                          const oracle::EnumerationCaps& caps) {
  auto base = FieldTower::Build(p, e, 1, seed);
  auto cache = std::make_shared<OracleCache>();
  NnProvider provider{"oracle", base->mid_ptr(), nullptr};
  provider.count = [p, e, seed, caps, cache](unsigned d, Elem norm, Elem trace) -> BigCount {
    std::lock_guard<std::mutex> lock(cache->mutex);
    auto it = cache->census.find(d);
    if (it == cache->census.end()) {
      auto tower = FieldTower::Build(p, e, d, seed);
      it = cache->census.emplace(d, oracle::NormTraceCensus(*tower, caps)).first;
    }
    const std::uint64_t q = nt::CheckedPow(p, e).value();
    return FromUint64(it->second[norm * q + trace]);
  };
  return provider;
}

NnProvider GaussProvider(std::uint32_t p, unsigned e, std::uint64_t seed) {
  auto base = FieldTower::Build(p, e, 1, seed);
  auto table = std::make_shared<charsum::GaussTable>(base->mid_ptr());
  NnProvider provider{"gauss", base->mid_ptr(), nullptr};
  provider.count = [table](unsigned d, Elem norm, Elem trace) -> BigCount {
    if (d == 1) return SmallDegree(norm, trace);
    if (norm == 0) return trace == 0 ? 1 : 0;
    const std::uint64_t q = table->field().order();
    const BigCount curve = charsum::CountCurveGauss(*table, d, norm, trace).value;
    return trace == 0 ? charsum::NnViaCurveZeroTrace(q, curve) : charsum::NnViaCurve(q, curve);
  };
  return provider;
}

NnProvider ClosedProvider(std::uint32_t p, unsigned e, Source source) {
  auto base = FieldTower::Build(p, e, 1, 0);
  const std::uint64_t q = base->q();
  Require(closedforms::HasClosedForm(q), ErrorCode::kUnsupported,
          "closed forms exist only for q <= 5");
  NnProvider provider{std::string("closed-") + std::string(closedforms::SourceName(source)),
                      base->mid_ptr(), nullptr};
  provider.count = [q, source](unsigned d, Elem norm, Elem trace) -> BigCount {
    if (d == 1) return SmallDegree(norm, trace);
    if (norm == 0) return trace == 0 ? 1 : 0;
    if (trace != 0) return closedforms::NnClosed(q, d, norm, trace, source).value;
    const BigCount curve = closedforms::CurveClosed(q, d, norm, 0, source).value;
    return charsum::NnViaCurveZeroTrace(q, curve);
  };
  return provider;
}

namespace {

// E_d(s, m) for every (s, m), entry s * q + m, memoized per divisor of n.
class ExactDegreeTable {
 public:
  explicit ExactDegreeTable(const NnProvider& provider) : provider_(provider), F_(*provider.field) {}

  const std::vector<BigInt>& Get(unsigned d) {
    if (auto it = memo_.find(d); it != memo_.end()) return it->second;
    const std::uint64_t q = F_.order();
    std::vector<BigInt> table(q * q);
    if (d == 1) {
      for (Elem s = 0; s < q; ++s) table[s * q + s] = 1;
      return memo_.emplace(d, std::move(table)).first->second;
    }
    for (Elem s = 0; s < q; ++s) {
      for (Elem m = 0; m < q; ++m) table[s * q + m] = provider_.count(d, m, s);
    }
    for (auto smaller : nt::Divisors(d)) {
      if (smaller == d) continue;
      const auto k = static_cast<unsigned>(d / smaller);
      const Elem k_elem = F_.from_integer(k);
      const auto& sub = Get(static_cast<unsigned>(smaller));
      for (Elem s = 0; s < q; ++s) {
        for (Elem m = 0; m < q; ++m) {
          const BigInt& value = sub[s * q + m];
          if (value == 0) continue;
          // An element of degree d' has trace k s and norm m^k one level up.
          table[F_.mul(k_elem, s) * q + F_.pow(m, k)] -= value;
        }
      }
    }
    return memo_.emplace(d, std::move(table)).first->second;
  }

 private:
  const NnProvider& provider_;
  const SmallField& F_;
  std::map<unsigned, std::vector<BigInt>> memo_;
};

BigCount DivideByDegree(const BigInt& total, unsigned n, const std::string& what) {
  BigInt out;
  Require(total >= 0 && DivideExact(total, BigInt(n), out), ErrorCode::kDivisibilityViolation,
          what + ": " + total.get_str() + " is not a nonnegative multiple of " + std::to_string(n));
  return out;
}

}  // namespace

BigCount Pn(const NnProvider& provider, unsigned n, Elem a, Elem b) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  const std::uint64_t q = provider.field->order();
  Require(a < q && b < q, ErrorCode::kInvalidArgument, "coefficient out of range");
  ExactDegreeTable table(provider);
  return DivideByDegree(table.Get(n)[a * q + b], n, "P_" + std::to_string(n));
}

std::vector<BigCount> PnCensus(const NnProvider& provider, unsigned n) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  ExactDegreeTable table(provider);
  const auto& exact = table.Get(n);
  std::vector<BigCount> out(exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) out[i] = DivideByDegree(exact[i], n, "P_n census");
  return out;
}

BigCount PnLiteralInversion(const NnProvider& provider, unsigned n, Elem a, Elem b) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  BigInt total = 0;
  for (auto t : nt::Divisors(n)) {
    const int mu = nt::Mobius(t);
    if (mu != 0) total += mu * provider.count(static_cast<unsigned>(n / t), a, b);
  }
  return DivideByDegree(total, n, "literal inversion");
}

namespace {

Rational Q(const BigInt& num, long den) {
  Rational out(num, BigInt(den));
  out.canonicalize();
  return out;
}

BigInt P(long base, unsigned exponent) { return Pow(BigInt(base), exponent); }

int Eta3(Elem x) { return x == 1 ? 1 : -1; }

// The summand printed for each divisor t (n is the outer degree).
Rational PrintedTerm(std::uint64_t q, unsigned n, unsigned t, Elem a, Elem b) {
  switch (q) {
    case 2:
      return Rational(P(2, t - 1));
    case 3: {
      if (t % 2 == 0) return Q(P(3, t) + P(-3, t / 2) * Eta3(a), 6);
      const BigInt s = P(-3, (t + 1) / 2) * Eta3(a);
      return Q(b == 1 ? BigInt(P(3, t) + s) : BigInt(P(3, t) - s), 6);
    }
    case 4: {
      const BigInt sign_n = n % 2 == 0 ? 1 : -1;
      const BigInt sign_t = t % 2 == 0 ? 1 : -1;
      if (t % 3 == 0) {
        Require(t % 2 == 1 && b == 1, ErrorCode::kUnsupported,
                "printed q = 4 formula has no branch for 3 | t unless t is odd and b = 1");
        return Q(P(4, t) + sign_n * P(2, t + 1), 12);
      }
      // a = b = 1 or {a, b} = {w, w^2}.
      const bool special = (a == 1 && b == 1) || (a == 2 && b == 3) || (a == 3 && b == 2);
      if (special) return Q(P(4, t) - sign_t * P(2, t + 2), 12);
      return Q(P(4, t) + sign_t * P(2, t + 1), 12);
    }
    case 5: {
      const BigInt curve = closedforms::CurveClosed(5, t, a, b, Source::kPaperStated).value;
      return Q(curve - 1, 20);
    }
    default:
      Fail(ErrorCode::kUnsupported, "no printed formula for q = " + std::to_string(q));
  }
}

}  // namespace

BigCount PnClosed(std::uint64_t q, unsigned n, Elem a, Elem b, Source source) {
  Require(closedforms::HasClosedForm(q), ErrorCode::kUnsupported, "closed forms exist only for q <= 5");
  Require(n >= 2, ErrorCode::kInvalidArgument, "closed P_n needs n >= 2");
  Require(a != 0 && b != 0 && a < q && b < q, ErrorCode::kZeroArgument, "closed P_n needs ab != 0");
  if (source == Source::kErrataCorrected) {
    const std::uint32_t p = q == 4 ? 2 : static_cast<std::uint32_t>(q);
    const unsigned e = q == 4 ? 2 : 1;
    return Pn(ClosedProvider(p, e, source), n, a, b);
  }
  Require(q != 2 || (a == 1 && b == 1), ErrorCode::kInvalidArgument, "over F_2, a = b = 1");
  Rational total = 0;
  for (auto t : nt::Divisors(n)) {
    const int mu = nt::Mobius(n / t);
    if (mu != 0) total += mu * PrintedTerm(q, n, static_cast<unsigned>(t), a, b);
  }
  total /= Rational(n);
  total.canonicalize();
  Require(total.get_den() == 1, ErrorCode::kDivisibilityViolation,
          "printed formula gives " + ToString(total) + " for n = " + std::to_string(n));
  return total.get_num();
}

BigCount CensusTotal(const std::vector<BigCount>& census) {
  BigCount total = 0;
  for (const auto& v : census) total += v;
  return total;
}

BigCount NecklaceCount(std::uint64_t q, unsigned n) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  BigInt total = 0;
  for (auto t : nt::Divisors(n)) {
    const int mu = nt::Mobius(t);
    if (mu != 0) total += mu * Pow(FromUint64(q), static_cast<unsigned long>(n / t));
  }
  BigInt out;
  Require(DivideExact(total, BigInt(n), out), ErrorCode::kInternal, "necklace count not integral");
  return out;
}

}  // namespace normtrace::pnab
