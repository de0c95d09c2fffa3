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


#include "normtrace/closedforms.hpp"

#include <array>

#include "normtrace/error.hpp"

namespace normtrace::closedforms {

namespace {

BigInt P(long base, unsigned exponent) { return Pow(BigInt(base), exponent); }

BigInt Sign(unsigned exponent) { return exponent % 2 == 0 ? 1 : -1; }

// Discrete logs in the prime fields with generator 2, and in F_4 with w = 2.
unsigned LogF4(Elem x) { return x == 1 ? 0 : x == 2 ? 1 : 2; }
unsigned LogF5(Elem x) {
  constexpr std::array<unsigned, 5> kLog{0, 0, 1, 3, 2};
  return kLog[x];
}

int Eta3(Elem x) { return x == 1 ? 1 : -1; }

void CheckArgs(std::uint64_t q, Elem a, Elem b, bool need_b) {
  Require(a != 0 && a < q, ErrorCode::kZeroArgument, "norm target must be a nonzero element");
  Require(b < q, ErrorCode::kInvalidArgument, "trace target out of range");
  Require(!need_b || b != 0, ErrorCode::kZeroArgument, "this formula needs b != 0");
}

FormulaResult FromCurve(std::uint64_t q, const FormulaResult& curve) {
  BigInt n_value;
  Require(DivideExact(curve.value - 1, BigInt(static_cast<long>(q * (q - 1))), n_value),
          ErrorCode::kDivisibilityViolation, "branch " + curve.branch + " is not 1 mod q(q-1)");
  return {n_value, curve.source, curve.branch};
}

FormulaResult DivideBy(const BigInt& numerator, long denominator, Source source, std::string branch) {
  BigInt value;
  Require(DivideExact(numerator, BigInt(denominator), value), ErrorCode::kDivisibilityViolation,
          "branch " + branch + " gives a non-integral value");
  return {value, source, std::move(branch)};
}

const GaussianInteger kEps{-3, 4};  // J^2
const GaussianInteger kJ{-1, -2};   // Jacobi sum J(lambda_1, lambda_1)

GaussianInteger ITimes(const GaussianInteger& z, unsigned k) {
  GaussianInteger out = z;
  for (unsigned i = 0; i < k % 4; ++i) out = GaussianInteger(-out.im(), out.re());
  return out;
}

}  // namespace

GaussianInteger GaussianInteger::pow(unsigned exponent) const {
  GaussianInteger result{1, 0};
  GaussianInteger base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string_view SourceName(Source source) {
  return source == Source::kPaperStated ? "paper" : "errata";
}

int N2Closed(const SmallField& F, Elem a, Elem b) {
  Require(F.characteristic() != 2, ErrorCode::kEvenCharacteristic, "N_2 discriminant needs p > 2");
  Require(a != 0 && b != 0, ErrorCode::kZeroArgument, "N_2 closed form needs ab != 0");
  const Elem four_a = F.mul(F.from_integer(4), a);
  const Elem delta = F.sub(F.mul(b, b), four_a);
  if (delta == 0) return 1;
  return F.is_square(delta) ? 0 : 2;
}

PairCensus N2PairCensus(std::uint64_t q) {
  Require(q % 2 == 1, ErrorCode::kEvenCharacteristic, "pair census needs odd q");
  return {(q - 1) * (q - 3) / 2, q - 1, (q - 1) * (q - 1) / 2};
}

PairCensus N2PairCensusExhaustive(const SmallField& F) {
  PairCensus census;
  for (Elem a = 1; a < F.order(); ++a) {
    for (Elem b = 1; b < F.order(); ++b) {
      switch (N2Closed(F, a, b)) {
        case 0: ++census.zero; break;
        case 1: ++census.one; break;
        default: ++census.two; break;
      }
    }
  }
  return census;
}

BigCount NnQ2(unsigned n) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  return P(2, n - 1);
}

FormulaResult CurveQ3(unsigned n, Elem a, Elem b, Source source) {
  CheckArgs(3, a, b, false);
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  const BigInt base = P(3, n) + 1;
  const bool paper = source == Source::kPaperStated;
  if (n % 2 == 0) {
    const BigInt s = P(-3, n / 2) * (paper ? 1 : Eta3(a));
    if (b == 0) return {base - 2 * s, source, "q3.even.b0"};
    return {base + s, source, "q3.even.b"};
  }
  if (b == 0) return {base, source, "q3.odd.b0"};
  const BigInt s = P(-3, (n + 1) / 2);
  if (paper) {
    // b = 1: minus; b = -1: plus.
    if (b == 1) return {base - s * Eta3(a), source, "q3.odd.b1"};
    return {base + s * Eta3(a), source, "q3.odd.b2"};
  }
  return {base - s * Eta3(a) * Eta3(b), source, b == 1 ? "q3.odd.b1" : "q3.odd.b2"};
}

FormulaResult NnQ3(unsigned n, Elem a, Elem b, Source source) {
  CheckArgs(3, a, b, true);
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  if (source == Source::kErrataCorrected) return FromCurve(3, CurveQ3(n, a, b, source));
  if (n % 2 == 0) return DivideBy(P(3, n) + P(-3, n / 2), 6, source, "q3.even.b");
  const BigInt s = P(-3, (n + 1) / 2) * Eta3(a);
  if (b == 1) return DivideBy(P(3, n) + s, 6, source, "q3.odd.b1");
  return DivideBy(P(3, n) - s, 6, source, "q3.odd.b2");
}

FormulaResult CurveQ4(unsigned n, Elem a, Elem b, Source source) {
  CheckArgs(4, a, b, false);
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  const BigInt base = P(4, n) + 1;
  if (source == Source::kPaperStated) {
    if (n % 3 == 0) {
      if (b == 0) return {base + 3 * Sign(n - 1) * P(2, n + 1), source, "q4.3|n.b0"};
      return {base + Sign(n) * P(2, n + 1), source, "q4.3|n.b"};
    }
    if (b == 0) return {base, source, "q4.3!n.b0"};
    const bool lambda_two = (LogF4(a) + LogF4(b)) % 3 == 0;  // ab = 1
    if (lambda_two) return {base + Sign(n - 1) * P(2, n + 2), source, "q4.3!n.ab=1"};
    return {base + Sign(n) * P(2, n + 1), source, "q4.3!n.ab!=1"};
  }
  // #X = 4^n + 1 + (-1)^{n-1} 2^n sum_{j=1,2} conj(lambda_j(a)) G(conj(lambda_j)^n, chi_b),
  // with G(lambda_j, chi) = 2 and lambda_j(-1) = 1.
  const unsigned la = LogF4(a);
  const BigInt s = Sign(n - 1) * P(2, n);
  if (n % 3 == 0) {
    // sum_j conj(lambda_j(a)) is 2 for a = 1 and -1 otherwise.
    const BigInt lam_sum = la == 0 ? 2 : -1;
    if (b == 0) return {base + s * 3 * lam_sum, source, la == 0 ? "q4.3|n.b0.a=1" : "q4.3|n.b0.a!=1"};
    return {base - s * lam_sum, source, la == 0 ? "q4.3|n.b.a=1" : "q4.3|n.b.a!=1"};
  }
  if (b == 0) return {base, source, "q4.3!n.b0"};
  // Each term is 2 lambda_j(b^n / a); the sum is 4 if b^n = a, else -2.
  const bool match = (n * LogF4(b) + 3 - la) % 3 == 0;
  return {base + s * (match ? 4 : -2), source, match ? "q4.3!n.b^n=a" : "q4.3!n.b^n!=a"};
}

FormulaResult NnQ4(unsigned n, Elem a, Elem b, Source source) {
  CheckArgs(4, a, b, true);
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  if (source == Source::kErrataCorrected) return FromCurve(4, CurveQ4(n, a, b, source));
  const BigInt q4 = P(4, n);
  if (n % 3 == 0) return DivideBy(q4 + Sign(n) * P(2, n + 1), 12, source, "q4.3|n.b");
  if ((LogF4(a) + LogF4(b)) % 3 == 0) {
    return DivideBy(q4 + Sign(n - 1) * P(2, n + 2), 12, source, "q4.3!n.ab=1");
  }
  return DivideBy(q4 + Sign(n) * P(2, n + 1), 12, source, "q4.3!n.ab!=1");
}

namespace {

// Paper branch selector for q = 5: ab in {1, 4, 2, 3}.
std::string Q5PaperBranch(unsigned r, Elem a, Elem b) {
  if (b == 0) return "q5.r" + std::to_string(r) + ".b0";
  if (r == 0) return "q5.r0.b";
  const Elem ab = static_cast<Elem>((a * b) % 5);
  if (r == 2) return (ab == 1 || ab == 4) ? "q5.r2.a=+-b" : "q5.r2.a!=+-b";
  return "q5.r" + std::to_string(r) + ".ab=" + std::to_string(ab);
}

BigInt Q5PaperCurve(unsigned n, Elem a, Elem b) {
  const unsigned m = n / 4;
  const unsigned r = n % 4;
  const BigInt base = P(5, n) + 1;
  const GaussianInteger em = kEps.pow(m);
  if (b == 0) {
    if (r == 0) return base - 4 * P(5, m) * (P(5, m) - 2 * em.re());
    if (r == 2) return base - 4 * P(5, n / 2);
    return base;
  }
  if (r == 0) return base + P(5, m) * (P(5, m) - 2 * em.re());
  const Elem ab = static_cast<Elem>((a * b) % 5);
  if (r == 2) {
    const BigInt t = P(5, m + 1) * 2 * (kJ * em).re();
    if (ab == 1 || ab == 4) return base + t + P(5, n / 2);
    return base - t + P(5, n / 2);
  }
  const GaussianInteger e = r == 1 ? em : kEps.pow(m + 1);
  const BigInt re = P(5, m + 1) * 2 * e.re();
  const BigInt im = P(5, m + 1) * 2 * e.im();
  const BigInt h = P(5, (n + 1) / 2);
  if (r == 1) {
    switch (ab) {
      case 1: return base + re + h;
      case 4: return base - re + h;
      case 2: return base - im - h;
      default: return base + im - h;
    }
  }
  switch (ab) {
    case 1: return base - re + h;
    case 4: return base + re + h;
    case 2: return base + im - h;
    default: return base - im - h;
  }
}

// Corrected q = 5 count. With lambda_j(2^k) = i^{jk}, G_1^2 = J sqrt5,
// G_2 = sqrt5, G_3 = -conj(G_1):
//   #X = 5^n + 1 + (-1)^{n-1} sum_j lambda_j(c) P_j,  c = (-b)^n / a,
// where P_j = G_j^n G(conj(lambda_j)^n, chi) and P_3 = conj(P_1).
BigInt Q5CorrectedCurve(unsigned n, Elem a, Elem b) {
  const unsigned m = n / 4;
  const unsigned r = n % 4;
  const BigInt base = P(5, n) + 1;
  const BigInt sign = Sign(n - 1);
  const unsigned la = LogF5(a);
  if (b == 0) {
    // Only j with lambda_j^n trivial survive, each weighted by G(lambda_0, chi_0) = 4.
    if (r % 2 == 1) return base;
    const BigInt quad = (la % 2 == 0 ? 1 : -1) * P(5, n / 2);
    if (r == 2) return base + sign * 4 * quad;
    const GaussianInteger g1 = ITimes(kEps.pow(m), 4 - la) * GaussianInteger(P(5, m), 0);
    return base + sign * 4 * (2 * g1.re() + quad);
  }
  const Elem minus_b = static_cast<Elem>(5 - b);
  const unsigned lc = (n * LogF5(minus_b) + 4 - la) % 4;
  GaussianInteger p1;
  BigInt p2;
  const GaussianInteger em = kEps.pow(m);
  switch (r) {
    case 0: p1 = GaussianInteger(-P(5, m), 0) * em; break;
    case 1: p1 = GaussianInteger(-P(5, m + 1), 0) * em; break;
    case 2: p1 = GaussianInteger(P(5, m + 1), 0) * em * kJ; break;
    default: p1 = GaussianInteger(P(5, m + 1), 0) * kEps.pow(m + 1); break;
  }
  p2 = n % 2 == 0 ? BigInt(-P(5, n / 2)) : P(5, (n + 1) / 2);
  const GaussianInteger t1 = ITimes(p1, lc);
  const BigInt t2 = (lc % 2 == 0 ? 1 : -1) * p2;
  return base + sign * (2 * t1.re() + t2);
}

std::string Q5CorrectedBranch(unsigned n, Elem a, Elem b) {
  const unsigned r = n % 4;
  if (b == 0) return "q5.r" + std::to_string(r) + ".b0.a=" + std::to_string(a);
  const unsigned lc = (n * LogF5(static_cast<Elem>(5 - b)) + 4 - LogF5(a)) % 4;
  return "q5.r" + std::to_string(r) + ".logc=" + std::to_string(lc);
}

}  // namespace

FormulaResult CurveQ5(unsigned n, Elem a, Elem b, Source source) {
  CheckArgs(5, a, b, false);
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  if (source == Source::kPaperStated) return {Q5PaperCurve(n, a, b), source, Q5PaperBranch(n % 4, a, b)};
  return {Q5CorrectedCurve(n, a, b), source, Q5CorrectedBranch(n, a, b)};
}

FormulaResult NnQ5(unsigned n, Elem a, Elem b, Source source) {
  CheckArgs(5, a, b, true);
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  if (source == Source::kErrataCorrected) return FromCurve(5, CurveQ5(n, a, b, source));
  // The printed N_n form is the printed curve count less 1, divided by 20.
  return DivideBy(Q5PaperCurve(n, a, b) - 1, 20, source, Q5PaperBranch(n % 4, a, b));
}

bool HasClosedForm(std::uint64_t q) { return q >= 2 && q <= 5; }

FormulaResult NnClosed(std::uint64_t q, unsigned n, Elem a, Elem b, Source source) {
  switch (q) {
    case 2:
      CheckArgs(2, a, b, true);
      return {NnQ2(n), source, "q2"};
    case 3: return NnQ3(n, a, b, source);
    case 4: return NnQ4(n, a, b, source);
    case 5: return NnQ5(n, a, b, source);
    default: Fail(ErrorCode::kUnsupported, "no closed form for q = " + std::to_string(q));
  }
}

FormulaResult CurveClosed(std::uint64_t q, unsigned n, Elem a, Elem b, Source source) {
  switch (q) {
    case 2:
      // No nontrivial multiplicative characters: the sum is empty.
      CheckArgs(2, a, b, false);
      return {P(2, n) + 1, source, "q2"};
    case 3: return CurveQ3(n, a, b, source);
    case 4: return CurveQ4(n, a, b, source);
    case 5: return CurveQ5(n, a, b, source);
    default: Fail(ErrorCode::kUnsupported, "no closed form for q = " + std::to_string(q));
  }
}

}  // namespace normtrace::closedforms
