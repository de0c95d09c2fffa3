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


#include "normtrace/bounds.hpp"

#include <cmath>
#include <sstream>

#include "normtrace/error.hpp"
#include "normtrace/numtheory.hpp"

namespace normtrace::bounds {

namespace {

Rational RPow(std::uint64_t q, long exponent) {
  const BigInt power = Pow(FromUint64(q), static_cast<unsigned long>(std::labs(exponent)));
  Rational out = exponent >= 0 ? Rational(power) : Rational(BigInt(1), power);
  out.canonicalize();
  return out;
}

Rational Frac(const BigInt& num, const BigInt& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::uint64_t CommonRadicand(const Surd& a, const Surd& b) {
  if (a.surd_part() == 0) return b.radicand();
  if (b.surd_part() == 0) return a.radicand();
  Require(a.radicand() == b.radicand(), ErrorCode::kInvalidArgument, "surds over different radicands");
  return a.radicand();
}

std::uint64_t GcdQn(std::uint64_t q, unsigned n) { return nt::Gcd(n, q - 1); }

void CheckQn(std::uint64_t q, unsigned n) {
  Require(q >= 2, ErrorCode::kInvalidArgument, "q must be >= 2");
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
}

Surd H(std::uint64_t q, long k) { return Surd::QHalfPower(q, k); }
Surd R(const Rational& x) { return Surd(x); }

Radius Exact(Surd value, std::uint64_t q) { return Radius{std::move(value), 0, 0, q}; }

// coeff * q^{k/4}, folded into the exact part whenever k is even.
Radius AddQuarter(Radius radius, const Rational& coeff, long k) {
  if (k % 2 == 0) {
    radius.exact = radius.exact + coeff * H(radius.q, k / 2);
  } else {
    radius.quartic_coeff = coeff;
    radius.quartic_exp = k;
  }
  return radius;
}

// Shared by the second corrected bound and the improved toric bound:
// [1 + (q-2) q^{(n-1)/2} - q^{(n-2)/2} (sqrt q - 1)(d - 1)] / (q - 1).
Surd As2Radius(std::uint64_t q, unsigned n) {
  const long d = static_cast<long>(GcdQn(q, n));
  const long nn = n;
  const Surd numerator = R(1) + Rational(static_cast<long>(q) - 2) * H(q, nn - 1) -
                         Rational(d - 1) * H(q, nn - 2) * (H(q, 1) - R(1));
  return Frac(1, static_cast<long>(q - 1)) * numerator;
}

Rational MidCenter(std::uint64_t q, unsigned n) {
  return Frac(Pow(FromUint64(q), n - 1) - 1, FromUint64(q - 1));
}

std::string Fmt(const Rational& x) { return ToString(x); }

}  // namespace

std::pair<std::uint64_t, std::uint64_t> SquarefreeSplit(std::uint64_t q) {
  std::uint64_t s = 1;
  std::uint64_t r = 1;
  for (auto [prime, exponent] : nt::Factorize(q)) {
    for (int i = 0; i < exponent / 2; ++i) s *= prime;
    if (exponent % 2 == 1) r *= prime;
  }
  return {s, r};
}

Surd::Surd(Rational x, Rational y, std::uint64_t r) : x_(std::move(x)), y_(std::move(y)), r_(r) {
  Require(r_ >= 1, ErrorCode::kInvalidArgument, "radicand must be positive");
  x_.canonicalize();
  y_.canonicalize();
  if (r_ == 1) {
    x_ += y_;
    y_ = 0;
  }
  if (y_ == 0) r_ = 1;
}

Surd Surd::QHalfPower(std::uint64_t q, long k) {
  if (k % 2 == 0) return Surd(RPow(q, k / 2));
  const auto [s, r] = SquarefreeSplit(q);
  // q^{k/2} = q^{(k-1)/2} s sqrt(r); k - 1 is even.
  return Surd(0, RPow(q, (k - 1) / 2) * Rational(FromUint64(s)), r);
}

int Surd::sign() const {
  const int sx = sgn(x_);
  const int sy = sgn(y_);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  const Rational diff = x_ * x_ - y_ * y_ * Rational(FromUint64(r_));
  return sx * sgn(diff);
}

long double Surd::to_long_double() const {
  return static_cast<long double>(x_.get_d()) +
         static_cast<long double>(y_.get_d()) * std::sqrt(static_cast<long double>(r_));
}

BigInt Surd::floor() const {
  BigInt m(std::floor(static_cast<double>(to_long_double())));
  while ((*this - Surd(Rational(m))).sign() < 0) --m;
  while ((*this - Surd(Rational(m + 1))).sign() >= 0) ++m;
  return m;
}

BigInt Surd::ceil() const {
  const BigInt f = floor();
  return (*this - Surd(Rational(f))).sign() == 0 ? f : BigInt(f + 1);
}

Surd operator+(const Surd& a, const Surd& b) {
  return Surd(a.x_ + b.x_, a.y_ + b.y_, CommonRadicand(a, b));
}

Surd operator-(const Surd& a, const Surd& b) {
  return Surd(a.x_ - b.x_, a.y_ - b.y_, CommonRadicand(a, b));
}

Surd operator*(const Surd& a, const Surd& b) {
  const std::uint64_t r = CommonRadicand(a, b);
  return Surd(a.x_ * b.x_ + a.y_ * b.y_ * Rational(FromUint64(r)), a.x_ * b.y_ + a.y_ * b.x_, r);
}

Surd operator*(const Rational& c, const Surd& a) { return Surd(c * a.x_, c * a.y_, a.r_); }

long double Radius::to_long_double() const {
  long double value = exact.to_long_double();
  if (!is_exact()) {
    value += static_cast<long double>(quartic_coeff.get_d()) *
             std::pow(static_cast<long double>(q), static_cast<long double>(quartic_exp) / 4.0L);
  }
  return value;
}

std::pair<long double, long double> Radius::enclose() const {
  const long double x = std::fabs(static_cast<long double>(exact.rational_part().get_d()));
  const long double y = std::fabs(static_cast<long double>(exact.surd_part().get_d())) *
                        std::sqrt(static_cast<long double>(exact.radicand()));
  long double scale = x + y;
  if (!is_exact()) {
    scale += std::fabs(static_cast<long double>(quartic_coeff.get_d())) *
             std::pow(static_cast<long double>(q), static_cast<long double>(quartic_exp) / 4.0L);
  }
  const long double margin = 1e-12L * scale + 1e-30L;
  const long double value = to_long_double();
  return {value - margin, value + margin};
}

std::string Radius::to_string() const {
  std::ostringstream out;
  out << Fmt(exact.rational_part());
  if (exact.surd_part() != 0) out << "+(" << Fmt(exact.surd_part()) << ")*sqrt(" << exact.radicand() << ")";
  if (!is_exact()) out << "+(" << Fmt(quartic_coeff) << ")*" << q << "^(" << quartic_exp << "/4)";
  return out.str();
}

int CompareRadius(const Radius& a, const Radius& b) {
  if (a.is_exact() && b.is_exact()) return (a.exact - b.exact).sign();
  const auto [alo, ahi] = a.enclose();
  const auto [blo, bhi] = b.enclose();
  if (ahi < blo) return -1;
  if (bhi < alo) return 1;
  return 0;
}

BoundReport Check(const Bound& bound, const BigCount& observed, std::string instance) {
  BoundReport report;
  report.name = bound.name;
  report.instance = std::move(instance);
  report.center = bound.center;
  report.radius = bound.radius;
  report.observed = observed;
  Rational dist = Rational(observed) - bound.center;
  dist = abs(dist);
  if (bound.radius.is_exact()) {
    report.holds = (bound.radius.exact - Surd(dist)).sign() >= 0;
    return report;
  }
  const auto [lo, hi] = bound.radius.enclose();
  const long double d = static_cast<long double>(dist.get_d());
  if (d <= lo) {
    report.holds = true;
  } else if (d > hi) {
    report.holds = false;
  } else {
    report.exact = false;
    report.holds = d <= bound.radius.to_long_double();
  }
  return report;
}

Bound Katz(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  const BigInt qq = FromUint64(q);
  return {"katz", Frac(Pow(qq, n) - 1, qq * (qq - 1)), Exact(Rational(n) * H(q, long(n) - 2), q)};
}

Bound MoisioB0(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  const long d = static_cast<long>(GcdQn(q, n));
  return {"moisio_b0", MidCenter(q, n), Exact(Rational(d - 1) * H(q, long(n) - 2), q)};
}

Bound MoisioWan(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  return {"moisio_wan", MidCenter(q, n), Exact(Rational(long(n) - 1) * H(q, long(n) - 2), q)};
}

Bound AsBound1(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  const Surd radius = Rational(static_cast<long>(q) - 2) * H(q, long(n) - 2) + R(Frac(1, long(q - 1)));
  return {"as_bound1", MidCenter(q, n), Exact(radius, q)};
}

Bound AsBound2(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  return {"as_bound2", MidCenter(q, n), Exact(As2Radius(q, n), q)};
}

Bound ImprovedHw(std::uint64_t q, unsigned n, bool b_is_zero, HwCenter center) {
  CheckQn(q, n);
  const long d = static_cast<long>(GcdQn(q, n));
  const long ql = static_cast<long>(q);
  const Rational top = Rational(Pow(FromUint64(q), n) + 1);
  if (!b_is_zero) {
    const Surd radius = Rational(d - 1) * H(q, n) + Rational(ql - 1 - d) * H(q, long(n) + 1);
    return {"improved_hw", top, Exact(radius, q)};
  }
  const Surd radius = Rational((ql - 1) * (d - 1)) * H(q, n);
  if (center == HwCenter::kPrinted) return {"improved_hw", top - Rational(ql), Exact(radius, q)};
  return {"improved_hw_corrected", top, Exact(radius, q)};
}

Bound HasseWeil(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  const long ql = static_cast<long>(q);
  return {"hasse_weil", Rational(Pow(FromUint64(q), n) + 1),
          Exact(Rational((ql - 1) * (ql - 2)) * H(q, n), q)};
}

Bound CurveViaToric(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  const long ql = static_cast<long>(q);
  const Surd radius = R(Rational(ql)) + Rational(ql * (ql - 1) * (long(n) - 1)) * H(q, long(n) - 2);
  return {"curve_via_toric", Rational(Pow(FromUint64(q), n) + 1), Exact(radius, q)};
}

bool CurveViaToricCondition(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  const long i = (n % (q - 1) == 0) ? 0 : 1;
  const long ql = static_cast<long>(q);
  // (q-2) q^{i/2} / (1 - 1/q) = (q-2) q^{i/2} q / (q-1).
  const Surd value = Frac(BigInt((ql - 2) * ql), BigInt(ql - 1)) * H(q, i);
  return BigInt(n) < value.floor() + 1;
}

Bound ToricMw(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  const BigInt center_num = Pow(FromUint64(q - 1), n - 1) - (n % 2 == 1 ? 1 : -1);
  return {"toric_mw", Frac(center_num, FromUint64(q)), Exact(Rational(long(n) - 1) * H(q, long(n) - 1), q)};
}

Bound ToricImproved(std::uint64_t q, unsigned n) {
  Bound bound = ToricMw(q, n);
  bound.name = "toric_improved";
  bound.radius = Exact(As2Radius(q, n), q);
  return bound;
}

Bound WanPn(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  const BigInt qq = FromUint64(q);
  return {"wan_pn", Frac(Pow(qq, n - 1), BigInt(n) * (qq - 1)), Exact(Frac(3, n) * H(q, n), q)};
}

namespace {

Rational PnCenter(std::uint64_t q, unsigned n) {
  const BigInt qq = FromUint64(q);
  return Frac(Pow(qq, n) - 1, BigInt(n) * qq * (qq - 1));
}

// (q^{n/2} - 1)/(q(q-1)) + (n/2) q^{(n-4)/4}, common to both P_n radii.
Radius PnTail(std::uint64_t q, unsigned n, Surd head) {
  const Surd mid = Frac(1, static_cast<long>(q * (q - 1))) * (H(q, n) - R(1));
  return AddQuarter(Exact(head + mid, q), Frac(n, 2), long(n) - 4);
}

}  // namespace

Bound MoisioPn(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  return {"moisio_pn", PnCenter(q, n), PnTail(q, n, H(q, long(n) - 2))};
}

Bound NewPn(std::uint64_t q, unsigned n) {
  CheckQn(q, n);
  const Surd head = Frac(1, n) * (As2Radius(q, n) + R(Frac(1, static_cast<long>(q))));
  return {"new_pn", PnCenter(q, n), PnTail(q, n, head)};
}

std::pair<BigInt, BigInt> N3Range(std::uint64_t q) {
  Require(q >= 2, ErrorCode::kInvalidArgument, "q must be >= 2");
  const Rational third = Frac(1, 3);
  const Surd base = R(Rational(static_cast<long>(q) + 1));
  const Surd two_root = Rational(2) * H(q, 1);
  const Surd lower = third * (base - two_root);
  const Surd upper = third * (base + two_root);
  return {3 * lower.ceil(), 3 * upper.floor()};
}

Bound N3RangeBound(std::uint64_t q) {
  const auto [lo, hi] = N3Range(q);
  return {"n3_range", Frac(lo + hi, 2), Exact(R(Frac(hi - lo, 2)), q)};
}

bool AsBound1Claimed(std::uint64_t q, unsigned n) { return n > q - 1; }

bool AsBound2Claimed(std::uint64_t q, unsigned n) {
  if (n % (q - 1) == 0) return true;
  // n > ((q-2)/(q-1)) sqrt q - 1  <=>  (n+1)(q-1) - (q-2) sqrt q > 0.
  const long ql = static_cast<long>(q);
  const Surd diff = R(Rational((long(n) + 1) * (ql - 1))) - Rational(ql - 2) * H(q, 1);
  return diff.sign() > 0;
}

bool Tighter(const Bound& a, const Bound& b) { return CompareRadius(a.radius, b.radius) < 0; }

}  // namespace normtrace::bounds
