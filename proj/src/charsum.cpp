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


#include "normtrace/charsum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "normtrace/error.hpp"

namespace normtrace::charsum {

namespace {

ComplexValue UnitRoot(std::uint64_t k, std::uint64_t order) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % order) / static_cast<double>(order);
  return {std::cos(angle), std::sin(angle)};
}

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

RoundedCount RoundChecked(const BigInt& base, ComplexValue sum, double scale) {
  const double nearest = std::nearbyint(sum.real());
  const double residual = std::max(std::abs(sum.real() - nearest), std::abs(sum.imag()));
  Require(residual < 1e-6 * scale, ErrorCode::kRoundingTooLarge,
          "character sum residual " + std::to_string(residual) + " is too large");
  BigInt rounded;
  mpz_set_d(rounded.get_mpz_t(), nearest);
  return {base + rounded, residual};
}

}  // namespace

ComplexValue EvalChar(const FieldTower& tower, const CharacterRef& c, std::uint64_t x) {
  const std::uint64_t order = tower.LevelOrder(c.level);
  Require(x < order, ErrorCode::kInvalidArgument, "argument out of range");
  Require(c.level != Level::kPrime || tower.e() == 1, ErrorCode::kUnsupported,
          "characters live on the mid and top levels");
  if (c.kind == CharKind::kMultiplicative) {
    Require(x != 0, ErrorCode::kZeroArgument, "multiplicative character at zero");
    const std::uint64_t group = order - 1;
    const std::uint64_t log = c.level == Level::kTop ? tower.top().log(x)
                                                     : tower.mid().log(static_cast<Elem>(x));
    return UnitRoot(MulMod(c.index % group, log, group), group);
  }
  // Additive: absolute trace of t x down to F_p.
  std::uint32_t abs_trace = 0;
  if (c.level == Level::kTop) {
    const TopIndex tx = tower.top().mul(c.index % order, x);
    abs_trace = tower.mid().absolute_trace(tower.top().trace(tx));
  } else {
    const Elem tx = tower.mid().mul(static_cast<Elem>(c.index % order), static_cast<Elem>(x));
    abs_trace = tower.mid().absolute_trace(tx);
  }
  return UnitRoot(abs_trace, tower.p());
}

ComplexValue GaussSum(const FieldTower& tower, const CharacterRef& mult, const CharacterRef& add) {
  Require(mult.level == add.level, ErrorCode::kLevelMismatch, "characters on different levels");
  Require(mult.kind == CharKind::kMultiplicative && add.kind == CharKind::kAdditive,
          ErrorCode::kInvalidArgument, "Gauss sum takes a multiplicative and an additive character");
  const std::uint64_t order = tower.LevelOrder(mult.level);
  ComplexValue sum = 0;
  for (std::uint64_t c = 1; c < order; ++c) sum += EvalChar(tower, mult, c) * EvalChar(tower, add, c);
  return sum;
}

CharacterRef LiftToTop(const FieldTower& tower, std::uint64_t j) {
  // lambda_j(Norm(g_Q^k)) = lambda_j(g_q^{L k}) with L = log Norm(g_Q).
  const std::uint64_t q1 = tower.q() - 1;
  const std::uint64_t group = tower.order() - 1;
  const std::uint64_t L = tower.mid().log(tower.top().generator_norm());
  const std::uint64_t index = MulMod(MulMod(j % q1, L, q1), group / q1, group);
  return {CharKind::kMultiplicative, Level::kTop, index};
}

GaussTable::GaussTable(std::shared_ptr<const SmallField> field) : field_(std::move(field)) {
  const std::uint64_t q = field_->order();
  unity_.resize(q - 1);
  for (std::uint64_t k = 0; k + 1 < q; ++k) unity_[k] = UnitRoot(k, q - 1);
  additive_.resize(q);
  for (Elem x = 0; x < q; ++x) additive_[x] = UnitRoot(field_->absolute_trace(x), field_->characteristic());
  gauss_.assign(q - 1, 0);
  for (std::uint64_t j = 0; j + 1 < q; ++j) {
    ComplexValue sum = 0;
    for (Elem c = 1; c < q; ++c) sum += lambda(j, c) * additive_[c];
    gauss_[j] = sum;
  }
  gauss_[0] = -1;  // exact
}

ComplexValue GaussTable::lambda(std::uint64_t j, Elem x) const {
  Require(x != 0, ErrorCode::kZeroArgument, "multiplicative character at zero");
  return unity_[MulMod(j % group(), field_->log(x), group())];
}

ComplexValue GaussTable::chi(Elem x) const { return additive_[x]; }

ComplexValue GaussTable::gauss(std::uint64_t j, Elem t) const {
  j %= group();
  if (t == 0) return j == 0 ? ComplexValue(static_cast<double>(group()), 0) : ComplexValue(0, 0);
  if (j == 0) return -1;
  // G(lambda, chi_t) = conj(lambda(t)) G(lambda, chi)
  return std::conj(lambda(j, t)) * gauss_[j];
}

ComplexValue GaussTable::gauss_power(std::uint64_t j, unsigned n) const {
  j %= group();
  if (j == 0) return n % 2 == 0 ? 1.0 : -1.0;
  const double radius = std::pow(static_cast<double>(field_->order()), n / 2.0);
  return std::polar(radius, n * std::arg(gauss_[j]));
}

ComplexValue DavenportHasseLift(const GaussTable& table, std::uint64_t j, unsigned n) {
  Require(j % table.group() != 0, ErrorCode::kTrivialCharacter, "lift needs a nontrivial character");
  const double sign = n % 2 == 1 ? 1.0 : -1.0;
  return sign * table.gauss_power(j, n);
}

RoundedCount CountCurveGauss(const GaussTable& table, unsigned n, Elem a, Elem b) {
  const SmallField& K = table.field();
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  Require(a != 0 && a < K.order(), ErrorCode::kZeroArgument, "a must be nonzero");
  Require(b < K.order(), ErrorCode::kInvalidArgument, "b out of range");
  const std::uint64_t group = table.group();
  const Elem minus_b = K.neg(b);
  const double sign = n % 2 == 1 ? 1.0 : -1.0;
  ComplexValue sum = 0;
  for (std::uint64_t j = 1; j < group; ++j) {
    const std::uint64_t conj_pow = (group - MulMod(j, n, group)) % group;  // conj(lambda_j)^n
    sum += table.gauss_power(j, n) * std::conj(table.lambda(j, a)) * table.gauss(conj_pow, minus_b);
  }
  sum *= sign;
  const BigInt base = Pow(BigInt(static_cast<long>(K.order())), n) + 1;
  return RoundChecked(base, sum, std::pow(static_cast<double>(K.order()), n / 2.0));
}

RoundedCount CountToricGauss(const GaussTable& table, unsigned n, Elem u) {
  const SmallField& K = table.field();
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  Require(u != 0 && u < K.order(), ErrorCode::kZeroArgument, "u must be nonzero");
  const std::uint64_t q = K.order();
  const std::uint64_t group = table.group();
  const Elem signed_u = n % 2 == 0 ? u : K.neg(u);
  ComplexValue sum = 0;
  for (std::uint64_t j = 0; j < group; ++j) {
    const std::uint64_t conj_pow = (group - MulMod(j, n, group)) % group;
    sum += table.gauss_power(j, n) * table.gauss(conj_pow) * std::conj(table.lambda(j, signed_u));
  }
  const BigInt base = Pow(BigInt(static_cast<long>(group)), n);
  const RoundedCount total = RoundChecked(base, sum, std::pow(static_cast<double>(q), n / 2.0));
  BigInt value;
  Require(DivideExact(total.value, BigInt(static_cast<long>(q * group)), value),
          ErrorCode::kNonIntegerResult,
          "q(q-1) does not divide the toric character sum " + ToString(total.value));
  return {value, total.residual};
}

Elem ToricParameter(const SmallField& K, unsigned n, Elem a, Elem b) {
  Require(a != 0 && b != 0, ErrorCode::kZeroArgument, "toric parameter needs ab != 0");
  return K.div(a, K.pow(b, n));
}

BigCount NnViaCurve(std::uint64_t q, const BigCount& curve_points) {
  BigCount out;
  Require(DivideExact(curve_points - 1, BigInt(static_cast<long>(q * (q - 1))), out),
          ErrorCode::kDivisibilityViolation,
          "q(q-1) does not divide #X - 1 = " + ToString(BigInt(curve_points - 1)));
  return out;
}

BigCount NnViaCurveZeroTrace(std::uint64_t q, const BigCount& curve_points) {
  BigCount out;
  const BigInt shifted = curve_points - 1 - static_cast<long>(q);
  Require(DivideExact(shifted, BigInt(static_cast<long>(q * (q - 1))), out),
          ErrorCode::kDivisibilityViolation,
          "q(q-1) does not divide #X - 1 - q = " + ToString(shifted));
  return out;
}

BigCount NnViaToric(std::uint64_t q, unsigned n, const BigCount& toric_points) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  const BigInt Q(static_cast<long>(q));
  const BigInt sign = (n - 1) % 2 == 0 ? 1 : -1;
  BigInt center, shift;
  Require(DivideExact(Pow(Q, n - 1) - 1, Q - 1, center), ErrorCode::kNonIntegerResult,
          "(q^{n-1}-1)/(q-1) is not integral");
  Require(DivideExact(Pow(Q - 1, n - 1) - sign, Q, shift), ErrorCode::kNonIntegerResult,
          "toric center is not integral");
  return center + sign * (toric_points - shift);
}

LiftCheck CheckDavenportHasse(const FieldTower& tower, const GaussTable& table, std::uint64_t j) {
  LiftCheck out;
  out.direct = GaussSum(tower, LiftToTop(tower, j), CharacterRef{CharKind::kAdditive, Level::kTop, 1});
  out.lifted = DavenportHasseLift(table, j, tower.n());
  out.agrees = std::abs(out.direct - out.lifted) < 1e-6 * std::sqrt(static_cast<double>(tower.order()));
  return out;
}

}  // namespace normtrace::charsum
