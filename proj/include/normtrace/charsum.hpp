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


#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "normtrace/bigcount.hpp"
#include "normtrace/small_field.hpp"
#include "normtrace/tower.hpp"

namespace normtrace::charsum {

using ComplexValue = std::complex<double>;

enum class CharKind { kAdditive, kMultiplicative };

/// Multiplicative: lambda_j(g^k) = exp(2 pi i j k / (order - 1)).
/// Additive: chi_t(c) = exp(2 pi i AbsTr(t c) / p). Index 0 is trivial.
struct CharacterRef {
  CharKind kind = CharKind::kAdditive;
  Level level = Level::kMid;
  std::uint64_t index = 0;
};

ComplexValue EvalChar(const FieldTower& tower, const CharacterRef& c, std::uint64_t x);

/// sum over c != 0 of mult(c) add(c), by direct enumeration of the level.
ComplexValue GaussSum(const FieldTower& tower, const CharacterRef& mult, const CharacterRef& add);

/// lambda_j o Norm as a multiplicative character of F_{q^n}.
CharacterRef LiftToTop(const FieldTower& tower, std::uint64_t j);

/// Character values and the Gauss sums G(lambda_j, chi) of one field F_q,
/// with chi canonical. Built once; immutable afterwards.
class GaussTable {
 public:
  explicit GaussTable(std::shared_ptr<const SmallField> field);

  const SmallField& field() const { return *field_; }
  std::uint64_t group() const { return field_->order() - 1; }

  ComplexValue lambda(std::uint64_t j, Elem x) const;  // x != 0
  ComplexValue chi(Elem x) const;
  ComplexValue gauss(std::uint64_t j) const { return gauss_[j % group()]; }
  /// G(lambda_j, chi_t) for any t, using the exact values for j = 0.
  ComplexValue gauss(std::uint64_t j, Elem t) const;
  /// G(lambda_j, chi)^n, from the polar form when j != 0.
  ComplexValue gauss_power(std::uint64_t j, unsigned n) const;

 private:
  std::shared_ptr<const SmallField> field_;
  std::vector<ComplexValue> unity_;     // exp(2 pi i k / (q - 1))
  std::vector<ComplexValue> additive_;  // chi(x) by index
  std::vector<ComplexValue> gauss_;
};

/// Davenport-Hasse: G(lambda o Norm, mu) = (-1)^{n-1} G(lambda, chi)^n.
ComplexValue DavenportHasseLift(const GaussTable& table, std::uint64_t j, unsigned n);

/// The lift computed both ways over F_{q^n}: by direct summation against the
/// canonical additive character, and by the identity above.
struct LiftCheck {
  ComplexValue direct;
  ComplexValue lifted;
  bool agrees = false;  // |direct - lifted| < 1e-6 q^{n/2}
};
LiftCheck CheckDavenportHasse(const FieldTower& tower, const GaussTable& table, std::uint64_t j);

struct RoundedCount {
  BigInt value;
  double residual = 0;  // distance of the complex sum from the returned integer
};

/// #X over F_{q^n} for Norm(alpha) = a, Tr(beta) = b:
/// q^n + 1 + (-1)^{n-1} sum_{j != 0} G(lambda_j, chi)^n conj(lambda_j(a)) G(conj(lambda_j)^n, chi_{-b}).
/// RoundingTooLarge when the residual is not below 1e-6 q^{n/2}.
RoundedCount CountCurveGauss(const GaussTable& table, unsigned n, Elem a, Elem b);

/// #Y_u from q(q-1) #Y_u = (q-1)^n + sum_lambda G(lambda,chi)^n G(conj(lambda)^n,chi) conj(lambda)((-1)^n u).
RoundedCount CountToricGauss(const GaussTable& table, unsigned n, Elem u);

/// u = a / b^n.
Elem ToricParameter(const SmallField& field, unsigned n, Elem a, Elem b);

/// N_n(a,b) = (#X - 1) / (q(q-1)) for b != 0; DivisibilityViolation otherwise.
BigCount NnViaCurve(std::uint64_t q, const BigCount& curve_points);
/// N_n(a,0) = (#X - 1 - q) / (q(q-1)).
BigCount NnViaCurveZeroTrace(std::uint64_t q, const BigCount& curve_points);
/// N_n(a,b) = (q^{n-1}-1)/(q-1) + (-1)^{n-1} (#Y_u - ((q-1)^{n-1} - (-1)^{n-1})/q).
BigCount NnViaToric(std::uint64_t q, unsigned n, const BigCount& toric_points);

}  // namespace normtrace::charsum
