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

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "normtrace/bigcount.hpp"
#include "normtrace/polynomial.hpp"
#include "normtrace/small_field.hpp"
#include "normtrace/top_field.hpp"

namespace normtrace {

enum class Level { kPrime, kMid, kTop };
std::string_view LevelName(Level level);

/// Tagged element. Prime level: one F_p value. Mid level: e coefficients in
/// F_p. Top level: n coefficients, each a mid-level index.
struct FieldElement {
  Level level = Level::kPrime;
  std::vector<std::uint32_t> coeffs;

  bool operator==(const FieldElement&) const = default;
};

enum class ArithOp { kAdd, kSub, kMul, kInv, kPow };

/// F_p < F_q = F_{p^e} < F_{q^n}.
///
/// Moduli are found by scanning monic polynomials of the right degree in
/// index order starting at `seed` (wrapping around); the first irreducible
/// one wins, so seed 0 selects the lexicographically smallest. A degree-1
/// step uses the modulus x. Primitive elements are the smallest indices of
/// full order. The index of an element is sum c_i p^i over its flattened
/// F_p coefficients, which equals sum d_j q^j over its mid coefficients.
class FieldTower {
 public:
  static std::shared_ptr<const FieldTower> Build(std::uint32_t p, unsigned e, unsigned n,
                                                 std::uint64_t seed = 0,
                                                 std::uint64_t table_cap = kDefaultTableCap);

  std::uint32_t p() const { return prime_->characteristic(); }
  unsigned e() const { return mid_->degree(); }
  unsigned n() const { return top_->degree(); }
  std::uint32_t q() const { return mid_->order(); }
  std::uint64_t order() const { return top_->order(); }
  std::uint64_t seed() const { return seed_; }

  const std::vector<Elem>& base_modulus() const { return mid_->modulus(); }
  const poly::Poly& top_modulus() const { return top_->modulus(); }
  Elem g_q() const { return mid_->generator(); }
  TopIndex g_qn() const { return top_->generator(); }

  const SmallField& prime_field() const { return *prime_; }
  const SmallField& mid() const { return *mid_; }
  const TopField& top() const { return *top_; }
  std::shared_ptr<const SmallField> mid_ptr() const { return mid_; }

  std::uint64_t LevelOrder(Level level) const;
  FieldElement Element(Level level, std::uint64_t index) const;
  std::uint64_t Index(const FieldElement& x) const;

  /// Binary ops (add, sub, mul) and inv; LevelMismatch on mixed levels.
  FieldElement Arith(ArithOp op, const FieldElement& x, const FieldElement& y) const;
  FieldElement Arith(ArithOp op, const FieldElement& x) const;
  FieldElement Pow(const FieldElement& x, const BigCount& exponent) const;

  FieldElement Trace(const FieldElement& z) const;
  FieldElement Norm(const FieldElement& z) const;
  // Mid or top level; ZeroArgument on 0.
  BigCount DiscreteLog(const FieldElement& x) const;
  FieldElement NormPreimage(const FieldElement& a) const;
  FieldElement TracePreimage(const FieldElement& b) const;

  // Index-level versions of the preimage solvers.
  TopIndex NormPreimageIndex(Elem a) const;
  TopIndex TracePreimageIndex(Elem b) const;
  // Up to `count` distinct preimages: alpha * g^((q-1)k) and beta + y^q - y.
  std::vector<TopIndex> NormPreimages(Elem a, std::size_t count) const;
  std::vector<TopIndex> TracePreimages(Elem b, std::size_t count) const;

 private:
  FieldTower() = default;
  void CheckLevel(const FieldElement& x, Level level) const;

  std::uint64_t seed_ = 0;
  std::shared_ptr<const SmallField> prime_;
  std::shared_ptr<const SmallField> mid_;
  std::shared_ptr<const TopField> top_;
  std::uint64_t norm_log_inverse_ = 0;  // inverse of log Norm(g_qn) mod q-1
};

/// Irreducibility of a monic polynomial over the prime or mid level.
bool IsIrreducible(const FieldTower& tower, Level level, const poly::Poly& f);

}  // namespace normtrace
