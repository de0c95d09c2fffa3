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
#include <span>
#include <vector>

#include "normtrace/polynomial.hpp"
#include "normtrace/small_field.hpp"

namespace normtrace {

// Element of F_{q^n}: the integer sum d_j q^j of its coefficients d_j in F_q
// with respect to the power basis 1, x, ..., x^(n-1).
using TopIndex = std::uint64_t;

// Top fields must satisfy q^n < 2^48 so that q^n - 1 can be factored by
// trial division when searching for a primitive element.
inline constexpr std::uint64_t kMaxTopOrder = std::uint64_t{1} << 48;
// Default size limit for the exp/log/trace tables.
inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 23;

/// F_{q^n} = F_q[x]/(modulus) over a SmallField F_q.
///
/// When q^n is at most the table cap the constructor tabulates powers of the
/// generator, discrete logs and relative traces; all arithmetic then runs in
/// O(1) or O(n). Above the cap everything falls back to polynomial
/// arithmetic. The object is immutable after construction.
class TopField {
 public:
  TopField(std::shared_ptr<const SmallField> base, poly::Poly modulus,
           std::uint64_t table_cap = kDefaultTableCap);

  const SmallField& base() const { return *base_; }
  unsigned degree() const { return n_; }
  std::uint64_t order() const { return order_; }
  const poly::Poly& modulus() const { return modulus_; }
  TopIndex generator() const { return generator_; }
  bool has_tables() const { return !exp_.empty(); }

  std::vector<Elem> digits(TopIndex z) const;
  TopIndex from_digits(std::span<const Elem> digits) const;
  TopIndex embed(Elem c) const { return c; }

  TopIndex add(TopIndex a, TopIndex b) const;
  TopIndex neg(TopIndex a) const;
  TopIndex sub(TopIndex a, TopIndex b) const { return add(a, neg(b)); }
  TopIndex mul(TopIndex a, TopIndex b) const;
  TopIndex scale(Elem c, TopIndex z) const;
  TopIndex inv(TopIndex a) const;
  TopIndex pow(TopIndex a, std::uint64_t exponent) const;

  /// Relative trace and norm down to F_q.
  Elem trace(TopIndex z) const;
  Elem norm(TopIndex z) const;

  /// Discrete log to the base generator(); z must be nonzero.
  std::uint64_t log(TopIndex z) const;
  TopIndex exp(std::uint64_t k) const;

  /// Norm of the generator as an element of F_q; it is primitive there.
  Elem generator_norm() const { return generator_norm_; }

 private:
  TopIndex MulPoly(TopIndex a, TopIndex b) const;
  TopIndex PowPoly(TopIndex a, std::uint64_t exponent) const;
  Elem TraceSlow(TopIndex z) const;
  std::uint64_t LogBabyGiant(TopIndex z) const;
  void BuildTables();

  std::shared_ptr<const SmallField> base_;
  poly::Poly modulus_;
  unsigned n_ = 0;
  std::uint64_t q_ = 0;
  std::uint64_t order_ = 0;
  unsigned digit_bits_ = 0;  // nonzero when q is a power of two
  TopIndex generator_ = 0;
  Elem generator_norm_ = 0;
  std::uint32_t generator_norm_log_ = 0;
  std::vector<Elem> basis_trace_;  // Tr(x^j), j < n
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> trace_;
};

}  // namespace normtrace
