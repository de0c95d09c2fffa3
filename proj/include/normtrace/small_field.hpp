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
#include <span>
#include <vector>

namespace normtrace {

// Element of a small field, encoded as the integer sum c_i p^i of its
// coefficients over F_p.
using Elem = std::uint32_t;

// Largest field order for which SmallField builds full log/exp tables.
inline constexpr std::uint32_t kMaxSmallFieldOrder = 1u << 20;

/// F_{p^e} = F_p[x]/(m(x)) with table-driven arithmetic.
///
/// The multiplicative generator is the smallest element (by index) of full
/// order p^e - 1. Immutable after construction.
class SmallField {
 public:
  /// The prime field F_p, represented as F_p[x]/(x).
  static SmallField Prime(std::uint32_t p);

  /// F_p[x]/(modulus). The modulus is monic of degree e >= 1, given low to
  /// high (e + 1 coefficients), and must be irreducible; this is not
  /// re-verified here.
  static SmallField Extension(std::uint32_t p, std::vector<Elem> modulus);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  const std::vector<Elem>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return AddDigits(a, b);
  }
  Elem neg(Elem a) const { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t k = log_[a] + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
  }
  // Throws DivisionByZero on 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t exponent) const;

  /// Discrete logarithm to the base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(Elem a) const;

  /// Trace from this field down to F_p, returned as an integer in [0, p).
  std::uint32_t absolute_trace(Elem a) const { return abs_trace_[a]; }

  /// Image of an integer under Z -> F_p -> this field.
  Elem from_integer(long long value) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  bool is_square(Elem a) const { return a == 0 || q_ % 2 == 0 || log(a) % 2 == 0; }

 private:
  SmallField(std::uint32_t p, std::vector<Elem> modulus);
  Elem AddDigits(Elem a, Elem b) const;
  Elem MulSlow(Elem a, Elem b) const;

  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<Elem> modulus_;
  Elem generator_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> add_table_;
  std::vector<std::uint32_t> abs_trace_;
};

}  // namespace normtrace
