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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace normtrace {

// Signed arbitrary-precision integer. Counts are kept in this type so that
// expressions such as q^n or 3^n never overflow.
using BigInt = mpz_class;
// Nonnegative by convention; shares the representation of BigInt.
using BigCount = mpz_class;
using Rational = mpq_class;

inline BigInt Pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline BigInt Pow(long base, unsigned long exponent) {
  return Pow(BigInt(base), exponent);
}

inline std::string ToString(const BigInt& value) { return value.get_str(); }

inline std::string ToString(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

inline bool FitsUint64(const BigInt& value) {
  return value >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t ToUint64(const BigInt& value) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

inline BigInt FromUint64(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return out;
}

// Exact division; returns false (leaving quotient untouched) when the
// divisor does not divide the dividend.
inline bool DivideExact(const BigInt& dividend, const BigInt& divisor,
                        BigInt& quotient) {
  if (divisor == 0 || !mpz_divisible_p(dividend.get_mpz_t(), divisor.get_mpz_t()))
    return false;
  mpz_divexact(quotient.get_mpz_t(), dividend.get_mpz_t(), divisor.get_mpz_t());
  return true;
}

}  // namespace normtrace
