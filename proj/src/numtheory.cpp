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

#include "normtrace/numtheory.hpp"

#include <algorithm>

#include "normtrace/error.hpp"

namespace normtrace::nt {

bool IsPrime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> Factorize(std::uint64_t value) {
  Require(value >= 1, ErrorCode::kInvalidArgument, "cannot factor 0");
  std::vector<std::pair<std::uint64_t, int>> factors;
  for (std::uint64_t d = 2; d * d <= value; d += (d == 2 ? 1 : 2)) {
    if (value % d != 0) continue;
    int exponent = 0;
    while (value % d == 0) {
      value /= d;
      ++exponent;
    }
    factors.emplace_back(d, exponent);
  }
  if (value > 1) factors.emplace_back(value, 1);
  return factors;
}

std::vector<std::uint64_t> DistinctPrimeFactors(std::uint64_t value) {
  std::vector<std::uint64_t> primes;
  for (const auto& [prime, exponent] : Factorize(value)) primes.push_back(prime);
  return primes;
}

std::vector<std::uint64_t> Divisors(std::uint64_t value) {
  std::vector<std::uint64_t> divisors{1};
  for (const auto& [prime, exponent] : Factorize(value)) {
    const std::size_t count = divisors.size();
    std::uint64_t power = 1;
    for (int k = 1; k <= exponent; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::uint64_t Gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::optional<std::uint64_t> ModInverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quotient = old_r / r;
    __int128 tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  const __int128 mod = m;
  return static_cast<std::uint64_t>(((old_s % mod) + mod) % mod);
}

int Mobius(std::uint64_t value) {
  Require(value >= 1, ErrorCode::kInvalidArgument, "Mobius needs t >= 1");
  int sign = 1;
  for (const auto& [prime, exponent] : Factorize(value)) {
    if (exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::optional<std::uint64_t> CheckedPow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return std::nullopt;
    out *= base;
  }
  return out;
}

std::optional<std::pair<std::uint64_t, unsigned>> PrimePowerDecomposition(
    std::uint64_t value) {
  if (value < 2) return std::nullopt;
  const auto factors = Factorize(value);
  if (factors.size() != 1) return std::nullopt;
  return std::make_pair(factors[0].first, static_cast<unsigned>(factors[0].second));
}

}  // namespace normtrace::nt
