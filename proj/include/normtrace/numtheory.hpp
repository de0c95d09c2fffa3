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
#include <optional>
#include <utility>
#include <vector>

// Integer helpers sized for desk-scale parameters; factorization is plain
// trial division.
namespace normtrace::nt {

bool IsPrime(std::uint64_t value);

// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, int>> Factorize(std::uint64_t value);

std::vector<std::uint64_t> DistinctPrimeFactors(std::uint64_t value);

// Sorted positive divisors.
std::vector<std::uint64_t> Divisors(std::uint64_t value);

std::uint64_t Gcd(std::uint64_t a, std::uint64_t b);

// Inverse of a modulo m (m >= 1), or nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> ModInverse(std::uint64_t a, std::uint64_t m);

// Moebius function; value must be >= 1.
int Mobius(std::uint64_t value);

// base^exponent, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> CheckedPow(std::uint64_t base, unsigned exponent);

// If value = base^k for a prime base, returns (base, k).
std::optional<std::pair<std::uint64_t, unsigned>> PrimePowerDecomposition(
    std::uint64_t value);

}  // namespace normtrace::nt
