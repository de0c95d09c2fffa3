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
#include <vector>

#include "normtrace/small_field.hpp"

namespace normtrace::poly {

// Dense univariate polynomial over a SmallField, coefficients low to high.
// The zero polynomial is the empty vector; other values carry no trailing
// zeros once passed through Trim.
using Poly = std::vector<Elem>;

void Trim(Poly& f);
int Degree(const Poly& f);  // -1 for the zero polynomial

Poly Add(const SmallField& F, const Poly& f, const Poly& g);
Poly Sub(const SmallField& F, const Poly& f, const Poly& g);
Poly Mul(const SmallField& F, const Poly& f, const Poly& g);
// Remainder of f modulo a nonzero g.
Poly Mod(const SmallField& F, Poly f, const Poly& g);
Poly MulMod(const SmallField& F, const Poly& f, const Poly& g, const Poly& modulus);
Poly PowMod(const SmallField& F, Poly base, std::uint64_t exponent, const Poly& modulus);
// Monic gcd (zero if both inputs are zero).
Poly Gcd(const SmallField& F, Poly f, Poly g);

Elem Evaluate(const SmallField& F, const Poly& f, Elem x);

/// Rabin's test: f monic of degree m >= 1 is irreducible over F iff
/// x^(q^m) = x mod f and gcd(x^(q^(m/l)) - x, f) = 1 for every prime l | m.
bool IsIrreducible(const SmallField& F, const Poly& f);

/// Monic polynomial of degree m whose lower coefficients are the base-q
/// digits of index.
Poly MonicFromIndex(const SmallField& F, unsigned degree, std::uint64_t index);

}  // namespace normtrace::poly
