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

#include "normtrace/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "normtrace/error.hpp"
#include "normtrace/numtheory.hpp"

namespace normtrace::poly {

void Trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int Degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Poly Add(const SmallField& F, const Poly& f, const Poly& g) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Elem a = i < f.size() ? f[i] : 0;
    const Elem b = i < g.size() ? g[i] : 0;
    out[i] = F.add(a, b);
  }
  Trim(out);
  return out;
}

Poly Sub(const SmallField& F, const Poly& f, const Poly& g) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Elem a = i < f.size() ? f[i] : 0;
    const Elem b = i < g.size() ? g[i] : 0;
    out[i] = F.sub(a, b);
  }
  Trim(out);
  return out;
}

Poly Mul(const SmallField& F, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(f[i], g[j]));
    }
  }
  Trim(out);
  return out;
}

Poly Mod(const SmallField& F, Poly f, const Poly& g) {
  const int dg = Degree(g);
  Require(dg >= 0, ErrorCode::kDivisionByZero, "polynomial modulus is zero");
  Trim(f);
  const Elem lead_inv = F.inv(g[dg]);
  for (int k = Degree(f); k >= dg; k = Degree(f)) {
    const Elem c = F.mul(f[k], lead_inv);
    for (int i = 0; i <= dg; ++i) {
      f[k - dg + i] = F.sub(f[k - dg + i], F.mul(c, g[i]));
    }
    Trim(f);
  }
  return f;
}

Poly MulMod(const SmallField& F, const Poly& f, const Poly& g, const Poly& modulus) {
  return Mod(F, Mul(F, f, g), modulus);
}

Poly PowMod(const SmallField& F, Poly base, std::uint64_t exponent, const Poly& modulus) {
  Poly result = Mod(F, Poly{1}, modulus);
  base = Mod(F, std::move(base), modulus);
  while (exponent > 0) {
    if (exponent & 1) result = MulMod(F, result, base, modulus);
    exponent >>= 1;
    if (exponent > 0) base = MulMod(F, base, base, modulus);
  }
  return result;
}

Poly Gcd(const SmallField& F, Poly f, Poly g) {
  Trim(f);
  Trim(g);
  while (!g.empty()) {
    Poly r = Mod(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (f.empty()) return f;
  const Elem lead_inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, lead_inv);
  return f;
}

Elem Evaluate(const SmallField& F, const Poly& f, Elem x) {
  Elem acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

bool IsIrreducible(const SmallField& F, const Poly& f) {
  const int m = Degree(f);
  Require(m >= 1 && f[m] == 1, ErrorCode::kInvalidArgument,
          "irreducibility test needs a monic polynomial of degree >= 1");
  if (m == 1) return true;
  const Poly x{0, 1};
  // frobenius[k] = x^(q^k) mod f
  std::vector<Poly> frobenius(m + 1);
  frobenius[0] = Mod(F, x, f);
  for (int k = 1; k <= m; ++k) frobenius[k] = PowMod(F, frobenius[k - 1], F.order(), f);
  if (Sub(F, frobenius[m], frobenius[0]).size() != 0) return false;
  for (auto prime : nt::DistinctPrimeFactors(static_cast<std::uint64_t>(m))) {
    const Poly g = Gcd(F, Sub(F, frobenius[m / prime], x), f);
    if (Degree(g) != 0) return false;
  }
  return true;
}

Poly MonicFromIndex(const SmallField& F, unsigned degree, std::uint64_t index) {
  Poly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = static_cast<Elem>(index % F.order());
    index /= F.order();
  }
  f[degree] = 1;
  return f;
}

}  // namespace normtrace::poly
