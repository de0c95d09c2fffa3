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
#include <string>
#include <utility>
#include <vector>

#include "normtrace/bigcount.hpp"

namespace normtrace::bounds {

/// x + y sqrt(r) with x, y rational and r squarefree; r = 1 folds y into x.
class Surd {
 public:
  Surd() = default;
  explicit Surd(Rational x, Rational y = 0, std::uint64_t r = 1);

  /// q^{k/2} for any integer k.
  static Surd QHalfPower(std::uint64_t q, long k);

  const Rational& rational_part() const { return x_; }
  const Rational& surd_part() const { return y_; }
  std::uint64_t radicand() const { return r_; }

  int sign() const;
  long double to_long_double() const;
  BigInt floor() const;
  BigInt ceil() const;

  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator*(const Rational& c, const Surd& a);
  friend bool operator==(const Surd& a, const Surd& b) { return (a - b).sign() == 0; }

 private:
  Rational x_ = 0;
  Rational y_ = 0;
  std::uint64_t r_ = 1;
};

/// Squarefree part r of q = s^2 r, returned as (s, r).
std::pair<std::uint64_t, std::uint64_t> SquarefreeSplit(std::uint64_t q);

/// exact + quartic_coeff * q^{quartic_exp / 4}. Only the P_n bounds carry a
/// quartic term; everything else is exact in Q(sqrt q).
struct Radius {
  Surd exact;
  Rational quartic_coeff = 0;
  long quartic_exp = 0;
  std::uint64_t q = 0;

  bool is_exact() const { return quartic_coeff == 0; }
  long double to_long_double() const;
  /// Outward-rounded enclosure.
  std::pair<long double, long double> enclose() const;
  std::string to_string() const;
};

/// -1, 0, 1. Exact when both radii are exact; otherwise by enclosures, with
/// overlapping enclosures reported as 0.
int CompareRadius(const Radius& a, const Radius& b);

struct Bound {
  std::string name;
  Rational center;
  Radius radius;
};

struct Comparison {
  std::string other;
  bool tighter = false;
};

struct BoundReport {
  std::string name;
  std::string instance;
  Rational center;
  Radius radius;
  BigCount observed;
  bool holds = false;
  bool exact = true;  // decided in exact arithmetic
  std::vector<Comparison> comparisons;
};

/// holds <=> |observed - center| <= radius.
BoundReport Check(const Bound& bound, const BigCount& observed, std::string instance);

// N_n(a,b) bounds.
Bound Katz(std::uint64_t q, unsigned n);
Bound MoisioB0(std::uint64_t q, unsigned n);
Bound MoisioWan(std::uint64_t q, unsigned n);
Bound AsBound1(std::uint64_t q, unsigned n);
Bound AsBound2(std::uint64_t q, unsigned n);

// #X bounds (projective count, one point at infinity). kPrinted keeps the
// b = 0 center q^n + 1 - q as printed; kCorrected uses q^n + 1.
enum class HwCenter { kPrinted, kCorrected };
Bound ImprovedHw(std::uint64_t q, unsigned n, bool b_is_zero, HwCenter center = HwCenter::kPrinted);
Bound HasseWeil(std::uint64_t q, unsigned n);
Bound CurveViaToric(std::uint64_t q, unsigned n);
/// n < floor((q-2) q^{i/2} / (1 - 1/q)) + 1, i = 0 if q-1 | n else 1.
bool CurveViaToricCondition(std::uint64_t q, unsigned n);

// #Y_u bounds.
Bound ToricMw(std::uint64_t q, unsigned n);
Bound ToricImproved(std::uint64_t q, unsigned n);

// P_n(a,b) bounds.
Bound WanPn(std::uint64_t q, unsigned n);
Bound MoisioPn(std::uint64_t q, unsigned n);
Bound NewPn(std::uint64_t q, unsigned n);

/// [3 ceil((q+1-2 sqrt q)/3), 3 floor((q+1+2 sqrt q)/3)].
std::pair<BigInt, BigInt> N3Range(std::uint64_t q);
/// The same range as a (midpoint, half-width) pair.
Bound N3RangeBound(std::uint64_t q);

// Stated improvement conditions.
bool AsBound1Claimed(std::uint64_t q, unsigned n);  // n > q - 1
bool AsBound2Claimed(std::uint64_t q, unsigned n);  // q-1 | n or n > ((q-2)/(q-1)) sqrt q - 1

/// Strictly smaller radius.
bool Tighter(const Bound& a, const Bound& b);

}  // namespace normtrace::bounds
