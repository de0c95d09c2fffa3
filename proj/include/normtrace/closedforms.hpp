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
#include <string_view>

#include "normtrace/bigcount.hpp"
#include "normtrace/small_field.hpp"

namespace normtrace::closedforms {

/// Exact a + bi over arbitrary-precision integers.
class GaussianInteger {
 public:
  GaussianInteger() = default;
  GaussianInteger(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}

  const BigInt& re() const { return re_; }
  const BigInt& im() const { return im_; }
  GaussianInteger conj() const { return {re_, -im_}; }
  GaussianInteger pow(unsigned exponent) const;

  friend GaussianInteger operator+(const GaussianInteger& x, const GaussianInteger& y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend GaussianInteger operator-(const GaussianInteger& x, const GaussianInteger& y) {
    return {x.re_ - y.re_, x.im_ - y.im_};
  }
  friend GaussianInteger operator*(const GaussianInteger& x, const GaussianInteger& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend bool operator==(const GaussianInteger& x, const GaussianInteger& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

 private:
  BigInt re_ = 0;
  BigInt im_ = 0;
};

// Printed formulas versus formulas re-derived with the conj(lambda)(a)
// factor kept; the latter are what the oracle confirms.
enum class Source { kPaperStated, kErrataCorrected };
std::string_view SourceName(Source source);

struct FormulaResult {
  BigInt value;
  Source source = Source::kPaperStated;
  std::string branch;
};

/// N_2(a,b) for odd q from the discriminant b^2 - 4a: 0 if a nonzero
/// square, 1 if zero, 2 if a non-square.
int N2Closed(const SmallField& field, Elem a, Elem b);

struct PairCensus {
  std::uint64_t zero = 0;
  std::uint64_t one = 0;
  std::uint64_t two = 0;
  bool operator==(const PairCensus&) const = default;
};
/// ((q-1)(q-3)/2, q-1, (q-1)^2/2).
PairCensus N2PairCensus(std::uint64_t q);
/// The same three counts by classifying every (a,b) in (F_q^*)^2.
PairCensus N2PairCensusExhaustive(const SmallField& field);

/// 2^{n-1}.
BigCount NnQ2(unsigned n);

// Element arguments are indices in the tower encoding: F_3 and F_5 are the
// integers mod p (g = 2 in both), F_4 = F_2[x]/(x^2+x+1) with w = x = 2.
// Norm targets must be nonzero; nn_* also need b != 0.
FormulaResult NnQ3(unsigned n, Elem a, Elem b, Source source);
FormulaResult CurveQ3(unsigned n, Elem a, Elem b, Source source);
FormulaResult NnQ4(unsigned n, Elem a, Elem b, Source source);
FormulaResult CurveQ4(unsigned n, Elem a, Elem b, Source source);
FormulaResult NnQ5(unsigned n, Elem a, Elem b, Source source);
FormulaResult CurveQ5(unsigned n, Elem a, Elem b, Source source);

bool HasClosedForm(std::uint64_t q);
/// Dispatch on q in {2,3,4,5}. For q = 2 both sources give 2^{n-1}.
FormulaResult NnClosed(std::uint64_t q, unsigned n, Elem a, Elem b, Source source);
FormulaResult CurveClosed(std::uint64_t q, unsigned n, Elem a, Elem b, Source source);

}  // namespace normtrace::closedforms
