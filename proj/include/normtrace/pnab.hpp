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
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "normtrace/bigcount.hpp"
#include "normtrace/closedforms.hpp"
#include "normtrace/oracle.hpp"
#include "normtrace/small_field.hpp"

// Irreducible polynomials T^n - a T^{n-1} + ... + (-1)^n b over F_q: a is the
// sum of the roots (a trace), b their product (a norm). N_d providers take
// their arguments in (norm, trace) order.
namespace normtrace::pnab {

int Mobius(std::uint64_t t);

struct NnProvider {
  std::string name;
  std::shared_ptr<const SmallField> field;
  /// N_d(norm, trace) for any norm, trace in F_q.
  std::function<BigCount(unsigned d, Elem norm, Elem trace)> count;
};

/// Exhaustive census over F_{q^d}; censuses are cached and shared by copies.
NnProvider OracleProvider(std::uint32_t p, unsigned e, std::uint64_t seed = 0,
                          const oracle::EnumerationCaps& caps = {});
/// Curve count by Gauss sums, converted through the link identity.
NnProvider GaussProvider(std::uint32_t p, unsigned e, std::uint64_t seed = 0);
/// Closed forms for q in {2,3,4,5}.
NnProvider ClosedProvider(std::uint32_t p, unsigned e, closedforms::Source source);

/// P_n(a,b) by inverting N over the degree of each element:
///   E_d(s, m) = N_d(m, s) - sum_{d' | d, d' < d} sum_{(d/d') s' = s, m'^{d/d'} = m} E_{d'}(s', m'),
///   E_1(s, m) = [s = m],  P_n = E_n / n.
/// DivisibilityViolation when E_n is not a multiple of n.
BigCount Pn(const NnProvider& provider, unsigned n, Elem a, Elem b);

/// The single-sum inversion (1/n) sum_{t | n} mu(t) N_{n/t}(a, b) read
/// literally; kept to document where it breaks. DivisibilityViolation when
/// the sum is not a multiple of n.
BigCount PnLiteralInversion(const NnProvider& provider, unsigned n, Elem a, Elem b);

/// Explicit formulas for q in {2,3,4,5}. kPaperStated evaluates the printed
/// Moebius sums verbatim (Unsupported where the print has no branch);
/// kErrataCorrected runs Pn on the corrected closed forms.
BigCount PnClosed(std::uint64_t q, unsigned n, Elem a, Elem b, closedforms::Source source);

/// P_n(a,b) for all a, b in F_q; entry a * q + b.
std::vector<BigCount> PnCensus(const NnProvider& provider, unsigned n);

/// Sum of all entries of a census.
BigCount CensusTotal(const std::vector<BigCount>& census);

/// (1/n) sum_{t | n} mu(t) q^{n/t}.
BigCount NecklaceCount(std::uint64_t q, unsigned n);

}  // namespace normtrace::pnab
