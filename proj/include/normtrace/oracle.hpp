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

#include "normtrace/bigcount.hpp"
#include "normtrace/small_field.hpp"
#include "normtrace/tower.hpp"

// Brute-force ground truth. Every counter enumerates its whole domain and
// refuses (ScaleExceeded) when the domain is above the configured cap.
namespace normtrace::oracle {

struct EnumerationCaps {
  std::uint64_t elements = 300000;     // q^n for N and curve counts; q^{2n} for the naive curve count
  std::uint64_t toric_tuples = 10000;  // (q-1)^{n-1}
  std::uint64_t poly_tests = 100000;   // q^{n-2} irreducibility tests
};

// Worker count from NORMTRACE_THREADS (default 1). Results never depend on it.
unsigned WorkerThreads();

/// N_n(a,b) = #{z in F_{q^n} : Norm(z) = a, Tr(z) = b}.
BigCount CountNormTrace(const FieldTower& tower, Elem a, Elem b, const EnumerationCaps& caps = {});

/// Full table of N_n(a,b); entry a * q + b. One pass over F_{q^n}.
std::vector<std::uint64_t> NormTraceCensus(const FieldTower& tower, const EnumerationCaps& caps = {});

/// hist[c] = #{x in F_{q^n} : Tr(alpha x^{q-1}) = c}, x = 0 included.
std::vector<std::uint64_t> CurveTraceHistogram(const FieldTower& tower, TopIndex alpha,
                                               const EnumerationCaps& caps = {});

/// Projective point count of y^q - y = alpha x^{q-1} - beta over F_{q^n}:
/// q * #{x : Tr(alpha x^{q-1} - beta) = 0} + 1 (one point at infinity).
BigCount CountCurvePointsTraceFiber(const FieldTower& tower, TopIndex alpha, TopIndex beta,
                                    const EnumerationCaps& caps = {});

/// Same count by testing every affine pair (x, y); cost q^{2n}.
BigCount CountCurvePointsNaive(const FieldTower& tower, TopIndex alpha, TopIndex beta,
                               const EnumerationCaps& caps = {});

/// #{(X_1..X_{n-1}) in (F_q^*)^{n-1} : X_1 + ... + X_{n-1} + u / (X_1 ... X_{n-1}) = 1}.
BigCount CountToricPoints(const SmallField& field, unsigned n, Elem u,
                          const EnumerationCaps& caps = {});

/// Number of irreducible T^n - a T^{n-1} + ... + (-1)^n b over F_q.
BigCount CountIrreducible(const SmallField& field, unsigned n, Elem a, Elem b,
                          const EnumerationCaps& caps = {});

/// Marginals of a census: by_norm[a] = sum_b N(a,b), by_trace[b] = sum_{a != 0} N(a,b).
struct CensusMarginals {
  std::vector<BigCount> by_norm;
  std::vector<BigCount> by_trace;
};
CensusMarginals Marginals(const std::vector<std::uint64_t>& census, std::uint64_t q);
/// (q^n - 1)/(q - 1), the size of every nonzero norm fiber.
BigCount NormFiberSize(std::uint64_t q, unsigned n);
/// q^{n-1} - [b = 0], the number of nonzero elements of trace b.
BigCount TraceFiberUnits(std::uint64_t q, unsigned n, bool b_is_zero);

}  // namespace normtrace::oracle
