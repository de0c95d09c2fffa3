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


#include "normtrace/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "normtrace/error.hpp"
#include "normtrace/numtheory.hpp"
#include "normtrace/polynomial.hpp"

namespace normtrace::oracle {

namespace {

void RequireCap(std::uint64_t size, std::uint64_t cap, const char* what) {
  Require(size <= cap, ErrorCode::kScaleExceeded,
          std::string(what) + " needs " + std::to_string(size) + " steps, cap is " +
              std::to_string(cap));
}

// Splits [0, count) into contiguous chunks, one per worker, each filling its
// own histogram; the partial histograms are summed in chunk order.
template <typename Body>
std::vector<std::uint64_t> ChunkedHistogram(std::uint64_t count, std::size_t bins, Body body) {
  const unsigned workers =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(WorkerThreads(), count / 4096 + 1)));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(bins, 0));
  auto run = [&](unsigned w) {
    const std::uint64_t lo = count * w / workers;
    const std::uint64_t hi = count * (w + 1) / workers;
    body(lo, hi, partial[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  std::vector<std::uint64_t> total(bins, 0);
  for (const auto& h : partial) {
    for (std::size_t i = 0; i < bins; ++i) total[i] += h[i];
  }
  return total;
}

}  // namespace

unsigned WorkerThreads() {
  const char* env = std::getenv("NORMTRACE_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || value < 1) return 1;
  return static_cast<unsigned>(std::min<long>(value, 256));
}

std::vector<std::uint64_t> NormTraceCensus(const FieldTower& tower, const EnumerationCaps& caps) {
  const TopField& F = tower.top();
  const SmallField& K = tower.mid();
  const std::uint64_t Q = F.order();
  const std::uint64_t q = K.order();
  RequireCap(Q, caps.elements, "norm/trace census");
  // Norm(g^k) = Norm(g)^k: track the exponent of g_q instead of
  // exponentiating each element.
  const std::uint64_t norm_step = K.log(F.generator_norm());
  auto counts = ChunkedHistogram(Q - 1, q * q, [&](std::uint64_t lo, std::uint64_t hi,
                                                   std::vector<std::uint64_t>& hist) {
    std::uint64_t norm_log = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(lo) * norm_step) % (q - 1));
    TopIndex z = F.exp(lo);
    const TopIndex g = F.generator();
    for (std::uint64_t k = lo; k < hi; ++k) {
      if (F.has_tables()) z = F.exp(k);
      ++hist[static_cast<std::size_t>(K.exp(norm_log)) * q + F.trace(z)];
      norm_log += norm_step;
      if (norm_log >= q - 1) norm_log -= q - 1;
      if (!F.has_tables()) z = F.mul(z, g);
    }
  });
  ++counts[0];  // z = 0
  return counts;
}

BigCount CountNormTrace(const FieldTower& tower, Elem a, Elem b, const EnumerationCaps& caps) {
  const std::uint64_t q = tower.q();
  Require(a < q && b < q, ErrorCode::kInvalidArgument, "a, b must be mid-level indices");
  return FromUint64(NormTraceCensus(tower, caps)[a * q + b]);
}

std::vector<std::uint64_t> CurveTraceHistogram(const FieldTower& tower, TopIndex alpha,
                                               const EnumerationCaps& caps) {
  const TopField& F = tower.top();
  const std::uint64_t Q = F.order();
  const std::uint64_t q = tower.q();
  Require(alpha != 0 && alpha < Q, ErrorCode::kZeroArgument, "alpha must be a nonzero element");
  RequireCap(Q, caps.elements, "curve trace-fiber count");
  const std::uint64_t group = Q - 1;
  const std::uint64_t log_alpha = F.log(alpha);
  auto hist = ChunkedHistogram(group, q, [&](std::uint64_t lo, std::uint64_t hi,
                                             std::vector<std::uint64_t>& h) {
    // alpha * (g^k)^(q-1) = g^(log alpha + k (q-1))
    std::uint64_t e = static_cast<std::uint64_t>(
        (log_alpha + static_cast<unsigned __int128>(lo) * (q - 1)) % group);
    for (std::uint64_t k = lo; k < hi; ++k) {
      ++h[F.trace(F.exp(e))];
      e += q - 1;
      if (e >= group) e -= group;
    }
  });
  ++hist[0];  // x = 0
  return hist;
}

BigCount CountCurvePointsTraceFiber(const FieldTower& tower, TopIndex alpha, TopIndex beta,
                                    const EnumerationCaps& caps) {
  Require(beta < tower.order(), ErrorCode::kInvalidArgument, "beta out of range");
  const auto hist = CurveTraceHistogram(tower, alpha, caps);
  // Tr(alpha x^{q-1} - beta) = 0  <=>  Tr(alpha x^{q-1}) = Tr(beta)
  return BigCount(tower.q()) * FromUint64(hist[tower.top().trace(beta)]) + 1;
}

BigCount CountCurvePointsNaive(const FieldTower& tower, TopIndex alpha, TopIndex beta,
                               const EnumerationCaps& caps) {
  const TopField& F = tower.top();
  const std::uint64_t Q = F.order();
  Require(alpha != 0 && alpha < Q, ErrorCode::kZeroArgument, "alpha must be a nonzero element");
  Require(beta < Q, ErrorCode::kInvalidArgument, "beta out of range");
  Require(Q <= (std::uint64_t{1} << 32), ErrorCode::kScaleExceeded, "naive count too large");
  RequireCap(Q * Q, caps.elements, "naive curve count");
  const std::uint64_t q = tower.q();
  std::vector<TopIndex> lhs(Q), rhs(Q);
  for (TopIndex y = 0; y < Q; ++y) lhs[y] = F.sub(F.pow(y, q), y);
  for (TopIndex x = 0; x < Q; ++x) rhs[x] = F.sub(F.mul(alpha, F.pow(x, q - 1)), beta);
  std::uint64_t affine = 0;
  for (TopIndex x = 0; x < Q; ++x) {
    for (TopIndex y = 0; y < Q; ++y) affine += lhs[y] == rhs[x];
  }
  return FromUint64(affine) + 1;
}

BigCount CountToricPoints(const SmallField& K, unsigned n, Elem u, const EnumerationCaps& caps) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  Require(u != 0 && u < K.order(), ErrorCode::kZeroArgument, "u must be a nonzero element");
  const std::uint64_t group = K.order() - 1;
  const unsigned m = n - 1;
  const auto tuples = nt::CheckedPow(group, m);
  Require(tuples.has_value(), ErrorCode::kScaleExceeded, "toric domain overflows");
  RequireCap(*tuples, caps.toric_tuples, "toric count");
  // Odometer over the discrete logs of (X_1, ..., X_m).
  std::vector<std::uint64_t> k(m, 0);
  std::uint64_t count = 0;
  for (std::uint64_t step = 0; step < *tuples; ++step) {
    Elem sum = 0;
    std::uint64_t total_log = 0;
    for (unsigned i = 0; i < m; ++i) {
      sum = K.add(sum, K.exp(k[i]));
      total_log += k[i];
    }
    const Elem tail = K.mul(u, K.exp(group - total_log % group));
    count += K.add(sum, tail) == 1;
    for (unsigned i = 0; i < m; ++i) {
      if (++k[i] < group) break;
      k[i] = 0;
    }
  }
  return FromUint64(count);
}

BigCount CountIrreducible(const SmallField& K, unsigned n, Elem a, Elem b,
                          const EnumerationCaps& caps) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  Require(a < K.order() && b < K.order(), ErrorCode::kInvalidArgument, "a, b out of range");
  if (n == 1) return BigCount(a == b ? 1 : 0);  // T - a with constant -b
  const unsigned free = n - 2;
  const auto tests = nt::CheckedPow(K.order(), free);
  Require(tests.has_value(), ErrorCode::kScaleExceeded, "polynomial domain overflows");
  RequireCap(*tests, caps.poly_tests, "irreducible count");
  poly::Poly f(n + 1, 0);
  f[n] = 1;
  f[n - 1] = K.neg(a);
  f[0] = n % 2 == 0 ? b : K.neg(b);
  std::uint64_t count = 0;
  for (std::uint64_t step = 0; step < *tests; ++step) {
    count += poly::IsIrreducible(K, f);
    for (unsigned i = 1; i <= free; ++i) {
      if (++f[i] < K.order()) break;
      f[i] = 0;
    }
  }
  return FromUint64(count);
}

CensusMarginals Marginals(const std::vector<std::uint64_t>& census, std::uint64_t q) {
  Require(census.size() == q * q, ErrorCode::kInvalidArgument, "census size must be q^2");
  CensusMarginals out{std::vector<BigCount>(q, 0), std::vector<BigCount>(q, 0)};
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      const BigCount v = FromUint64(census[a * q + b]);
      out.by_norm[a] += v;
      if (a != 0) out.by_trace[b] += v;
    }
  }
  return out;
}

BigCount NormFiberSize(std::uint64_t q, unsigned n) {
  BigInt qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
  return BigInt((qn - 1) / (q - 1));
}

BigCount TraceFiberUnits(std::uint64_t q, unsigned n, bool b_is_zero) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  BigInt qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), q, n - 1);
  return b_is_zero ? BigInt(qn - 1) : qn;
}

}  // namespace normtrace::oracle
