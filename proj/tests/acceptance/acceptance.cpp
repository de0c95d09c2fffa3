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


// Acceptance suite. Prints one PASS/FAIL line per criterion, with indented
// detail lines below it. A FAIL is tolerated (exit 0) only when it is a known
// finding: the failing instances must equal the documented set exactly, so any
// drift in either direction still fails the run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "normtrace/bounds.hpp"
#include "normtrace/charsum.hpp"
#include "normtrace/cli.hpp"
#include "normtrace/closedforms.hpp"
#include "normtrace/error.hpp"
#include "normtrace/numtheory.hpp"
#include "normtrace/oracle.hpp"
#include "normtrace/pnab.hpp"
#include "normtrace/tower.hpp"

namespace {

using namespace normtrace;
using closedforms::Source;

struct Outcome {
  bool pass = true;
  bool known = false;  // the failure is a documented finding
  std::vector<std::string> details;

  void Check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("mismatch: " + what);
    }
  }
  void Note(const std::string& text) { details.push_back(text); }
};

struct FieldParams {
  std::uint32_t p;
  unsigned e;
};

const std::vector<FieldParams> kSmall{{2, 1}, {3, 1}, {2, 2}, {5, 1}};
const std::vector<FieldParams> kWide{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};

std::uint64_t FieldSize(const FieldParams& f) { return nt::CheckedPow(f.p, f.e).value(); }

BigInt Pow(std::uint64_t q, unsigned n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, n);
  return r;
}

// Largest n >= 1 with q^n <= limit.
unsigned MaxDegree(std::uint64_t q, std::uint64_t limit) {
  unsigned n = 1;
  while (nt::CheckedPow(q, n + 1).value_or(UINT64_MAX) <= limit) ++n;
  return n;
}

std::string Inst(std::uint64_t q, unsigned n, Elem a, Elem b) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "q=%llu n=%u a=%u b=%u", static_cast<unsigned long long>(q), n, a, b);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

oracle::EnumerationCaps Caps(std::uint64_t elements) {
  oracle::EnumerationCaps caps;
  caps.elements = elements;
  return caps;
}

// Shared by criteria 6 and 9: the default verify run.
struct VerifyRun {
  cli::VerifyResult result;
  double seconds = 0;
};
const VerifyRun& DefaultVerify() {
  static const VerifyRun run = [] {
    VerifyRun r;
    const auto start = std::chrono::steady_clock::now();
    r.result = cli::RunVerify({});
    r.seconds = Seconds(start);
    return r;
  }();
  return run;
}

Outcome LinkIdentity() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::size_t instances = 0, pair_checks = 0;
  for (const auto& f : kSmall) {
    const std::uint64_t q = FieldSize(f);
    for (unsigned n = 1; n <= MaxDegree(q, 300000); ++n) {
      auto t = FieldTower::Build(f.p, f.e, n);
      const auto census = oracle::NormTraceCensus(*t);
      for (Elem a = 1; a < q; ++a) {
        const auto alphas = t->NormPreimages(a, 2);
        for (Elem b = 1; b < q; ++b) {
          const auto betas = t->TracePreimages(b, 2);
          const std::size_t pairs = std::min(alphas.size(), betas.size());
          // Over F_q itself each fiber is a single element.
          out.Check(pairs >= (n == 1 ? 1u : 2u), "fewer than two preimage pairs at " + Inst(q, n, a, b));
          const BigInt expected = BigInt(q * (q - 1)) * FromUint64(census[a * q + b]) + 1;
          for (std::size_t i = 0; i < pairs; ++i) {
            const BigCount curve = oracle::CountCurvePointsTraceFiber(*t, alphas[i], betas[i]);
            out.Check(curve == expected, Inst(q, n, a, b) + " pair " + std::to_string(i));
            ++pair_checks;
          }
          ++instances;
        }
      }
    }
  }
  const double secs = Seconds(start);
  out.Check(secs <= 60, "runtime above 60 s");
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%zu instances, %zu (alpha,beta) pairs, %.1f s", instances, pair_checks, secs);
  out.Note(buf);
  out.Note("n = 1 instances have exactly one pair: both fibers are singletons");
  return out;
}

Outcome GaussCounting() {
  Outcome out;
  std::size_t instances = 0;
  double worst = 0;  // residual / q^{n/2}
  for (const auto& f : kWide) {
    const std::uint64_t q = FieldSize(f);
    for (unsigned n = 1; n <= MaxDegree(q, 1000000); ++n) {
      auto t = FieldTower::Build(f.p, f.e, n);
      const charsum::GaussTable table(t->mid_ptr());
      const auto caps = Caps(1000000);
      const double scale = std::pow(static_cast<double>(q), n / 2.0);
      for (Elem a = 1; a < q; ++a) {
        const auto alpha = t->NormPreimageIndex(a);
        for (Elem b = 0; b < q; ++b) {
          const BigCount curve = oracle::CountCurvePointsTraceFiber(*t, alpha, t->TracePreimageIndex(b), caps);
          try {
            const auto g = charsum::CountCurveGauss(table, n, a, b);
            out.Check(g.value == curve, Inst(q, n, a, b));
            out.Check(g.residual < 1e-6 * scale, "residual at " + Inst(q, n, a, b));
            worst = std::max(worst, g.residual / scale);
          } catch (const normtrace::Error& err) {
            out.Check(false, Inst(q, n, a, b) + ": " + err.what());
          }
          ++instances;
        }
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%zu instances over q in {2,3,4,5,7,8,9}; max residual/q^(n/2) = %.3g", instances,
                worst);
  out.Note(buf);
  return out;
}

Outcome SpecificValues() {
  Outcome out;
  auto both = [&](std::uint32_t p, unsigned e, unsigned n, Elem a, Elem b, long expected) {
    auto t = FieldTower::Build(p, e, n);
    const std::string inst = Inst(t->q(), n, a, b);
    out.Check(oracle::CountNormTrace(*t, a, b) == expected, "oracle " + inst);
    out.Check(closedforms::NnClosed(t->q(), n, a, b, Source::kErrataCorrected).value == expected, "closed " + inst);
  };
  both(3, 1, 3, 1, 1, 3);
  both(3, 1, 3, 1, 2, 6);
  both(3, 1, 2, 2, 1, 2);
  both(2, 2, 2, 1, 1, 0);
  for (unsigned n = 1; n <= 16; ++n) {
    const BigInt expected = Pow(2, n - 1);
    auto t = FieldTower::Build(2, 1, n);
    out.Check(oracle::CountNormTrace(*t, 1, 1) == expected, "oracle q=2 n=" + std::to_string(n));
    out.Check(closedforms::NnQ2(n) == expected, "closed q=2 n=" + std::to_string(n));
  }
  out.Note("oracle and corrected closed forms; N_n(1,1) = 2^(n-1) over F_2 for n <= 16");
  return out;
}

Outcome Census() {
  Outcome out;
  std::size_t grids = 0;
  for (const auto& f : kSmall) {
    const std::uint64_t q = FieldSize(f);
    for (unsigned n = 1; n <= MaxDegree(q, 300000); ++n) {
      auto t = FieldTower::Build(f.p, f.e, n);
      const auto census = oracle::NormTraceCensus(*t);
      const BigInt fiber = (Pow(q, n) - 1) / BigInt(q - 1);
      for (Elem a = 1; a < q; ++a) {
        BigInt sum = 0;
        for (Elem b = 0; b < q; ++b) sum += FromUint64(census[a * q + b]);
        out.Check(sum == fiber, "sum over b at " + Inst(q, n, a, 0));
      }
      for (Elem b = 0; b < q; ++b) {
        BigInt sum = 0;
        for (Elem a = 1; a < q; ++a) sum += FromUint64(census[a * q + b]);
        out.Check(sum == Pow(q, n - 1) - (b == 0 ? 1 : 0), "sum over a at " + Inst(q, n, 0, b));
      }
      ++grids;
    }
  }
  out.Note(std::to_string(grids) + " (q,n) grids, q in {2,3,4,5}, q^n <= 3e5");
  return out;
}

Outcome ToricPath() {
  Outcome out;
  auto f3 = FieldTower::Build(3, 1, 1);
  out.Check(oracle::CountToricPoints(f3->mid(), 3, 1) == 0, "#Y_1 over F_3, n=3");
  out.Check(oracle::CountToricPoints(f3->mid(), 3, 2) == 3, "#Y_2 over F_3, n=3");
  std::size_t tori = 0, nn = 0, bounds_checked = 0;
  std::vector<std::string> skipped;
  for (const auto& f : kWide) {
    const std::uint64_t q = FieldSize(f);
    for (unsigned n = 2; nt::CheckedPow(q - 1, n - 1).value_or(UINT64_MAX) <= 10000; ++n) {
      const auto Q = nt::CheckedPow(q, n);
      if (!Q || *Q > 5000000) {
        // The toric side is cheap here but the N oracle is not.
        skipped.push_back("q=" + std::to_string(q) + " n=" + std::to_string(n));
        if (q == 2) break;
        continue;
      }
      auto t = FieldTower::Build(f.p, f.e, n);
      const charsum::GaussTable table(t->mid_ptr());
      const auto census = oracle::NormTraceCensus(*t, Caps(5000000));
      std::vector<BigCount> y(q);
      const auto mw = bounds::ToricMw(q, n), improved = bounds::ToricImproved(q, n);
      for (Elem u = 1; u < q; ++u) {
        y[u] = oracle::CountToricPoints(t->mid(), n, u);
        out.Check(charsum::CountToricGauss(table, n, u).value == y[u], "toric gauss q=" + std::to_string(q) +
                                                                           " n=" + std::to_string(n) +
                                                                           " u=" + std::to_string(u));
        out.Check(bounds::Check(mw, y[u], "").holds, "toric_mw at q=" + std::to_string(q) + " n=" + std::to_string(n));
        out.Check(bounds::Check(improved, y[u], "").holds,
                  "toric_improved at q=" + std::to_string(q) + " n=" + std::to_string(n));
        bounds_checked += 2;
        ++tori;
      }
      for (Elem a = 1; a < q; ++a) {
        for (Elem b = 1; b < q; ++b) {
          const Elem u = charsum::ToricParameter(t->mid(), n, a, b);
          out.Check(charsum::NnViaToric(q, n, y[u]) == census[a * q + b], "nn_via_toric " + Inst(q, n, a, b));
          ++nn;
        }
      }
    }
  }
  out.Note(std::to_string(tori) + " toric counts, " + std::to_string(nn) + " N values, " +
           std::to_string(bounds_checked) + " bound checks; q in {2,3,4,5,7,8,9}, (q-1)^(n-1) <= 1e4");
  std::string s;
  for (const auto& x : skipped) s += (s.empty() ? "" : ", ") + x;
  if (!s.empty()) out.Note("outside the N oracle cap (q^n > 5e6), not evaluated: " + s);
  return out;
}

Outcome ClosedForms() {
  Outcome out;
  const std::map<std::uint64_t, unsigned> grid{{2, 16}, {3, 10}, {4, 8}, {5, 7}};
  std::set<std::string> ledger;
  std::map<std::string, std::string> ledger_values;
  for (const auto& r : DefaultVerify().result.records) {
    if (r.check == "closed_nn:paper" && r.finding && !r.agree) {
      ledger.insert(r.instance);
      for (const auto& [k, v] : r.values) ledger_values[r.instance] += k + "=" + v + ";";
    }
  }
  std::set<std::string> branches;
  std::size_t points = 0, disagreements = 0;
  for (const auto& f : kSmall) {
    const std::uint64_t q = FieldSize(f);
    for (unsigned n = 1; n <= grid.at(q); ++n) {
      auto t = FieldTower::Build(f.p, f.e, n);
      const auto census = oracle::NormTraceCensus(*t);
      for (Elem a = 1; a < q; ++a) {
        for (Elem b = 1; b < q; ++b) {
          const std::string inst = Inst(q, n, a, b);
          const auto errata = closedforms::NnClosed(q, n, a, b, Source::kErrataCorrected);
          out.Check(errata.value == census[a * q + b], "corrected " + inst);
          branches.insert(errata.branch);
          bool paper_agrees = false;
          try {
            paper_agrees = closedforms::NnClosed(q, n, a, b, Source::kPaperStated).value == census[a * q + b];
          } catch (const normtrace::Error&) {
          }
          if (!paper_agrees) {
            ++disagreements;
            const bool listed = ledger.count(inst) &&
                                ledger_values[inst].find("oracle=" + std::to_string(census[a * q + b]) + ";") !=
                                    std::string::npos;
            out.Check(listed, "printed-formula disagreement without ledger witness at " + inst);
          }
          ++points;
        }
      }
    }
  }
  out.Check(ledger.count("q=3 n=3 a=1 b=1") == 1, "ledger lacks the q=3 odd-degree witness");
  out.Check(ledger.count("q=3 n=2 a=2 b=1") == 1, "ledger lacks the q=3 even-degree witness");
  out.Note(std::to_string(points) + " grid points, " + std::to_string(branches.size()) +
           " corrected branches exercised; " + std::to_string(disagreements) +
           " printed-formula disagreements, all in the errata ledger");
  out.Note("q=3 witnesses: n=3 a=1 b=1 " + ledger_values["q=3 n=3 a=1 b=1"] + " n=2 a=2 b=1 " +
           ledger_values["q=3 n=2 a=2 b=1"]);
  return out;
}

Outcome Bounds() {
  Outcome out;
  bool values_ok = true;
  std::size_t checks = 0;
  for (const auto& f : kWide) {
    const std::uint64_t q = FieldSize(f);
    for (unsigned n = 2; n <= MaxDegree(q, 300000); ++n) {
      auto t = FieldTower::Build(f.p, f.e, n);
      const auto census = oracle::NormTraceCensus(*t);
      for (const auto& bound : {bounds::Katz(q, n), bounds::MoisioWan(q, n), bounds::AsBound1(q, n),
                                bounds::AsBound2(q, n)}) {
        for (Elem a = 1; a < q; ++a) {
          for (Elem b = 1; b < q; ++b) {
            const bool holds = bounds::Check(bound, FromUint64(census[a * q + b]), "").holds;
            values_ok &= holds;
            out.Check(holds, bound.name + " at " + Inst(q, n, a, b));
            ++checks;
          }
        }
      }
    }
  }
  out.Note(std::to_string(checks) + " checks of katz, moisio_wan, as_bound1, as_bound2 (q <= 9, q^n <= 3e5)");

  for (std::uint32_t p : {5u, 7u}) {
    const std::uint64_t q = p;
    auto t = FieldTower::Build(p, 1, 2);
    const auto census = oracle::NormTraceCensus(*t);
    closedforms::PairCensus observed;
    for (Elem a = 1; a < q; ++a) {
      for (Elem b = 1; b < q; ++b) {
        const auto v = census[a * q + b];
        (v == 0 ? observed.zero : v == 1 ? observed.one : observed.two) += 1;
      }
    }
    const closedforms::PairCensus expected{(q - 1) * (q - 3) / 2, q - 1, (q - 1) * (q - 1) / 2};
    values_ok &= observed == expected && closedforms::N2PairCensus(q) == expected;
    out.Check(observed == expected, "N_2 census from oracle at q=" + std::to_string(q));
    out.Check(closedforms::N2PairCensus(q) == expected, "N_2 census formula at q=" + std::to_string(q));
  }

  {
    auto t = FieldTower::Build(3, 1, 3);
    const auto census = oracle::NormTraceCensus(*t);
    std::uint64_t lo = UINT64_MAX, hi = 0;
    for (Elem a = 1; a < 3; ++a) {
      for (Elem b = 1; b < 3; ++b) {
        lo = std::min(lo, census[a * 3 + b]);
        hi = std::max(hi, census[a * 3 + b]);
      }
    }
    const auto range = bounds::N3Range(3);
    const bool ok = range.first == 3 && range.second == 6 && lo == 3 && hi == 6;
    values_ok &= ok;
    out.Check(ok, "N_3 range at q=3");
    out.Note("N_3 over F_3 spans [" + std::to_string(lo) + "," + std::to_string(hi) + "], printed range [" +
             ToString(range.first) + "," + ToString(range.second) + "]");
  }

  // Stated improvement conditions as exact radius inequalities.
  using Set = std::set<std::pair<std::uint64_t, unsigned>>;
  Set as1_fail, as2_fail;
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    for (unsigned n = 2; n <= 30; ++n) {
      const auto mw = bounds::MoisioWan(q, n);
      if (bounds::AsBound1Claimed(q, n) && !bounds::Tighter(bounds::AsBound1(q, n), mw)) as1_fail.insert({q, n});
      if (bounds::AsBound2Claimed(q, n) && !bounds::Tighter(bounds::AsBound2(q, n), mw)) as2_fail.insert({q, n});
    }
  }
  auto list = [](const Set& s) {
    std::string r;
    for (auto [q, n] : s) r += (r.empty() ? "" : " ") + std::string("(") + std::to_string(q) + "," + std::to_string(n) + ")";
    return r.empty() ? std::string("none") : r;
  };
  const Set kAs1Known{{2, 2}};
  const Set kAs2Known{{2, 2}, {3, 2}, {4, 2}, {5, 2}, {7, 2}, {8, 2}, {8, 3}, {9, 2}, {9, 3}, {11, 2}, {11, 3}, {13, 3}};
  const bool predicates_ok = as1_fail.empty() && as2_fail.empty();
  out.Check(predicates_ok, "improvement predicates on q <= 13, 2 <= n <= 30");
  out.Note("as_bound1 claimed tighter but not strictly tighter at: " + list(as1_fail));
  out.Note("as_bound2 claimed tighter but not strictly tighter at: " + list(as2_fail));
  out.known = !out.pass && values_ok && as1_fail == kAs1Known && as2_fail == kAs2Known;
  if (out.known) {
    out.Note("known finding: the stated conditions admit ties and losses at small n; the radius comparison needs "
             "roughly n-1 > ((q-2)sqrt(q)+1)/(q-1)");
  }
  return out;
}

Outcome Irreducibles() {
  Outcome out;
  const std::vector<std::pair<FieldParams, unsigned>> grid{{{2, 1}, 6}, {{3, 1}, 6}, {{5, 1}, 6}, {{2, 2}, 4}};
  std::size_t instances = 0;
  bool others_ok = true;
  for (const auto& [f, n_max] : grid) {
    const std::uint64_t q = FieldSize(f);
    const auto provider = pnab::OracleProvider(f.p, f.e);
    for (unsigned n = 2; n <= n_max; ++n) {
      const auto census = pnab::PnCensus(provider, n);
      auto t = FieldTower::Build(f.p, f.e, 1);
      for (Elem a = 1; a < q; ++a) {
        for (Elem b = 1; b < q; ++b) {
          const bool ok = census[a * q + b] == oracle::CountIrreducible(t->mid(), n, a, b);
          others_ok &= ok;
          out.Check(ok, "P_n " + Inst(q, n, a, b));
          ++instances;
        }
      }
      BigInt necklace = 0;
      for (auto d : nt::Divisors(n)) necklace += nt::Mobius(d) * Pow(q, n / d);
      necklace /= n;
      const bool ok = pnab::CensusTotal(census) == necklace && pnab::NecklaceCount(q, n) == necklace;
      others_ok &= ok;
      out.Check(ok, "necklace census q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
  }
  out.Note(std::to_string(instances) + " instances, q in {2,3,5} n <= 6 and q=4 n <= 4");

  const auto f2 = pnab::OracleProvider(2, 1);
  auto t2 = FieldTower::Build(2, 1, 1);
  const bool p3 = pnab::Pn(f2, 3, 1, 1) == 1;
  others_ok &= p3;
  out.Check(p3, "P_3(1,1) over F_2");
  std::vector<unsigned> exact_fail;
  for (unsigned n : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const BigCount pn = pnab::Pn(f2, n, 1, 1);
    const bool direct = pn == oracle::CountIrreducible(t2->mid(), n, 1, 1);
    // |P - 2^(n-1)/n| <= 1/n, i.e. |nP - 2^(n-1)| <= 1.
    const BigInt gap = BigInt(n) * pn - Pow(2, n - 1);
    const bool within = abs(gap) <= 1;
    others_ok &= direct && within;
    out.Check(direct && within, "prime degree n=" + std::to_string(n));
    if (BigInt(n) * pn != Pow(2, n - 1) - 1) exact_fail.push_back(n);
    out.Note("n=" + std::to_string(n) + ": P_n(1,1)=" + ToString(pn) + ", n*P - 2^(n-1) = " + ToString(gap));
  }
  out.Check(exact_fail.empty(), "P_n(1,1) = (2^(n-1)-1)/n for every prime n <= 13");
  out.known = !out.pass && others_ok && exact_fail == std::vector<unsigned>{2};
  if (out.known) {
    out.Note("known finding: at n=2, (2^(n-1)-1)/n = 1/2 is not a count; P_2(1,1)=1 (T^2+T+1). "
             "The 1/n bound holds at every prime n <= 13 and the exact value at every odd prime");
  }
  return out;
}

Outcome VerifySuite() {
  Outcome out;
  const auto& first = DefaultVerify();
  const std::string a = cli::RenderVerify(first.result, cli::Format::kTsv);
  const auto start = std::chrono::steady_clock::now();
  const std::string b = cli::RenderVerify(cli::RunVerify({}), cli::Format::kTsv);
  const double rerun = Seconds(start);
  out.Check(first.seconds < 300, "runtime at or above 300 s");
  out.Check(first.result.violations == 0, std::to_string(first.result.violations) + " invariant violations");
  out.Check(a == b, "rerun output differs");
  char buf[200];
  std::snprintf(buf, sizeof(buf), "%zu records, %zu findings, 0 violations required; %.1f s and %.1f s, %zu bytes",
                first.result.records.size(), first.result.findings, first.seconds, rerun, a.size());
  out.Note(buf);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, std::function<Outcome()>>> criteria{
      {1, "link identity: curve count = q(q-1)N + 1", LinkIdentity},
      {2, "Gauss-sum curve counts", GaussCounting},
      {3, "specific exact values", SpecificValues},
      {4, "census sums", Census},
      {5, "toric path", ToricPath},
      {6, "closed-form validation and errata ledger", ClosedForms},
      {7, "bounds and improvement predicates", Bounds},
      {8, "irreducible polynomials P_n", Irreducibles},
      {9, "default verify suite: runtime and determinism", VerifySuite},
  };
  bool ok = true;
  for (const auto& [id, title, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& err) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + err.what());
    }
    std::printf("CRITERION %d %s %s%s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
                !o.pass && o.known ? " (known finding)" : "");
    std::size_t shown = 0;
    for (const auto& d : o.details) {
      if (++shown > 12) {
        std::printf("    ... %zu more\n", o.details.size() - 12);
        break;
      }
      std::printf("    %s\n", d.c_str());
    }
    std::fflush(stdout);
    ok &= o.pass || o.known;
  }
  return ok ? 0 : 1;
}
