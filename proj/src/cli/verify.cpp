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


#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "common.hpp"
#include "normtrace/bounds.hpp"
#include "normtrace/charsum.hpp"
#include "normtrace/numtheory.hpp"
#include "normtrace/pnab.hpp"
#include "normtrace/tower.hpp"

namespace normtrace::cli {

namespace {

using closedforms::Source;
using Values = std::vector<std::pair<std::string, std::string>>;

// Per-check scale limits. Every limit is on the size of the enumeration the
// check needs, so a smaller n-max only ever drops checks.
constexpr std::uint64_t kLinkLimit = 300000;     // q^n
constexpr std::uint64_t kGaussLimit = 1000000;   // q^n
constexpr std::uint64_t kLiftLimit = 100000;     // q^n
constexpr std::uint64_t kToricLimit = 10000;     // (q-1)^{n-1}
constexpr std::uint64_t kPnLimit = 100000;       // (q-1)^2 q^{n-2}

oracle::EnumerationCaps VerifyCaps() {
  oracle::EnumerationCaps caps;
  caps.elements = 5000000;
  return caps;
}

bool Within(std::optional<std::uint64_t> size, std::uint64_t limit) { return size && *size <= limit; }

// Runs fn and renders its value; a library error becomes "error:<code>".
template <typename Fn>
std::string Eval(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& err) {
    return "error:" + std::string(ErrorCodeName(err.code()));
  }
}

bool IsError(const std::string& v) { return v.rfind("error:", 0) == 0; }

class Recorder {
 public:
  explicit Recorder(std::uint64_t q) : q_(q) {}

  // All values are the same quantity computed different ways.
  void Same(const std::string& check, const std::string& instance, Values values, bool finding = false,
            std::string ref = "") {
    bool agree = true;
    for (const auto& [method, value] : values) {
      if (IsError(value) || value != values.front().second) agree = false;
    }
    Add(check, instance, std::move(values), agree, finding, std::move(ref));
  }

  void Add(const std::string& check, const std::string& instance, Values values, bool agree, bool finding,
           std::string ref = "") {
    records_.push_back({check, "q=" + std::to_string(q_) + " " + instance, std::move(values), agree, finding,
                        std::move(ref)});
  }

  std::vector<VerificationRecord> take() { return std::move(records_); }

 private:
  std::uint64_t q_;
  std::vector<VerificationRecord> records_;
};

std::string Inst(unsigned n, Elem a, Elem b) {
  return "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
}

// Bounds that are established results; a failure is a defect here, not a
// finding about the printed claims.
bool IsEstablishedBound(const std::string& name) {
  static const std::vector<std::string> kEstablished{"katz",       "moisio_b0", "moisio_wan", "hasse_weil",
                                                     "improved_hw_corrected",   "wan_pn",     "moisio_pn",
                                                     "toric_mw"};
  return std::find(kEstablished.begin(), kEstablished.end(), name) != kEstablished.end();
}

// Collects bound checks of one degree and emits one record per bound.
class BoundTally {
 public:
  void Check(const bounds::Bound& bound, const BigCount& observed, const std::string& instance) {
    auto& entry = entries_[bound.name];
    entry.checked += 1;
    if (!bounds::Check(bound, observed, instance).holds) {
      entry.failures += (entry.failures.empty() ? "" : ",") + std::string("(") + instance + " obs=" +
                        ToString(observed) + ")";
    }
  }

  void Emit(Recorder& rec, unsigned n) const {
    for (const auto& [name, entry] : entries_) {
      const bool holds = entry.failures.empty();
      rec.Add("bound:" + name, "n=" + std::to_string(n),
              {{"instances", std::to_string(entry.checked)}, {"failures", holds ? "-" : entry.failures}}, holds,
              !IsEstablishedBound(name), holds ? "" : name);
    }
  }

 private:
  struct Entry {
    std::size_t checked = 0;
    std::string failures;
  };
  std::map<std::string, Entry> entries_;
};

void VerifyDegree(const FieldArgs& f, unsigned n, Recorder& rec, const pnab::NnProvider& oracle_provider,
                  const pnab::NnProvider& gauss_provider) {
  const auto caps = VerifyCaps();
  auto tower = FieldTower::Build(f.p, f.e, n, f.seed);
  const std::uint64_t q = tower->q();
  const auto Q = nt::CheckedPow(q, n);
  const bool closed = closedforms::HasClosedForm(q);
  const charsum::GaussTable table(tower->mid_ptr());

  // Census and its marginals.
  const auto census = oracle::NormTraceCensus(*tower, caps);
  const auto marginals = oracle::Marginals(census, q);
  for (Elem a = 1; a < q; ++a) {
    rec.Same("census_norm_fiber", "n=" + std::to_string(n) + " a=" + std::to_string(a),
             {{"sum_b", ToString(marginals.by_norm[a])}, {"expected", ToString(oracle::NormFiberSize(q, n))}});
  }
  for (Elem b = 0; b < q; ++b) {
    rec.Same("census_trace_fiber", "n=" + std::to_string(n) + " b=" + std::to_string(b),
             {{"sum_a", ToString(marginals.by_trace[b])},
              {"expected", ToString(oracle::TraceFiberUnits(q, n, b == 0))}});
  }

  for (Elem a = 1; a < q; ++a) {
    const auto alphas = tower->NormPreimages(a, 2);
    for (Elem b = 0; b < q; ++b) {
      const std::string inst = Inst(n, a, b);
      const std::string oracle_n = std::to_string(census[a * q + b]);
      const auto betas = tower->TracePreimages(b, 2);
      const BigCount curve = oracle::CountCurvePointsTraceFiber(*tower, alphas[0], betas[0], caps);
      auto via_curve = [&](const BigCount& x) {
        return ToString(b == 0 ? charsum::NnViaCurveZeroTrace(q, x) : charsum::NnViaCurve(q, x));
      };

      if (b != 0 && Within(Q, kLinkLimit)) {
        Values values{{"oracle", oracle_n}};
        const std::size_t pairs = std::min(alphas.size(), betas.size());
        for (std::size_t i = 0; i < pairs; ++i) {
          const BigCount x = i == 0 ? curve : oracle::CountCurvePointsTraceFiber(*tower, alphas[i], betas[i], caps);
          values.push_back({"curve_pair" + std::to_string(i + 1), Eval([&] { return via_curve(x); })});
        }
        rec.Same("link", inst, std::move(values));
      }

      if (Within(Q, kGaussLimit)) {
        rec.Same("gauss_curve", inst,
                 {{"oracle", ToString(curve)},
                  {"gauss", Eval([&] { return ToString(charsum::CountCurveGauss(table, n, a, b).value); })}});
      }

      if (closed) {
        rec.Same("closed_curve:errata", inst,
                 {{"oracle", ToString(curve)},
                  {"errata", Eval([&] { return ToString(closedforms::CurveClosed(q, n, a, b, Source::kErrataCorrected).value); })}});
        std::string branch;
        const std::string paper = Eval([&] {
          const auto r = closedforms::CurveClosed(q, n, a, b, Source::kPaperStated);
          branch = r.branch;
          return ToString(r.value);
        });
        rec.Same("closed_curve:paper", inst, {{"oracle", ToString(curve)}, {"paper", paper}}, true, branch);
        if (b != 0) {
          rec.Same("closed_nn:errata", inst,
                   {{"oracle", oracle_n},
                    {"errata", Eval([&] { return ToString(closedforms::NnClosed(q, n, a, b, Source::kErrataCorrected).value); })}});
          std::string nn_branch;
          const std::string nn_paper = Eval([&] {
            const auto r = closedforms::NnClosed(q, n, a, b, Source::kPaperStated);
            nn_branch = r.branch;
            return ToString(r.value);
          });
          rec.Same("closed_nn:paper", inst, {{"oracle", oracle_n}, {"paper", nn_paper}}, true, nn_branch);
        }
      }

      if (n == 2 && b != 0 && q % 2 == 1) {
        rec.Same("n2_closed", inst,
                 {{"oracle", oracle_n},
                  {"discriminant", Eval([&] { return std::to_string(closedforms::N2Closed(tower->mid(), a, b)); })}});
      }
    }
  }

  // Toric route.
  const auto tuples = n >= 2 ? nt::CheckedPow(q - 1, n - 1) : std::nullopt;
  if (Within(tuples, kToricLimit)) {
    std::vector<BigCount> toric(q);
    for (Elem u = 1; u < q; ++u) {
      toric[u] = oracle::CountToricPoints(tower->mid(), n, u, caps);
      rec.Same("toric_gauss", "n=" + std::to_string(n) + " u=" + std::to_string(u),
               {{"enumeration", ToString(toric[u])},
                {"gauss", Eval([&] { return ToString(charsum::CountToricGauss(table, n, u).value); })}});
    }
    for (Elem a = 1; a < q; ++a) {
      for (Elem b = 1; b < q; ++b) {
        const Elem u = charsum::ToricParameter(tower->mid(), n, a, b);
        rec.Same("toric_nn", Inst(n, a, b) + " u=" + std::to_string(u),
                 {{"oracle", std::to_string(census[a * q + b])},
                  {"via_toric", Eval([&] { return ToString(charsum::NnViaToric(q, n, toric[u])); })}});
      }
    }
  }

  // Davenport-Hasse lifts against direct sums over F_{q^n}.
  if (n >= 2 && Within(Q, kLiftLimit)) {
    for (std::uint64_t j = 1; j + 1 < q; ++j) {
      const auto lift = charsum::CheckDavenportHasse(*tower, table, j);
      rec.Add("davenport_hasse", "n=" + std::to_string(n) + " j=" + std::to_string(j),
              {{"direct_re", std::to_string(lift.direct.real())},
               {"direct_im", std::to_string(lift.direct.imag())},
               {"lifted_re", std::to_string(lift.lifted.real())},
               {"lifted_im", std::to_string(lift.lifted.imag())}},
              lift.agrees, false);
    }
  }

  // Irreducible polynomials with prescribed trace and norm.
  std::optional<std::uint64_t> pn_tests;
  if (n >= 2) {
    const auto per_pair = nt::CheckedPow(q, n - 2);
    if (per_pair) pn_tests = (q - 1) * (q - 1) * *per_pair;
  }
  if (Within(pn_tests, kPnLimit)) {
    const auto oracle_census = pnab::PnCensus(oracle_provider, n);
    const auto gauss_census = pnab::PnCensus(gauss_provider, n);
    for (Elem a = 1; a < q; ++a) {
      for (Elem b = 1; b < q; ++b) {
        const std::string inst = Inst(n, a, b);
        const std::string direct = ToString(oracle::CountIrreducible(tower->mid(), n, a, b, caps));
        Values values{{"direct", direct},
                      {"inversion_oracle", ToString(oracle_census[a * q + b])},
                      {"inversion_gauss", ToString(gauss_census[a * q + b])}};
        if (closed) {
          values.push_back({"closed_errata", Eval([&] { return ToString(pnab::PnClosed(q, n, a, b, Source::kErrataCorrected)); })});
        }
        rec.Same("pn", inst, std::move(values));
        rec.Same("pn_literal_inversion", inst,
                 {{"direct", direct}, {"literal", Eval([&] { return ToString(pnab::PnLiteralInversion(oracle_provider, n, a, b)); })}},
                 true, "literal_inversion");
        if (closed) {
          rec.Same("pn_closed:paper", inst,
                   {{"direct", direct}, {"paper", Eval([&] { return ToString(pnab::PnClosed(q, n, a, b, Source::kPaperStated)); })}},
                   true, "pn_printed_q" + std::to_string(q));
        }
      }
    }
    rec.Same("necklace_census", "n=" + std::to_string(n),
             {{"sum_pn", ToString(pnab::CensusTotal(oracle_census))},
              {"necklace", ToString(pnab::NecklaceCount(q, n))}});
  }

  // Bounds on every exact value of this degree.
  if (n >= 2) {
    BoundTally tally;
    const auto katz = bounds::Katz(q, n), mw = bounds::MoisioWan(q, n), b0 = bounds::MoisioB0(q, n);
    const auto as1 = bounds::AsBound1(q, n), as2 = bounds::AsBound2(q, n), hw = bounds::HasseWeil(q, n);
    const auto hw_b = bounds::ImprovedHw(q, n, false), hw_0 = bounds::ImprovedHw(q, n, true);
    const auto hw_0c = bounds::ImprovedHw(q, n, true, bounds::HwCenter::kCorrected);
    const auto cvt = bounds::CurveViaToric(q, n);
    const bool cvt_applies = bounds::CurveViaToricCondition(q, n);
    for (Elem a = 1; a < q; ++a) {
      const auto alpha = tower->NormPreimageIndex(a);
      for (Elem b = 0; b < q; ++b) {
        const std::string inst = Inst(n, a, b);
        const BigCount nn = FromUint64(census[a * q + b]);
        const BigCount curve =
            oracle::CountCurvePointsTraceFiber(*tower, alpha, tower->TracePreimageIndex(b), caps);
        tally.Check(hw, curve, inst);
        if (b == 0) {
          tally.Check(b0, nn, inst);
          tally.Check(hw_0, curve, inst);
          tally.Check(hw_0c, curve, inst);
          continue;
        }
        for (const auto* bound : {&katz, &mw, &as1, &as2}) tally.Check(*bound, nn, inst);
        if (n == 3) tally.Check(bounds::N3RangeBound(q), nn, inst);
        tally.Check(hw_b, curve, inst);
        if (cvt_applies) tally.Check(cvt, curve, inst);
      }
    }
    if (Within(pn_tests, kPnLimit)) {
      const auto pn = pnab::PnCensus(oracle_provider, n);
      const auto wan = bounds::WanPn(q, n), mpn = bounds::MoisioPn(q, n), npn = bounds::NewPn(q, n);
      for (Elem a = 1; a < q; ++a) {
        for (Elem b = 1; b < q; ++b) {
          for (const auto* bound : {&wan, &mpn, &npn}) tally.Check(*bound, pn[a * q + b], Inst(n, a, b));
        }
      }
    }
    if (Within(tuples, kToricLimit)) {
      const auto tmw = bounds::ToricMw(q, n), timp = bounds::ToricImproved(q, n);
      for (Elem u = 1; u < q; ++u) {
        const BigCount y = oracle::CountToricPoints(tower->mid(), n, u, caps);
        const std::string inst = "n=" + std::to_string(n) + " u=" + std::to_string(u);
        tally.Check(tmw, y, inst);
        tally.Check(timp, y, inst);
      }
    }
    tally.Emit(rec, n);

    // Stated improvement conditions against exact radius comparisons.
    const std::string inst = "n=" + std::to_string(n);
    const bool as1_claim = bounds::AsBound1Claimed(q, n), as1_real = bounds::Tighter(as1, mw);
    rec.Add("predicate:as_bound1", inst,
            {{"claimed_tighter", as1_claim ? "true" : "false"}, {"tighter", as1_real ? "true" : "false"}},
            !as1_claim || as1_real, true, "as_bound1_condition");
    const bool as2_claim = bounds::AsBound2Claimed(q, n), as2_real = bounds::Tighter(as2, mw);
    rec.Add("predicate:as_bound2", inst,
            {{"claimed_tighter", as2_claim ? "true" : "false"}, {"tighter", as2_real ? "true" : "false"}},
            !as2_claim || as2_real, true, "as_bound2_condition");
  }
}

void VerifyField(const FieldArgs& f, unsigned n_max, Recorder& rec) {
  auto base = FieldTower::Build(f.p, f.e, 1, f.seed);
  const std::uint64_t q = base->q();
  if (q % 2 == 1) {
    const auto formula = closedforms::N2PairCensus(q), counted = closedforms::N2PairCensusExhaustive(base->mid());
    auto fmt = [](const closedforms::PairCensus& c) {
      return std::to_string(c.zero) + "/" + std::to_string(c.one) + "/" + std::to_string(c.two);
    };
    rec.Same("n2_pair_census", "", {{"formula", fmt(formula)}, {"classified", fmt(counted)}});
  }
  const auto oracle_provider = pnab::OracleProvider(f.p, f.e, f.seed, VerifyCaps());
  const auto gauss_provider = pnab::GaussProvider(f.p, f.e, f.seed);
  for (unsigned n = 1; n <= n_max; ++n) VerifyDegree(f, n, rec, oracle_provider, gauss_provider);
}

}  // namespace

unsigned DefaultVerifyNMax(std::uint64_t q) {
  switch (q) {
    case 2:
      return 16;
    case 3:
      return 10;
    case 4:
      return 8;
    case 5:
      return 7;
    default: {
      unsigned n = 1;
      while (nt::CheckedPow(q, n + 1).value_or(UINT64_MAX) <= 100000) ++n;
      return n;
    }
  }
}

// Rough single-thread cost of one degree of the verify run, dominated by
// enumerations of F_{q^n}; used only to shrink n-max under --budget.
double EstimatedSeconds(std::uint64_t q, unsigned n) {
  const double size = std::pow(static_cast<double>(q), n);
  return 2e-7 * size * static_cast<double>(q * q + n);
}

VerifyResult RunVerify(const VerifyOptions& options) {
  std::vector<FieldArgs> fields = options.fields;
  if (fields.empty()) fields = {{2, 1, 0}, {3, 1, 0}, {2, 2, 0}, {5, 1, 0}};
  VerifyResult result;
  for (const auto& f : fields) {
    auto base = FieldTower::Build(f.p, f.e, 1, f.seed, 0);
    FieldRun run{f, base->q(), options.n_max.value_or(DefaultVerifyNMax(base->q()))};
    if (options.budget_seconds > 0) {
      const double share = options.budget_seconds / static_cast<double>(fields.size());
      auto total = [&](unsigned m) {
        double s = 0;
        for (unsigned n = 1; n <= m; ++n) s += EstimatedSeconds(run.q, n);
        return s;
      };
      while (run.n_max > 1 && total(run.n_max) > share) --run.n_max;
    }
    Recorder rec(run.q);
    VerifyField(f, run.n_max, rec);
    for (auto& r : rec.take()) result.records.push_back(std::move(r));
    result.runs.push_back(run);
  }
  for (const auto& r : result.records) {
    if (r.agree) continue;
    if (r.finding) {
      ++result.findings;
    } else {
      ++result.violations;
    }
  }
  return result;
}

std::string RenderVerify(const VerifyResult& result, Format format) {
  detail::Writer w(format, "verify");
  auto join = [](const Values& values) {
    std::string s;
    for (const auto& [method, value] : values) s += (s.empty() ? "" : ";") + method + "=" + value;
    return s;
  };
  for (const auto& run : result.runs) {
    std::vector<unsigned> degrees;
    for (unsigned n = 1; n <= run.n_max; ++n) degrees.push_back(n);
    w.FieldHeader(run.field, degrees);
  }
  w.Columns({"check", "instance", "values", "agree", "kind", "errata_ref"});
  for (const auto& r : result.records) {
    w.Row({r.check, r.instance, join(r.values), r.agree ? "true" : "false", r.finding ? "finding" : "invariant",
           r.errata_ref.empty() ? "-" : r.errata_ref});
  }
  w.Note("errata ledger: printed formulas, bounds and conditions contradicted by exact values");
  w.Columns({"ledger_ref", "check", "witness", "values"});
  for (const auto& r : result.records) {
    if (r.finding && !r.agree) w.Row({r.errata_ref, r.check, r.instance, join(r.values)});
  }
  w.Summary({{"records", std::to_string(result.records.size())},
             {"violations", std::to_string(result.violations)},
             {"findings", std::to_string(result.findings)}});
  return w.str();
}

CommandOutput Verify(const VerifyOptions& options, Format format) {
  CommandOutput output;
  try {
    const VerifyResult result = RunVerify(options);
    output.out = RenderVerify(result, format);
    output.exit_code = result.violations == 0 ? 0 : 1;
  } catch (const Error& err) {
    output.err = std::string("normtrace verify: ") + err.what() + "\n";
    output.exit_code = detail::ExitCodeFor(err.code());
  }
  return output;
}

}  // namespace normtrace::cli
