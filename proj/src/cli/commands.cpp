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


#include <cstdio>
#include <memory>
#include <numeric>

#include "common.hpp"
#include "normtrace/bounds.hpp"
#include "normtrace/charsum.hpp"
#include "normtrace/numtheory.hpp"
#include "normtrace/pnab.hpp"
#include "normtrace/tower.hpp"

namespace normtrace::cli {

namespace {

using closedforms::Source;
using detail::Writer;

const std::vector<std::string> kMethods{"brute", "curve", "gauss", "toric", "closed"};

void CheckMethod(const std::string& method, const std::vector<std::string>& allowed) {
  for (const auto& m : allowed) {
    if (m == method) return;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown method '" + method + "'");
}

void CheckElement(std::uint64_t q, Elem x, const char* name) {
  Require(x < q, ErrorCode::kInvalidArgument, std::string(name) + " must be an element index below q");
}

std::vector<unsigned> Range(unsigned from, unsigned to) {
  std::vector<unsigned> out;
  for (unsigned n = from; n <= to; ++n) out.push_back(n);
  return out;
}

std::string SourceLabel(const std::string& method, Source source) {
  return method == "closed" ? std::string(closedforms::SourceName(source)) : "-";
}

struct NnValues {
  std::string n_value;
  std::string curve = "-";
  std::string toric = "-";
};

// One N_n(a,b) evaluation by the requested method.
NnValues EvaluateNn(const FieldTower& tower, const std::string& method, Source source, Elem a, Elem b) {
  const std::uint64_t q = tower.q();
  const unsigned n = tower.n();
  NnValues out;
  if (method == "brute") {
    out.n_value = ToString(oracle::CountNormTrace(tower, a, b));
    return out;
  }
  Require(a != 0, ErrorCode::kZeroArgument, "method " + method + " needs a != 0");
  auto nn_from_curve = [&](const BigCount& curve) {
    out.curve = ToString(curve);
    out.n_value = ToString(b == 0 ? charsum::NnViaCurveZeroTrace(q, curve) : charsum::NnViaCurve(q, curve));
  };
  if (method == "curve") {
    nn_from_curve(oracle::CountCurvePointsTraceFiber(tower, tower.NormPreimageIndex(a), tower.TracePreimageIndex(b)));
  } else if (method == "gauss") {
    const charsum::GaussTable table(tower.mid_ptr());
    nn_from_curve(charsum::CountCurveGauss(table, n, a, b).value);
  } else if (method == "toric") {
    Require(b != 0, ErrorCode::kZeroArgument, "method toric needs b != 0");
    const Elem u = charsum::ToricParameter(tower.mid(), n, a, b);
    const BigCount y = oracle::CountToricPoints(tower.mid(), n, u);
    out.toric = ToString(y);
    out.n_value = ToString(charsum::NnViaToric(q, n, y));
  } else {
    Require(closedforms::HasClosedForm(q), ErrorCode::kUnsupported, "closed forms exist only for q <= 5");
    const BigCount curve = closedforms::CurveClosed(q, n, a, b, source).value;
    out.curve = ToString(curve);
    out.n_value = b == 0 ? ToString(charsum::NnViaCurveZeroTrace(q, curve))
                         : ToString(closedforms::NnClosed(q, n, a, b, source).value);
  }
  return out;
}

// Printed formulas may be non-integral or lack a branch; such cells are
// reported in place instead of aborting the table.
template <typename Fn>
std::string Cell(Source source, Fn&& fn) {
  if (source != Source::kPaperStated) return fn();
  try {
    return fn();
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kDivisibilityViolation || err.code() == ErrorCode::kUnsupported ||
        err.code() == ErrorCode::kNonIntegerResult) {
      return "NA:" + std::string(ErrorCodeName(err.code()));
    }
    throw;
  }
}

std::string Decimal(long double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12Lg", x);
  return buffer;
}

}  // namespace

CommandOutput Compute(const ComputeRequest& request, Format format) {
  return detail::Guard(format, "compute", [&](Writer& w) {
    CheckMethod(request.method, kMethods);
    auto tower = FieldTower::Build(request.field.p, request.field.e, request.n, request.field.seed);
    CheckElement(tower->q(), request.a, "a");
    CheckElement(tower->q(), request.b, "b");
    const NnValues values = EvaluateNn(*tower, request.method, request.source, request.a, request.b);
    w.FieldHeader(request.field, {request.n});
    w.Columns({"n", "a", "b", "method", "source", "N", "curve_points", "toric_points"});
    w.Row({std::to_string(request.n), std::to_string(request.a), std::to_string(request.b), request.method,
           SourceLabel(request.method, request.source), values.n_value, values.curve, values.toric});
  });
}

CommandOutput Table(const TableRequest& request, Format format) {
  return detail::Guard(format, "table", [&](Writer& w) {
    const FieldArgs& f = request.field;
    Require(request.n_max >= 1, ErrorCode::kInvalidArgument, "n-max must be >= 1");
    auto base = FieldTower::Build(f.p, f.e, 1, f.seed);
    const std::uint64_t q = base->q();
    const Source source = request.source;
    const std::string& method = request.method;

    if (request.what == "nn") {
      CheckMethod(method, kMethods);
      w.FieldHeader(f, Range(1, request.n_max));
      w.Columns({"n", "a", "b", "method", "source", "N", "curve_points", "toric_points"});
      for (unsigned n = 1; n <= request.n_max; ++n) {
        auto tower = FieldTower::Build(f.p, f.e, n, f.seed);
        std::vector<std::uint64_t> census;
        if (method == "brute") census = oracle::NormTraceCensus(*tower);
        for (Elem a = 1; a < q; ++a) {
          for (Elem b = 1; b < q; ++b) {
            NnValues v;
            if (method == "brute") {
              v.n_value = std::to_string(census[a * q + b]);
            } else {
              v.n_value = Cell(source, [&] {
                v = EvaluateNn(*tower, method, source, a, b);
                return v.n_value;
              });
            }
            w.Row({std::to_string(n), std::to_string(a), std::to_string(b), method, SourceLabel(method, source),
                   v.n_value, v.curve, v.toric});
          }
        }
      }
    } else if (request.what == "curve") {
      CheckMethod(method, {"brute", "gauss", "closed"});
      w.FieldHeader(f, Range(1, request.n_max));
      w.Columns({"n", "a", "b", "method", "source", "curve_points"});
      const charsum::GaussTable table(base->mid_ptr());
      for (unsigned n = 1; n <= request.n_max; ++n) {
        auto tower = FieldTower::Build(f.p, f.e, n, f.seed);
        for (Elem a = 1; a < q; ++a) {
          for (Elem b = 0; b < q; ++b) {
            const std::string value = Cell(source, [&]() -> std::string {
              if (method == "brute") {
                return ToString(oracle::CountCurvePointsTraceFiber(*tower, tower->NormPreimageIndex(a),
                                                                   tower->TracePreimageIndex(b)));
              }
              if (method == "gauss") return ToString(charsum::CountCurveGauss(table, n, a, b).value);
              Require(closedforms::HasClosedForm(q), ErrorCode::kUnsupported, "closed forms exist only for q <= 5");
              return ToString(closedforms::CurveClosed(q, n, a, b, source).value);
            });
            w.Row({std::to_string(n), std::to_string(a), std::to_string(b), method, SourceLabel(method, source),
                   value});
          }
        }
      }
    } else if (request.what == "pn") {
      CheckMethod(method, {"brute", "gauss", "closed"});
      const unsigned first = method == "closed" ? 2 : 1;
      w.FieldHeader(f, Range(first, request.n_max));
      w.Columns({"n", "a", "b", "method", "source", "P"});
      std::unique_ptr<pnab::NnProvider> provider;
      if (method == "brute") provider = std::make_unique<pnab::NnProvider>(pnab::OracleProvider(f.p, f.e, f.seed));
      if (method == "gauss") provider = std::make_unique<pnab::NnProvider>(pnab::GaussProvider(f.p, f.e, f.seed));
      if (method == "closed") {
        Require(closedforms::HasClosedForm(q), ErrorCode::kUnsupported, "closed forms exist only for q <= 5");
      }
      for (unsigned n = first; n <= request.n_max; ++n) {
        for (Elem a = 1; a < q; ++a) {
          for (Elem b = 1; b < q; ++b) {
            const std::string value = Cell(source, [&] {
              if (provider) return ToString(pnab::Pn(*provider, n, a, b));
              return ToString(pnab::PnClosed(q, n, a, b, source));
            });
            w.Row({std::to_string(n), std::to_string(a), std::to_string(b), method, SourceLabel(method, source),
                   value});
          }
        }
      }
    } else if (request.what == "toric") {
      CheckMethod(method, {"brute", "gauss"});
      w.FieldHeader(f, {});
      w.Columns({"n", "u", "method", "toric_points"});
      const charsum::GaussTable table(base->mid_ptr());
      for (unsigned n = 2; n <= request.n_max; ++n) {
        for (Elem u = 1; u < q; ++u) {
          const BigCount y = method == "brute" ? oracle::CountToricPoints(base->mid(), n, u)
                                               : charsum::CountToricGauss(table, n, u).value;
          w.Row({std::to_string(n), std::to_string(u), method, ToString(y)});
        }
      }
    } else {
      Fail(ErrorCode::kInvalidArgument, "unknown table '" + request.what + "'");
    }
  });
}

CommandOutput Bounds(const BoundsRequest& request, Format format) {
  return detail::Guard(format, "bounds", [&](Writer& w) {
    const FieldArgs& f = request.field;
    Require(request.n_max >= 2, ErrorCode::kInvalidArgument, "n-max must be >= 2");
    auto base = FieldTower::Build(f.p, f.e, 1, f.seed);
    const std::uint64_t q = base->q();
    const oracle::EnumerationCaps caps;
    const auto provider = pnab::OracleProvider(f.p, f.e, f.seed, caps);
    w.FieldHeader(f, Range(2, request.n_max));
    w.Columns({"bound", "n", "a", "b", "u", "center", "radius", "radius_exact", "observed", "holds", "decided",
               "comparisons"});
    std::size_t rows = 0, holds = 0, improvements = 0;
    auto emit = [&](const bounds::Bound& bound, const BigCount& observed, unsigned n, const std::string& a,
                    const std::string& b, const std::string& u, std::vector<bounds::Comparison> comparisons) {
      bounds::BoundReport report = bounds::Check(bound, observed, "n=" + std::to_string(n));
      report.comparisons = std::move(comparisons);
      std::string cmp;
      for (const auto& c : report.comparisons) {
        if (!cmp.empty()) cmp += ";";
        cmp += c.other + ":" + (c.tighter ? "tighter" : "not_tighter");
        improvements += c.tighter ? 1 : 0;
      }
      ++rows;
      holds += report.holds ? 1 : 0;
      w.Row({report.name, std::to_string(n), a, b, u, ToString(report.center),
             Decimal(report.radius.to_long_double()), report.radius.to_string(), ToString(report.observed),
             report.holds ? "true" : "false", report.exact ? "exact" : "float", cmp.empty() ? "-" : cmp});
    };
    using bounds::Tighter;
    for (unsigned n = 2; n <= request.n_max; ++n) {
      auto tower = FieldTower::Build(f.p, f.e, n, f.seed);
      const auto census = oracle::NormTraceCensus(*tower, caps);
      const auto pn = pnab::PnCensus(provider, n);
      const auto katz = bounds::Katz(q, n), mw = bounds::MoisioWan(q, n);
      const auto as1 = bounds::AsBound1(q, n), as2 = bounds::AsBound2(q, n);
      const auto hw = bounds::HasseWeil(q, n);
      const auto hw_b = bounds::ImprovedHw(q, n, false), hw_0 = bounds::ImprovedHw(q, n, true);
      const auto hw_0c = bounds::ImprovedHw(q, n, true, bounds::HwCenter::kCorrected);
      const auto cvt = bounds::CurveViaToric(q, n);
      const bool cvt_applies = bounds::CurveViaToricCondition(q, n);
      const auto wan = bounds::WanPn(q, n), mpn = bounds::MoisioPn(q, n), npn = bounds::NewPn(q, n);
      for (Elem a = 1; a < q; ++a) {
        for (Elem b = 0; b < q; ++b) {
          const std::string as = std::to_string(a), bs = std::to_string(b);
          const BigCount nn = FromUint64(census[a * q + b]);
          const BigCount curve = oracle::CountCurvePointsTraceFiber(*tower, tower->NormPreimageIndex(a),
                                                                    tower->TracePreimageIndex(b), caps);
          if (b == 0) {
            emit(bounds::MoisioB0(q, n), nn, n, as, bs, "-", {});
            emit(hw_0, curve, n, as, bs, "-", {{"hasse_weil", Tighter(hw_0, hw)}});
            emit(hw_0c, curve, n, as, bs, "-", {});
          } else {
            emit(katz, nn, n, as, bs, "-", {});
            emit(mw, nn, n, as, bs, "-", {{"katz", Tighter(mw, katz)}});
            emit(as1, nn, n, as, bs, "-", {{"moisio_wan", Tighter(as1, mw)}});
            emit(as2, nn, n, as, bs, "-", {{"moisio_wan", Tighter(as2, mw)}});
            if (n == 3) emit(bounds::N3RangeBound(q), nn, n, as, bs, "-", {});
            emit(hw_b, curve, n, as, bs, "-", {{"hasse_weil", Tighter(hw_b, hw)}});
            if (cvt_applies) emit(cvt, curve, n, as, bs, "-", {{"improved_hw", Tighter(cvt, hw_b)}});
            const BigCount& p_value = pn[a * q + b];
            emit(wan, p_value, n, as, bs, "-", {});
            emit(mpn, p_value, n, as, bs, "-", {{"wan_pn", Tighter(mpn, wan)}});
            emit(npn, p_value, n, as, bs, "-", {{"wan_pn", Tighter(npn, wan)}, {"moisio_pn", Tighter(npn, mpn)}});
          }
          emit(hw, curve, n, as, bs, "-", {});
        }
      }
      const auto tuples = nt::CheckedPow(q - 1, n - 1);
      if (tuples && *tuples <= caps.toric_tuples) {
        const auto tmw = bounds::ToricMw(q, n), timp = bounds::ToricImproved(q, n);
        for (Elem u = 1; u < q; ++u) {
          const BigCount y = oracle::CountToricPoints(base->mid(), n, u, caps);
          emit(tmw, y, n, "-", "-", std::to_string(u), {});
          emit(timp, y, n, "-", "-", std::to_string(u), {{"toric_mw", Tighter(timp, tmw)}});
        }
      } else {
        w.Note("n=" + std::to_string(n) + ": toric rows skipped, (q-1)^(n-1) above the enumeration cap");
      }
    }
    w.Summary({{"rows", std::to_string(rows)},
               {"holds", std::to_string(holds)},
               {"fails", std::to_string(rows - holds)},
               {"improvements", std::to_string(improvements)}});
  });
}

}  // namespace normtrace::cli
