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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "normtrace/bounds.hpp"
#include "normtrace/charsum.hpp"
#include "normtrace/cli.hpp"
#include "normtrace/closedforms.hpp"
#include "normtrace/error.hpp"
#include "normtrace/oracle.hpp"
#include "normtrace/pnab.hpp"
#include "normtrace/tower.hpp"

namespace py = pybind11;
using namespace normtrace;

namespace {

py::int_ ToPy(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object ToPy(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(ToPy(v.get_num()), ToPy(v.get_den()));
}

closedforms::Source ParseSource(const std::string& s) {
  if (s == "errata") return closedforms::Source::kErrataCorrected;
  if (s == "paper") return closedforms::Source::kPaperStated;
  Fail(ErrorCode::kInvalidArgument, "source must be 'errata' or 'paper'");
}

std::shared_ptr<const FieldTower> Tower(std::uint32_t p, unsigned e, unsigned n, std::uint64_t seed) {
  return FieldTower::Build(p, e, n, seed);
}

bounds::Bound NamedBound(const std::string& name, std::uint64_t q, unsigned n, bool b_is_zero) {
  if (name == "katz") return bounds::Katz(q, n);
  if (name == "moisio_b0") return bounds::MoisioB0(q, n);
  if (name == "moisio_wan") return bounds::MoisioWan(q, n);
  if (name == "as_bound1") return bounds::AsBound1(q, n);
  if (name == "as_bound2") return bounds::AsBound2(q, n);
  if (name == "improved_hw") return bounds::ImprovedHw(q, n, b_is_zero);
  if (name == "improved_hw_corrected") return bounds::ImprovedHw(q, n, b_is_zero, bounds::HwCenter::kCorrected);
  if (name == "hasse_weil") return bounds::HasseWeil(q, n);
  if (name == "curve_via_toric") return bounds::CurveViaToric(q, n);
  if (name == "toric_mw") return bounds::ToricMw(q, n);
  if (name == "toric_improved") return bounds::ToricImproved(q, n);
  if (name == "wan_pn") return bounds::WanPn(q, n);
  if (name == "moisio_pn") return bounds::MoisioPn(q, n);
  if (name == "new_pn") return bounds::NewPn(q, n);
  if (name == "n3_range") return bounds::N3RangeBound(q);
  Fail(ErrorCode::kInvalidArgument, "unknown bound '" + name + "'");
}

py::tuple Output(const cli::CommandOutput& o) { return py::make_tuple(o.out, o.err, o.exit_code); }

cli::FieldArgs Field(std::uint32_t p, unsigned e, std::uint64_t seed) { return {p, e, seed}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Norm/trace counting over finite field towers";
  m.attr("__version__") = cli::kVersion;

  // The exception type lives as long as the module; keep a borrowed pointer.
  static PyObject* error_type = py::exception<Error>(m, "NormtraceError").ptr();
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& err) {
      py::object exc = py::handle(error_type)(err.what());
      exc.attr("code") = std::string(ErrorCodeName(err.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<FieldTower, std::shared_ptr<FieldTower>>(m, "FieldTower")
      .def_static(
          "build",
          [](std::uint32_t p, unsigned e, unsigned n, std::uint64_t seed) {
            return std::const_pointer_cast<FieldTower>(FieldTower::Build(p, e, n, seed));
          },
          py::arg("p"), py::arg("e") = 1, py::arg("n") = 1, py::arg("seed") = 0)
      .def_property_readonly("p", &FieldTower::p)
      .def_property_readonly("e", &FieldTower::e)
      .def_property_readonly("n", &FieldTower::n)
      .def_property_readonly("q", &FieldTower::q)
      .def_property_readonly("order", &FieldTower::order)
      .def_property_readonly("base_modulus", &FieldTower::base_modulus)
      .def_property_readonly("top_modulus", &FieldTower::top_modulus)
      .def_property_readonly("g_q", &FieldTower::g_q)
      .def_property_readonly("g_qn", &FieldTower::g_qn);

  m.def(
      "count_norm_trace",
      [](std::uint32_t p, unsigned e, unsigned n, Elem a, Elem b, std::uint64_t seed) {
        return ToPy(oracle::CountNormTrace(*Tower(p, e, n, seed), a, b));
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("seed") = 0,
      "N_n(a,b) by enumeration of F_{q^n}.");
  m.def(
      "norm_trace_census",
      [](std::uint32_t p, unsigned e, unsigned n, std::uint64_t seed) {
        return oracle::NormTraceCensus(*Tower(p, e, n, seed));
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("seed") = 0, "All N_n(a,b); entry a*q+b.");
  m.def(
      "count_curve_points",
      [](std::uint32_t p, unsigned e, unsigned n, Elem a, Elem b, std::uint64_t seed) {
        auto t = Tower(p, e, n, seed);
        return ToPy(oracle::CountCurvePointsTraceFiber(*t, t->NormPreimageIndex(a), t->TracePreimageIndex(b)));
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("seed") = 0);
  m.def(
      "count_curve_gauss",
      [](std::uint32_t p, unsigned e, unsigned n, Elem a, Elem b) {
        const charsum::GaussTable table(Tower(p, e, 1, 0)->mid_ptr());
        const auto r = charsum::CountCurveGauss(table, n, a, b);
        return py::make_tuple(ToPy(r.value), r.residual);
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("a"), py::arg("b"), "(count, residual).");
  m.def(
      "count_toric_points",
      [](std::uint32_t p, unsigned e, unsigned n, Elem u) {
        return ToPy(oracle::CountToricPoints(Tower(p, e, 1, 0)->mid(), n, u));
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("u"));
  m.def(
      "count_toric_gauss",
      [](std::uint32_t p, unsigned e, unsigned n, Elem u) {
        const charsum::GaussTable table(Tower(p, e, 1, 0)->mid_ptr());
        const auto r = charsum::CountToricGauss(table, n, u);
        return py::make_tuple(ToPy(r.value), r.residual);
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("u"));
  m.def(
      "nn_closed",
      [](std::uint64_t q, unsigned n, Elem a, Elem b, const std::string& source) {
        const auto r = closedforms::NnClosed(q, n, a, b, ParseSource(source));
        return py::make_tuple(ToPy(r.value), r.branch);
      },
      py::arg("q"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("source") = "errata", "(value, branch id).");
  m.def(
      "curve_closed",
      [](std::uint64_t q, unsigned n, Elem a, Elem b, const std::string& source) {
        const auto r = closedforms::CurveClosed(q, n, a, b, ParseSource(source));
        return py::make_tuple(ToPy(r.value), r.branch);
      },
      py::arg("q"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("source") = "errata");
  m.def(
      "count_irreducible",
      [](std::uint32_t p, unsigned e, unsigned n, Elem a, Elem b) {
        return ToPy(oracle::CountIrreducible(Tower(p, e, 1, 0)->mid(), n, a, b));
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("a"), py::arg("b"),
      "Monic irreducibles of degree n with trace a and norm b, by enumeration.");
  m.def(
      "pn",
      [](std::uint32_t p, unsigned e, unsigned n, Elem a, Elem b, const std::string& method) {
        if (method == "oracle") return ToPy(pnab::Pn(pnab::OracleProvider(p, e), n, a, b));
        if (method == "gauss") return ToPy(pnab::Pn(pnab::GaussProvider(p, e), n, a, b));
        Fail(ErrorCode::kInvalidArgument, "method must be 'oracle' or 'gauss'");
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("method") = "oracle",
      "P_n(a,b) by Moebius inversion over exact-degree counts.");
  m.def(
      "check_bound",
      [](const std::string& name, std::uint64_t q, unsigned n, const py::int_& observed, bool b_is_zero) {
        const auto report =
            bounds::Check(NamedBound(name, q, n, b_is_zero), BigInt(py::str(observed).cast<std::string>()), "");
        py::dict d;
        d["name"] = report.name;
        d["center"] = ToPy(report.center);
        d["radius"] = static_cast<double>(report.radius.to_long_double());
        d["radius_exact"] = report.radius.to_string();
        d["holds"] = report.holds;
        d["exact"] = report.exact;
        return d;
      },
      py::arg("name"), py::arg("q"), py::arg("n"), py::arg("observed"), py::arg("b_is_zero") = false);

  auto cli_mod = m.def_submodule("cli", "Command implementations; each returns (stdout, stderr, exit_code).");
  auto fmt = [](const std::string& f) { return f == "json" ? cli::Format::kJson : cli::Format::kTsv; };
  cli_mod.def(
      "compute",
      [fmt](std::uint32_t p, unsigned e, unsigned n, Elem a, Elem b, const std::string& method,
            const std::string& source, const std::string& format, std::uint64_t seed) {
        return Output(cli::Compute({Field(p, e, seed), n, a, b, method, ParseSource(source)}, fmt(format)));
      },
      py::arg("p"), py::arg("e") = 1, py::arg("n") = 1, py::arg("a") = 1, py::arg("b") = 1,
      py::arg("method") = "brute", py::arg("source") = "errata", py::arg("format") = "tsv", py::arg("seed") = 0);
  cli_mod.def(
      "table",
      [fmt](std::uint32_t p, unsigned e, unsigned n_max, const std::string& what, const std::string& method,
            const std::string& source, const std::string& format, std::uint64_t seed) {
        return Output(cli::Table({Field(p, e, seed), n_max, what, method, ParseSource(source)}, fmt(format)));
      },
      py::arg("p"), py::arg("e") = 1, py::arg("n_max") = 1, py::arg("what") = "nn", py::arg("method") = "brute",
      py::arg("source") = "errata", py::arg("format") = "tsv", py::arg("seed") = 0);
  cli_mod.def(
      "bounds",
      [fmt](std::uint32_t p, unsigned e, unsigned n_max, const std::string& format, std::uint64_t seed) {
        return Output(cli::Bounds({Field(p, e, seed), n_max}, fmt(format)));
      },
      py::arg("p"), py::arg("e") = 1, py::arg("n_max") = 2, py::arg("format") = "tsv", py::arg("seed") = 0);
  cli_mod.def(
      "verify",
      [fmt](std::optional<std::uint32_t> p, unsigned e, std::optional<unsigned> n_max, double budget,
            const std::string& format) {
        cli::VerifyOptions options;
        if (p) options.fields.push_back(Field(*p, e, 0));
        options.n_max = n_max;
        options.budget_seconds = budget;
        return Output(cli::Verify(options, fmt(format)));
      },
      py::arg("p") = py::none(), py::arg("e") = 1, py::arg("n_max") = py::none(), py::arg("budget") = 0.0,
      py::arg("format") = "tsv");
}
