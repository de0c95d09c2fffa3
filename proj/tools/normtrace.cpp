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


// Command-line front end. Parsing only; every command lives in normtrace_cli.

#include <CLI11.hpp>

#include <iostream>

#include "normtrace/cli.hpp"

namespace {

using normtrace::cli::CommandOutput;
using normtrace::cli::FieldArgs;
using normtrace::cli::Format;
using normtrace::closedforms::Source;

void AddField(CLI::App* cmd, FieldArgs& field) {
  cmd->add_option("--p", field.p, "characteristic")->required();
  cmd->add_option("--e", field.e, "F_q = F_{p^e}")->default_val(1);
  cmd->add_option("--seed", field.seed, "modulus selection seed")->default_val(0);
}

void AddSource(CLI::App* cmd, Source& source) {
  static const std::map<std::string, Source> kSources{{"errata", Source::kErrataCorrected},
                                                      {"paper", Source::kPaperStated}};
  cmd->add_option("--source", source, "closed-form source")
      ->transform(CLI::CheckedTransformer(kSources, CLI::ignore_case))
      ->default_str("errata");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norm/trace counts over finite field towers"};
  app.set_version_flag("--version", normtrace::cli::kVersion);
  app.require_subcommand(1);

  Format format = Format::kTsv;
  app.add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"tsv", Format::kTsv}, {"json", Format::kJson}}))
      ->default_str("tsv");

  normtrace::cli::ComputeRequest compute;
  auto* compute_cmd = app.add_subcommand("compute", "N_n(a,b) for one instance");
  AddField(compute_cmd, compute.field);
  compute_cmd->add_option("--n", compute.n, "extension degree")->required();
  compute_cmd->add_option("--a", compute.a, "norm (element index)")->required();
  compute_cmd->add_option("--b", compute.b, "trace (element index)")->required();
  compute_cmd->add_option("--method", compute.method, "brute|curve|gauss|toric|closed")->default_val("brute");
  AddSource(compute_cmd, compute.source);

  normtrace::cli::TableRequest table;
  auto* table_cmd = app.add_subcommand("table", "full grid of one quantity");
  AddField(table_cmd, table.field);
  table_cmd->add_option("--n-max", table.n_max, "largest degree")->required();
  table_cmd->add_option("--what", table.what, "nn|curve|pn|toric")->default_val("nn");
  table_cmd->add_option("--method", table.method, "evaluation method")->default_val("brute");
  AddSource(table_cmd, table.source);

  normtrace::cli::BoundsRequest bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "every bound against exact values");
  AddField(bounds_cmd, bounds.field);
  bounds_cmd->add_option("--n-max", bounds.n_max, "largest degree")->default_val(2);

  normtrace::cli::VerifyOptions verify;
  FieldArgs verify_field;
  unsigned verify_n_max = 0;
  auto* verify_cmd = app.add_subcommand("verify", "cross-method verification and errata ledger");
  auto* p_opt = verify_cmd->add_option("--p", verify_field.p, "characteristic (default: q in {2,3,4,5})");
  verify_cmd->add_option("--e", verify_field.e, "F_q = F_{p^e}")->needs(p_opt)->default_val(1);
  verify_cmd->add_option("--seed", verify_field.seed, "modulus selection seed")->default_val(0);
  auto* n_opt = verify_cmd->add_option("--n-max", verify_n_max, "largest degree for every field");
  verify_cmd->add_option("--budget", verify.budget_seconds, "estimated seconds; shrinks n-max")->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    // Help and version exit 0; malformed flags count as invalid parameters.
    return app.exit(err) == 0 ? 0 : 2;
  }

  CommandOutput output;
  if (*compute_cmd) {
    output = normtrace::cli::Compute(compute, format);
  } else if (*table_cmd) {
    output = normtrace::cli::Table(table, format);
  } else if (*bounds_cmd) {
    output = normtrace::cli::Bounds(bounds, format);
  } else {
    if (*p_opt) verify.fields.push_back(verify_field);
    if (*n_opt) verify.n_max = verify_n_max;
    output = normtrace::cli::Verify(verify, format);
  }
  std::cout << output.out;
  std::cerr << output.err;
  return output.exit_code;
}
