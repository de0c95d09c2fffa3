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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normtrace/closedforms.hpp"
#include "normtrace/oracle.hpp"
#include "normtrace/small_field.hpp"

namespace normtrace::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { kTsv, kJson };

struct FieldArgs {
  std::uint32_t p = 2;
  unsigned e = 1;
  std::uint64_t seed = 0;
};

// Exit codes: 0 success, 1 invariant violation or arithmetic failure,
// 2 invalid parameters, 3 scale exceeded.
struct CommandOutput {
  std::string out;
  std::string err;
  int exit_code = 0;
};

// Methods for N_n(a,b): brute | curve | gauss | toric | closed.
struct ComputeRequest {
  FieldArgs field;
  unsigned n = 1;
  Elem a = 1;
  Elem b = 1;
  std::string method = "brute";
  closedforms::Source source = closedforms::Source::kErrataCorrected;
};
CommandOutput Compute(const ComputeRequest& request, Format format);

// what: nn | curve | pn | toric. Rows cover n = 1..n_max (2..n_max for
// toric), a, b in F_q^* (b in F_q for curve; u in F_q^* for toric).
struct TableRequest {
  FieldArgs field;
  unsigned n_max = 1;
  std::string what = "nn";
  std::string method = "brute";
  closedforms::Source source = closedforms::Source::kErrataCorrected;
};
CommandOutput Table(const TableRequest& request, Format format);

struct BoundsRequest {
  FieldArgs field;
  unsigned n_max = 2;
};
CommandOutput Bounds(const BoundsRequest& request, Format format);

struct VerificationRecord {
  std::string check;
  std::string instance;
  std::vector<std::pair<std::string, std::string>> values;  // (method, value)
  bool agree = true;
  // A disagreement in a finding check is an expected discrepancy with a
  // printed formula or bound and goes to the errata ledger.
  bool finding = false;
  std::string errata_ref;
};

struct VerifyOptions {
  // Empty: q in {2, 3, 4, 5}.
  std::vector<FieldArgs> fields;
  // Applies to every field when set; otherwise a per-q default.
  std::optional<unsigned> n_max;
  // Estimated seconds; 0 means no limit. Shrinks n_max per field.
  double budget_seconds = 0;
};

struct FieldRun {
  FieldArgs field;
  std::uint64_t q = 0;
  unsigned n_max = 0;
};

struct VerifyResult {
  std::vector<FieldRun> runs;
  std::vector<VerificationRecord> records;
  std::size_t violations = 0;
  std::size_t findings = 0;
};

VerifyResult RunVerify(const VerifyOptions& options);
std::string RenderVerify(const VerifyResult& result, Format format);
CommandOutput Verify(const VerifyOptions& options, Format format);

/// Default n_max for a field of order q in verify runs.
unsigned DefaultVerifyNMax(std::uint64_t q);
/// Cost-model estimate in seconds of verifying one (q, n) layer.
double EstimatedSeconds(std::uint64_t q, unsigned n);

}  // namespace normtrace::cli
