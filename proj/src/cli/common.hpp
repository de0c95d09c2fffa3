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


// Output plumbing shared by the subcommands.
#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "normtrace/cli.hpp"
#include "normtrace/error.hpp"

namespace normtrace::cli::detail {

int ExitCodeFor(ErrorCode code);

/// TSV with '#' metadata lines and one column-name row, or JSON lines with
/// a "type" field ("header", "row", "note", "summary").
class Writer {
 public:
  Writer(Format format, std::string command) : format_(format), command_(std::move(command)) {}

  void FieldHeader(const FieldArgs& field, const std::vector<unsigned>& degrees);
  void Note(const std::string& text);
  void Columns(std::vector<std::string> names);
  void Row(const std::vector<std::string>& values);
  void Summary(const std::vector<std::pair<std::string, std::string>>& items);
  std::string str() const { return out_.str(); }

 private:
  void Banner();

  Format format_;
  std::string command_;
  bool banner_done_ = false;
  std::vector<std::string> columns_;
  std::ostringstream out_;
};

/// Runs body and converts library errors into exit codes.
CommandOutput Guard(Format format, const std::string& command,
                    const std::function<void(Writer&)>& body);

std::string Coeffs(const std::vector<Elem>& coeffs);

}  // namespace normtrace::cli::detail
