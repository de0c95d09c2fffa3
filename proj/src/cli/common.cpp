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


#include "common.hpp"

#include "normtrace/tower.hpp"

namespace normtrace::cli::detail {

using Json = nlohmann::ordered_json;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kScaleExceeded:
      return 3;
    case ErrorCode::kNotPrime:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kZeroArgument:
    case ErrorCode::kLevelMismatch:
    case ErrorCode::kDivisionByZero:
    case ErrorCode::kEvenCharacteristic:
    case ErrorCode::kUnsupported:
    case ErrorCode::kTrivialCharacter:
      return 2;
    default:
      return 1;
  }
}

std::string Coeffs(const std::vector<Elem>& coeffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs[i]);
  }
  return out + "]";
}

void Writer::Banner() {
  if (banner_done_) return;
  banner_done_ = true;
  if (format_ == Format::kTsv) {
    out_ << "# normtrace " << kVersion << " " << command_ << "\n";
  } else {
    out_ << Json{{"type", "banner"}, {"tool", "normtrace"}, {"version", kVersion}, {"command", command_}}.dump()
         << "\n";
  }
}

void Writer::FieldHeader(const FieldArgs& field, const std::vector<unsigned>& degrees) {
  Banner();
  // Header towers skip table construction; moduli and generators do not depend on it.
  auto base = FieldTower::Build(field.p, field.e, 1, field.seed, 0);
  Json towers = Json::array();
  std::vector<std::string> lines;
  for (unsigned n : degrees) {
    auto tower = FieldTower::Build(field.p, field.e, n, field.seed, 0);
    towers.push_back({{"n", n}, {"top_modulus", tower->top_modulus()}, {"g_qn", tower->g_qn()}});
    lines.push_back("# n=" + std::to_string(n) + " top_modulus=" + Coeffs(tower->top_modulus()) +
                    " g_qn=" + std::to_string(tower->g_qn()));
  }
  if (format_ == Format::kTsv) {
    out_ << "# p=" << field.p << " e=" << field.e << " q=" << base->q() << " seed=" << field.seed
         << " base_modulus=" << Coeffs(base->base_modulus()) << " g_q=" << base->g_q() << "\n";
    out_ << "# encoding: element index = sum c_i p^i over the power basis (F_q), sum d_j q^j (F_{q^n})\n";
    for (const auto& line : lines) out_ << line << "\n";
  } else {
    out_ << Json{{"type", "header"},
                 {"p", field.p},
                 {"e", field.e},
                 {"q", base->q()},
                 {"seed", field.seed},
                 {"base_modulus", base->base_modulus()},
                 {"g_q", base->g_q()},
                 {"towers", towers}}
                .dump()
         << "\n";
  }
}

void Writer::Note(const std::string& text) {
  Banner();
  if (format_ == Format::kTsv) {
    out_ << "# " << text << "\n";
  } else {
    out_ << Json{{"type", "note"}, {"text", text}}.dump() << "\n";
  }
}

void Writer::Columns(std::vector<std::string> names) {
  Banner();
  columns_ = std::move(names);
  if (format_ == Format::kTsv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "\t" : "") << columns_[i];
    out_ << "\n";
  }
}

void Writer::Row(const std::vector<std::string>& values) {
  Require(values.size() == columns_.size(), ErrorCode::kInternal, "row width mismatch");
  if (format_ == Format::kTsv) {
    for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "\t" : "") << values[i];
    out_ << "\n";
    return;
  }
  Json row{{"type", "row"}};
  for (std::size_t i = 0; i < values.size(); ++i) row[columns_[i]] = values[i];
  out_ << row.dump() << "\n";
}

void Writer::Summary(const std::vector<std::pair<std::string, std::string>>& items) {
  Banner();
  if (format_ == Format::kTsv) {
    out_ << "# summary";
    for (const auto& [key, value] : items) out_ << " " << key << "=" << value;
    out_ << "\n";
    return;
  }
  Json summary{{"type", "summary"}};
  for (const auto& [key, value] : items) summary[key] = value;
  out_ << summary.dump() << "\n";
}

CommandOutput Guard(Format format, const std::string& command, const std::function<void(Writer&)>& body) {
  Writer writer(format, command);
  CommandOutput output;
  try {
    body(writer);
    output.out = writer.str();
  } catch (const Error& err) {
    output.err = std::string("normtrace ") + command + ": " + err.what() + "\n";
    output.exit_code = ExitCodeFor(err.code());
  } catch (const std::exception& err) {
    output.err = std::string("normtrace ") + command + ": " + err.what() + "\n";
    output.exit_code = 1;
  }
  return output;
}

}  // namespace normtrace::cli::detail
