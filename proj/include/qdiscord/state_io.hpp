// Copyright 2026 The qdiscord Authors
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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qdiscord/discord.hpp"
#include "qdiscord/linalg.hpp"

namespace qdiscord {

/// Malformed state file. line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// State file format: four non-blank lines of four whitespace-separated
/// complex numbers, row-major. Entries look like `0.25`, `-0.1i`, `0.1+0.2i`
/// or `1e-3-2e-3i`. Everything after `#` on a line is ignored.
Matrix4 parse_state_text(std::string_view text);

/// Parses and validates. Throws ParseError, or NotAStateError /
/// ValidationError when the matrix is not a density matrix.
TwoQubitState load_state_file(const std::filesystem::path& path);

/// Inverse of parse_state_text, 17 significant digits.
std::string format_state_text(const Matrix4& m);

/// Human-readable multi-line report; angles in units of pi.
std::string format_report_text(const DiscordReport& report);
/// One JSON object.
std::string format_report_json(const DiscordReport& report);

}  // namespace qdiscord
