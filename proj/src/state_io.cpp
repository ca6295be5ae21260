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

#include "qdiscord/state_io.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace qdiscord {
namespace {

std::optional<double> parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Complex> parse_complex(std::string_view token) {
  const char last = token.back();
  if (last != 'i' && last != 'j') {
    const auto re = parse_double(token);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  const std::string_view body = token.substr(0, token.size() - 1);
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_part = split == std::string_view::npos ? "" : body.substr(0, split);
  const std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  double re = 0.0;
  if (!re_part.empty()) {
    const auto v = parse_double(re_part);
    if (!v) return std::nullopt;
    re = *v;
  }
  double im;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    const auto v = parse_double(im_part);
    if (!v) return std::nullopt;
    im = *v;
  }
  return Complex(re, im);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string fmt_pi(double radians) { return fmt::format("{:.12g}", radians / std::numbers::pi); }

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(fmt::format("line {}, column {}: {}", line, column, what)),
      line_(line),
      column_(column) {}

Matrix4 parse_state_text(std::string_view text) {
  Matrix4 m;
  std::size_t row = 0;
  std::size_t line_no = 0;
  std::size_t last_line = 1;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    last_line = line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t col = 0;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && is_space(line[pos])) ++pos;
      if (pos >= line.size()) break;
      const std::size_t start = pos;
      while (pos < line.size() && !is_space(line[pos])) ++pos;
      const std::string_view token = line.substr(start, pos - start);
      if (row >= 4) throw ParseError(line_no, start + 1, "more than four matrix rows");
      if (col >= 4) throw ParseError(line_no, start + 1, "more than four entries in row");
      const auto value = parse_complex(token);
      if (!value) {
        throw ParseError(line_no, start + 1, fmt::format("cannot parse complex number '{}'", token));
      }
      m(row, col++) = *value;
    }
    if (col == 0) continue;
    if (col != 4) {
      throw ParseError(line_no, line.size() + 1, fmt::format("expected 4 entries, found {}", col));
    }
    ++row;
  }
  if (row != 4) throw ParseError(last_line, 1, fmt::format("expected 4 matrix rows, found {}", row));
  return m;
}

TwoQubitState load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return TwoQubitState(parse_state_text(buf.str()));
}

std::string format_state_text(const Matrix4& m) {
  std::string out;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (c) out += ' ';
      out += fmt::format("{:.17g}{:+.17g}i", m(r, c).real(), m(r, c).imag());
    }
    out += '\n';
  }
  return out;
}

std::string format_report_text(const DiscordReport& r) {
  const auto& n = r.optimal_direction;
  const auto& m = r.mcdm_direction;
  std::string out;
  out += fmt::format("mutual_information        {:.12g}\n", r.mutual_information);
  out += fmt::format("classical_correlation     {:.12g}\n", r.classical_correlation);
  out += fmt::format("discord                   {:.12g}\n", r.discord);
  out += fmt::format("mcdm_discord              {:.12g}\n", r.mcdm_discord);
  out += fmt::format("min_conditional_entropy   {:.12g}\n", r.min_conditional_entropy);
  out += fmt::format("mcdm_conditional_entropy  {:.12g}\n", r.mcdm_conditional_entropy);
  out += fmt::format("optimal_theta_over_pi     {}\n", fmt_pi(n.theta()));
  out += fmt::format("optimal_phi_over_pi       {}\n", fmt_pi(n.phi()));
  out += fmt::format("optimal_direction         {:.12g} {:.12g} {:.12g}\n", n[0], n[1], n[2]);
  out += fmt::format("mcdm_direction            {:.12g} {:.12g} {:.12g}\n", m[0], m[1], m[2]);
  return out;
}

std::string format_report_json(const DiscordReport& r) {
  const auto& n = r.optimal_direction;
  const auto& m = r.mcdm_direction;
  nlohmann::ordered_json j;
  j["mutual_information"] = r.mutual_information;
  j["classical_correlation"] = r.classical_correlation;
  j["discord"] = r.discord;
  j["mcdm_discord"] = r.mcdm_discord;
  j["min_conditional_entropy"] = r.min_conditional_entropy;
  j["mcdm_conditional_entropy"] = r.mcdm_conditional_entropy;
  j["optimal_direction"] = {n[0], n[1], n[2]};
  j["optimal_theta_over_pi"] = n.theta() / std::numbers::pi;
  j["optimal_phi_over_pi"] = n.phi() / std::numbers::pi;
  j["mcdm_direction"] = {m[0], m[1], m[2]};
  return j.dump(2) + "\n";
}

}  // namespace qdiscord
