// Copyright 2026 The GraphSort Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHSORT_CLI_IO_HPP
#define GRAPHSORT_CLI_IO_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graphsort/sort_key.hpp"

namespace graphsort::cli {

// A number as it appeared in the input. Sorting reorders tokens and never
// reformats them.
struct Token {
  std::string text;
  double value = 0.0;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Parses one decimal token; accepts an optional leading '+' and scientific
/// notation, rejects NaN and trailing garbage.
inline double parse_decimal(std::string_view text, std::size_t line) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') {
    body.remove_prefix(1);
    if (body.empty() || body.front() == '+' || body.front() == '-') {
      throw parse_error(line, "not a number: '" + std::string(text) + "'");
    }
  }
  double value = 0.0;
  const char* first = body.data();
  const char* last = body.data() + body.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw parse_error(line, "out of range: '" + std::string(text) + "'");
  }
  if (ec != std::errc() || ptr != last) {
    throw parse_error(line, "not a number: '" + std::string(text) + "'");
  }
  if (std::isnan(value)) throw parse_error(line, "NaN has no place in a total order");
  return value;
}

/// One number per line. Blank lines are skipped; surrounding whitespace is
/// dropped from the stored token text.
inline std::vector<Token> parse_tokens(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = detail::trim(line);
    if (text.empty()) continue;
    if (text.find_first_of(" \t") != std::string_view::npos) {
      throw parse_error(line_no, "expected one number per line");
    }
    tokens.push_back({std::string(text), parse_decimal(text, line_no)});
  }
  return tokens;
}

inline std::vector<Token> read_token_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read " + path.string());
  return parse_tokens(in);
}

inline std::vector<double> token_values(std::span<const Token> tokens) {
  std::vector<double> values;
  values.reserve(tokens.size());
  for (const auto& t : tokens) values.push_back(t.value);
  return values;
}

/// Writes tokens[order[t] - 1].text, one per line.
inline void write_tokens(std::ostream& out, std::span<const Token> tokens,
                         std::span<const Vertex> order) {
  for (Vertex v : order) out << tokens[v - 1].text << '\n';
}

}  // namespace graphsort::cli

#endif  // GRAPHSORT_CLI_IO_HPP
