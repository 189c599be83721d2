// Copyright 2026 The Semdoc Authors.
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

#include "semdoc/number.h"

#include <cctype>
#include <string>

namespace semdoc {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Above this many significant digits int64 arithmetic is no longer safe.
constexpr size_t kMaxDigits = 17;

std::optional<Rational> from_digits(const std::string &integer,
                                    const std::string &fraction) {
  if (integer.size() + fraction.size() > kMaxDigits) return std::nullopt;
  int64_t num = 0;
  for (char c : integer) num = num * 10 + (c - '0');
  int64_t den = 1;
  for (char c : fraction) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return Rational(num, den);
}

}  // namespace

std::optional<Rational> parse_german_number(std::string_view text) {
  if (text.empty() || !is_digit(text.front())) return std::nullopt;
  std::string_view integer_part = text;
  std::string_view fraction_part;
  bool has_comma = false;
  if (auto comma = text.find(','); comma != std::string_view::npos) {
    integer_part = text.substr(0, comma);
    fraction_part = text.substr(comma + 1);
    has_comma = true;
    if (fraction_part.empty()) return std::nullopt;
    for (char c : fraction_part) {
      if (!is_digit(c)) return std::nullopt;
    }
  }

  std::string integer;
  if (integer_part.find('.') == std::string_view::npos) {
    for (char c : integer_part) {
      if (!is_digit(c)) return std::nullopt;
      integer.push_back(c);
    }
  } else {
    // Thousands groups: leading group of 1-3 digits, then ".ddd" groups.
    size_t group_start = 0;
    bool first = true;
    while (group_start <= integer_part.size()) {
      size_t dot = integer_part.find('.', group_start);
      std::string_view group = integer_part.substr(
          group_start, dot == std::string_view::npos ? std::string_view::npos
                                                     : dot - group_start);
      if (first ? (group.empty() || group.size() > 3) : group.size() != 3) {
        return std::nullopt;
      }
      for (char c : group) {
        if (!is_digit(c)) return std::nullopt;
        integer.push_back(c);
      }
      first = false;
      if (dot == std::string_view::npos) break;
      group_start = dot + 1;
    }
  }
  if (integer.empty()) return std::nullopt;
  return from_digits(integer, has_comma ? std::string(fraction_part) : "");
}

std::string format_german_number(const Rational &value) {
  int64_t den = value.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) {
    return std::to_string(value.numerator()) + "/" +
           std::to_string(value.denominator());
  }
  int places = std::max(twos, fives);
  int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  int64_t scaled = value.numerator() * (scale / value.denominator());
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = std::to_string(scaled);
  if (places > 0) {
    if (digits.size() <= static_cast<size_t>(places)) {
      digits.insert(0, places - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - places, ",");
  }
  return negative ? "-" + digits : digits;
}

std::optional<Rational> parse_ratio(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = parse_ratio(text.substr(0, slash));
    auto den = parse_ratio(text.substr(slash + 1));
    if (!num || !den || den->numerator() == 0) return std::nullopt;
    return *num / *den;
  }
  std::string german(text);
  // Accept the English decimal point as well as the German comma.
  if (german.find('.') != std::string::npos &&
      german.find(',') == std::string::npos) {
    german[german.find('.')] = ',';
  }
  if (german.find('.') != std::string::npos) return std::nullopt;
  return parse_german_number(german);
}

}  // namespace semdoc
