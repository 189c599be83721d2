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

#ifndef SEMDOC_NUMBER_H_
#define SEMDOC_NUMBER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace semdoc {

// Compare only against other Rationals: with Boost 1.74 under C++20,
// mixed comparisons such as `r == 0` recurse without end.
using Rational = boost::rational<int64_t>;

// German number syntax: digits with an optional decimal comma, thousands
// groups separated by points ("14.000", "2,68", "1.250,5"). Returns nullopt
// for anything else.
std::optional<Rational> parse_german_number(std::string_view text);

// Inverse of parse_german_number for values with a terminating decimal
// expansion; no thousands grouping is emitted. Other values are rendered
// as "num/den".
std::string format_german_number(const Rational &value);

// Accepts "1/10", "0.1" or "3" as used on the command line and in config
// files.
std::optional<Rational> parse_ratio(std::string_view text);

}  // namespace semdoc

#endif  // SEMDOC_NUMBER_H_
