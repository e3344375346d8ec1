// Copyright 2026 The coopgames Authors
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

#ifndef COOP_RATIONAL_HPP
#define COOP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coop {

// Exact arbitrary-precision rational. GMP keeps every result in canonical
// form (positive denominator, coprime parts).
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q != 0). Whitespace around the literal is
// ignored. Throws ParseError on anything else, including decimals.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

// Approximation for display only.
double to_double(const Rational& value);

}  // namespace coop

#endif  // COOP_RATIONAL_HPP
