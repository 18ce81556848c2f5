// Copyright 2026 The cutgap Authors
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

#ifndef CUTGAP_RATIONAL_HPP_
#define CUTGAP_RATIONAL_HPP_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cutgap {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Every value in the library goes through this type.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" (optionally signed). Decimal points, exponents and zero
// denominators are rejected.
Rational ParseRational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& value);

// Least common multiple of the denominators; 1 for an empty range.
Integer CommonDenominator(std::span<const Rational> values);

Integer Lcm(const Integer& a, const Integer& b);

// Ceiling of a rational as an integer.
Integer Ceil(const Rational& value);

}  // namespace cutgap

#endif  // CUTGAP_RATIONAL_HPP_
