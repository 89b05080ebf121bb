// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace g2deg {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) once it leaves this library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "n/d" with an optional sign (ASCII or U+2212). Rejects
/// zero denominators, decimal points and trailing garbage.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// q^e for any integer e; throws DomainError for 0^(negative).
Rational pow(const Rational& q, int e);

}  // namespace g2deg
