// SPDX-License-Identifier: Apache-2.0
#include "g2deg/rational.hpp"

#include <cctype>

#include "g2deg/errors.hpp"

namespace g2deg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string_view body = text;
  bool negative = false;
  constexpr std::string_view kUnicodeMinus = "\u2212";
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  } else if (body.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
    negative = true;
    body.remove_prefix(kUnicodeMinus.size());
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational pow(const Rational& q, int e) {
  if (e < 0) {
    if (q == 0) throw DomainError("zero raised to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Rational result = 1;
  Rational base = q;
  for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
    if (k & 1U) result *= base;
    base *= base;
  }
  return result;
}

}  // namespace g2deg
