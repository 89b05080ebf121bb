// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "g2deg/poly.hpp"

namespace g2deg {

enum class OrderKind { degrevlex, lex };

/// Monomial order on the exponent vectors of one ring. `priority` lists ring
/// indices from the largest variable to the smallest.
class TermOrder {
 public:
  static TermOrder degrevlex(const Ring& ring, const std::vector<std::string>& largest_first = {});
  static TermOrder lex(const Ring& ring, const std::vector<std::string>& largest_first = {});

  OrderKind kind() const { return kind_; }
  const Ring& ring() const { return ring_; }

  /// Strict comparison: lhs > rhs.
  bool greater(const Exponents& lhs, const Exponents& rhs) const;

  /// e.g. "degrevlex(a>b>c>d)"
  std::string describe() const;

 private:
  TermOrder(OrderKind kind, Ring ring, std::vector<std::size_t> priority)
      : kind_(kind), ring_(std::move(ring)), priority_(std::move(priority)) {}

  OrderKind kind_;
  Ring ring_;
  std::vector<std::size_t> priority_;
};

/// Exponents of the leading monomial (p must be nonzero).
const Exponents& leading_exponents(const MultiPoly& p, const TermOrder& order);
Rational leading_coefficient(const MultiPoly& p, const TermOrder& order);

/// Fully reduced remainder of f modulo the list `basis`.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, const TermOrder& order);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const TermOrder& order);

/// Reduced Groebner basis (monic, sorted by decreasing leading monomial).
/// Zero generators are dropped; throws DomainError if none remain.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators, const TermOrder& order);

/// Every S-polynomial reduces to zero.
bool satisfies_s_pair_criterion(const std::vector<MultiPoly>& basis, const TermOrder& order);
/// No term of any element is divisible by another element's leading monomial.
bool is_autoreduced(const std::vector<MultiPoly>& basis, const TermOrder& order);

/// Membership via the normal form against a Groebner basis.
bool ideal_contains(const std::vector<MultiPoly>& groebner_basis, const MultiPoly& f, const TermOrder& order);
/// Two-sided membership: each generating set lies in the other's ideal.
bool ideals_equal(const std::vector<MultiPoly>& lhs, const std::vector<MultiPoly>& rhs, const TermOrder& order);

}  // namespace g2deg
