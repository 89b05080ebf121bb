// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g2deg/rational.hpp"

namespace g2deg {

/// An explicit, ordered list of variable names. Two rings are the same ring
/// iff their name lists are identical.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const VarSet>;

Ring make_ring(std::vector<std::string> names);
bool same_ring(const Ring& lhs, const Ring& rhs);

/// Dense exponent vector, one entry per ring variable.
using Exponents = std::vector<int>;

/// Descending graded-lexicographic order: higher total degree first, ties
/// broken lexicographically in ring variable order.
struct GrlexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials over the same ring
/// are equal iff their term maps are equal.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit MultiPoly(Ring ring);

  static MultiPoly constant(Ring ring, const Rational& value);
  static MultiPoly variable(Ring ring, std::string_view name);
  static MultiPoly monomial(Ring ring, Exponents exps, const Rational& coeff = 1);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the given monomial (zero if absent).
  Rational coefficient(const Exponents& exps) const;
  Rational constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Variables that occur with positive exponent in some term.
  std::vector<std::string> support() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MultiPoly operator*(const Rational& lhs, MultiPoly rhs) { return rhs *= lhs; }
  MultiPoly operator-() const;

  MultiPoly pow(unsigned e) const;

  /// Adds coeff * x^exps in place.
  void add_term(const Exponents& exps, const Rational& coeff);

  /// Evaluates at a point given in ring variable order.
  Rational evaluate(std::span<const Rational> point) const;

  bool operator==(const MultiPoly& other) const;

  /// Canonical text form, e.g. "-3*t1^2*t2 - 3*t1*t2^2".
  std::string to_string() const;

 private:
  void require_same_ring(const MultiPoly& other) const;

  Ring ring_;
  TermMap terms_;
};

std::string to_string(const MultiPoly& p);

/// Parses the canonical grammar plus parentheses and integer powers of
/// parenthesised groups. Identifiers must belong to `ring`.
MultiPoly parse_poly(std::string_view text, const Ring& ring);

/// Simultaneous substitution into `target`. Unmapped variables of `p` pass
/// through by name and must exist in `target`.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& images, const Ring& target);

/// As above with the target ring taken from the images (or `p` itself when
/// `images` is empty).
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& images);

/// Re-expresses `p` in a ring whose variables are a superset of the used ones.
MultiPoly embed_in(const MultiPoly& p, const Ring& target);

}  // namespace g2deg
