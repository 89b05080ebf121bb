// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "g2deg/poly.hpp"

namespace g2deg {

enum class WeightBasis { alpha, t };

const char* to_string(WeightBasis basis);

/// A torus weight c1*e1 + c2*e2 where (e1, e2) is (alpha1, alpha2) or
/// (t1, t2) depending on the tag. The two bases are related by
/// alpha1 = t1 - t2, alpha2 = -t1 + 2 t2 (unimodular, so integer coordinates
/// convert exactly).
class WeightVector {
 public:
  constexpr WeightVector(WeightBasis basis, int c1, int c2) : basis_(basis), c1_(c1), c2_(c2) {}

  static constexpr WeightVector alpha(int c1, int c2) { return {WeightBasis::alpha, c1, c2}; }
  static constexpr WeightVector t(int c1, int c2) { return {WeightBasis::t, c1, c2}; }

  WeightBasis basis() const { return basis_; }
  int c1() const { return c1_; }
  int c2() const { return c2_; }
  bool is_zero() const { return c1_ == 0 && c2_ == 0; }

  WeightVector in_basis(WeightBasis target) const;

  /// Linear form in the ring of the tag's basis (alpha_ring or t_ring).
  MultiPoly linear_form() const;

  WeightVector operator+(const WeightVector& other) const;
  WeightVector operator-() const { return {basis_, -c1_, -c2_}; }
  WeightVector operator-(const WeightVector& other) const { return *this + (-other); }
  friend WeightVector operator*(int k, const WeightVector& w) { return {w.basis_, k * w.c1_, k * w.c2_}; }

  /// Throws BasisMismatchError when tags differ.
  bool operator==(const WeightVector& other) const;

  std::string to_string() const;

 private:
  void require_same_basis(const WeightVector& other) const;

  WeightBasis basis_;
  int c1_;
  int c2_;
};

using WeightAssignment = std::map<std::string, WeightVector>;

/// The common weight of every monomial of `p`. Throws InhomogeneousError
/// naming two monomials of different weight, DomainError for p == 0, and
/// std::out_of_range style DomainError for an unassigned variable.
WeightVector weight_of(const MultiPoly& p, const WeightAssignment& assignment);

}  // namespace g2deg
