// SPDX-License-Identifier: Apache-2.0
#include "g2deg/weights.hpp"

#include <optional>

#include "g2deg/errors.hpp"
#include "g2deg/rings.hpp"

namespace g2deg {

const char* to_string(WeightBasis basis) { return basis == WeightBasis::alpha ? "alpha" : "t"; }

WeightVector WeightVector::in_basis(WeightBasis target) const {
  if (target == basis_) return *this;
  if (basis_ == WeightBasis::alpha) {
    // p a1 + q a2 = (p - q) t1 + (-p + 2q) t2
    return t(c1_ - c2_, -c1_ + 2 * c2_);
  }
  // t1 = 2 a1 + a2, t2 = a1 + a2
  return alpha(2 * c1_ + c2_, c1_ + c2_);
}

MultiPoly WeightVector::linear_form() const {
  const Ring& ring = basis_ == WeightBasis::alpha ? alpha_ring() : t_ring();
  MultiPoly p(ring);
  p.add_term({1, 0}, c1_);
  p.add_term({0, 1}, c2_);
  return p;
}

void WeightVector::require_same_basis(const WeightVector& other) const {
  if (basis_ != other.basis_)
    throw BasisMismatchError(std::string("weight basis mismatch: ") + g2deg::to_string(basis_) + " vs " +
                             g2deg::to_string(other.basis_));
}

WeightVector WeightVector::operator+(const WeightVector& other) const {
  require_same_basis(other);
  return {basis_, c1_ + other.c1_, c2_ + other.c2_};
}

bool WeightVector::operator==(const WeightVector& other) const {
  require_same_basis(other);
  return c1_ == other.c1_ && c2_ == other.c2_;
}

std::string WeightVector::to_string() const { return linear_form().to_string(); }

WeightVector weight_of(const MultiPoly& p, const WeightAssignment& assignment) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no weight");
  const Ring& ring = p.ring();
  std::vector<WeightVector> var_weight;
  std::optional<WeightBasis> basis;
  for (const auto& name : ring->names()) {
    const auto it = assignment.find(name);
    if (it == assignment.end()) {
      var_weight.push_back(WeightVector::alpha(0, 0));
      continue;
    }
    if (basis && *basis != it->second.basis())
      throw BasisMismatchError("weight assignment mixes alpha and t bases");
    basis = it->second.basis();
    var_weight.push_back(it->second);
  }
  for (const auto& name : p.support())
    if (!assignment.count(name)) throw DomainError("no weight assigned to variable '" + name + "'");
  const WeightBasis b = basis.value_or(WeightBasis::alpha);

  std::optional<WeightVector> common;
  const Exponents* first_mono = nullptr;
  for (const auto& [e, c] : p.terms()) {
    WeightVector w(b, 0, 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) w = w + e[i] * var_weight[i].in_basis(b);
    if (!common) {
      common = w;
      first_mono = &e;
    } else if (!(*common == w)) {
      throw InhomogeneousError("monomials " + MultiPoly::monomial(ring, *first_mono).to_string() + " (weight " +
                               common->to_string() + ") and " + MultiPoly::monomial(ring, e).to_string() +
                               " (weight " + w.to_string() + ") have different weights");
    }
  }
  return *common;
}

}  // namespace g2deg
