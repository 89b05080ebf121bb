// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "g2deg/groebner.hpp"
#include "g2deg/orbits.hpp"
#include "g2deg/weights.hpp"

namespace g2deg {

/// An ideal whose generators are homogeneous for a torus grading.
class GradedIdeal {
 public:
  /// Throws InhomogeneousError if some generator is not homogeneous.
  GradedIdeal(std::vector<MultiPoly> generators, WeightAssignment grading);

  const std::vector<MultiPoly>& generators() const { return generators_; }
  const WeightAssignment& grading() const { return grading_; }
  const Ring& ring() const { return generators_.front().ring(); }

 private:
  std::vector<MultiPoly> generators_;
  WeightAssignment grading_;
};

/// Monomial ideal kept as its minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal(Ring ring, std::vector<Exponents> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Exponents>& generators() const { return generators_; }
  std::vector<std::string> generator_strings() const;

 private:
  Ring ring_;
  std::vector<Exponents> generators_;
};

MonomialIdeal initial_ideal(const std::vector<MultiPoly>& groebner_basis, const TermOrder& order);

struct MultidegreeComponent {
  std::vector<std::string> variables;  // the coordinates cutting out the subspace
  int multiplicity;
};

struct MultidegreeResult {
  MultiPoly polynomial;  // in alpha_ring()
  std::vector<MultidegreeComponent> components;
  int codimension;
};

/// Sum over top-codimension coordinate-subspace components V(S) of
/// multiplicity * product of the weights of the variables in S. The
/// multiplicity counts standard monomials of the ideal after setting the
/// variables outside S to 1.
MultidegreeResult multidegree(const MonomialIdeal& ideal, const WeightAssignment& grading);

/// Multidegree of an ideal through the initial ideal of its Groebner basis.
MultidegreeResult multidegree(const GradedIdeal& ideal, const TermOrder& order);

/// [U'] = weight of z, as a linear form in alpha_ring().
MultiPoly subspace_class();

/// Ideal of the orbit closure inside U, over tangent_ring().
std::vector<MultiPoly> orbit_closure_ideal(OrbitLabel label);

struct OracleResult {
  OrbitLabel label;
  MultiPoly alpha;  // the class, alpha basis
  std::vector<std::string> groebner_basis;
  std::vector<std::string> initial_ideal;
  std::vector<MultidegreeComponent> components;
};

/// Equivariant class of an orbit closure built from first principles:
///   O0 -> 1
///   O1 -> weight normal to U'
///   O2 -> [U'] * weight of the discriminant
///   O3 -> [U'] * multidegree of in(minor ideal) on U'
///   O5 -> product of all five coordinate weights
/// The Groebner data reported is that of the U' ideal (minors for O3, the
/// discriminant for O2), computed with `order` over cubic_ring().
OracleResult orbit_class_oracle(OrbitLabel label, const TermOrder& order);
OracleResult orbit_class_oracle(OrbitLabel label);

/// Second route: multidegree of orbit_closure_ideal(label) over all five
/// coordinates of U.
MultidegreeResult orbit_class_in_U(OrbitLabel label, const TermOrder& order);

}  // namespace g2deg
