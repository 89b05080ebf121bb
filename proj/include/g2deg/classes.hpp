// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "g2deg/orbits.hpp"
#include "g2deg/poly.hpp"
#include "g2deg/weights.hpp"

namespace g2deg {

/// Closed-form equivariant class of an orbit closure, in {a1, a2} or
/// {t1, t2}. These are stored expressions, not derived from the oracle.
MultiPoly orbit_class(OrbitLabel label, WeightBasis basis);

/// Degeneracy-locus polynomial for rank <= r, in Chern roots x1, x2 of E*
/// and in Chern classes c1, c2 of E*.
struct LocusClass {
  int r;
  int expected_codim;
  MultiPoly root_form;
  MultiPoly chern_form;
};

LocusClass locus_class(int r);

/// Orbit whose closure pulls back to the rank <= r locus: O0, O3, O5 for
/// r = 2, 1, 0.
OrbitLabel orbit_for_locus(int r);

/// Pulls the t-basis orbit class back along t_i -> -x_i.
MultiPoly locus_from_orbit(int r);

/// P_r evaluated at the given Chern classes of E*. Callers holding Chern
/// classes of E must pass (-c1(E), c2(E)).
Rational evaluate_locus(int r, const Rational& c1, const Rational& c2);

}  // namespace g2deg
