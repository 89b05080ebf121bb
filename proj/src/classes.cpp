// SPDX-License-Identifier: Apache-2.0
#include "g2deg/classes.hpp"

#include "g2deg/errors.hpp"
#include "g2deg/rings.hpp"

namespace g2deg {

namespace {

void require_rank(int r) {
  if (r < 0 || r > 2) throw DomainError("locus rank must be 0, 1 or 2");
}

}  // namespace

MultiPoly orbit_class(OrbitLabel label, WeightBasis basis) {
  const char* alpha = "1";
  const char* t = "1";
  switch (label) {
    case OrbitLabel::O0:
      break;
    case OrbitLabel::O1:
      alpha = "-3*a1 - 2*a2";
      t = "-t1 - t2";
      break;
    case OrbitLabel::O2:
      alpha = "2*(-3*a1 - 2*a2)^2";
      t = "2*(t1 + t2)^2";
      break;
    case OrbitLabel::O3:
      alpha = "-3*(a1 + a2)*(2*a1 + a2)*(3*a1 + 2*a2)";
      t = "-3*t1*t2*(t1 + t2)";
      break;
    case OrbitLabel::O5:
      alpha = "-a2*(a1 + a2)*(2*a1 + a2)*(3*a1 + a2)*(3*a1 + 2*a2)";
      t = "t1*t2*(t1 + t2)*(2*t1 - t2)*(t1 - 2*t2)";
      break;
  }
  return basis == WeightBasis::alpha ? parse_poly(alpha, alpha_ring()) : parse_poly(t, t_ring());
}

LocusClass locus_class(int r) {
  require_rank(r);
  switch (r) {
    case 2:
      return {2, 0, parse_poly("1", root_ring()), parse_poly("1", chern_ring())};
    case 1:
      return {1, 3, parse_poly("3*x1*x2*(x1 + x2)", root_ring()), parse_poly("3*c2*c1", chern_ring())};
    default:
      return {0, 5, parse_poly("x1*x2*(x1 + x2)*(2*x1 - x2)*(-x1 + 2*x2)", root_ring()),
              parse_poly("c2*c1*(9*c2 - 2*c1^2)", chern_ring())};
  }
}

OrbitLabel orbit_for_locus(int r) {
  require_rank(r);
  return r == 2 ? OrbitLabel::O0 : r == 1 ? OrbitLabel::O3 : OrbitLabel::O5;
}

MultiPoly locus_from_orbit(int r) {
  const MultiPoly x1 = MultiPoly::variable(root_ring(), "x1");
  const MultiPoly x2 = MultiPoly::variable(root_ring(), "x2");
  return substitute(orbit_class(orbit_for_locus(r), WeightBasis::t), {{"t1", -x1}, {"t2", -x2}}, root_ring());
}

Rational evaluate_locus(int r, const Rational& c1, const Rational& c2) {
  const LocusClass lc = locus_class(r);
  // chern_ring is ordered (c2, c1)
  const Rational point[2] = {c2, c1};
  return lc.chern_form.evaluate(point);
}

}  // namespace g2deg
