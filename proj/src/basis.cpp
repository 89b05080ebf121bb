// SPDX-License-Identifier: Apache-2.0
#include "g2deg/basis.hpp"

#include <algorithm>

#include "g2deg/errors.hpp"
#include "g2deg/rings.hpp"

namespace g2deg {

namespace {

void require_vars(const MultiPoly& p, const Ring& allowed, const char* what) {
  for (const auto& name : p.support())
    if (!allowed->index_of(name))
      throw BasisMismatchError("variable '" + name + "' is not a " + what + " variable");
}

}  // namespace

MultiPoly change_basis(const MultiPoly& p, BasisDirection direction) {
  if (direction == BasisDirection::alpha_to_t) {
    require_vars(p, alpha_ring(), "alpha-basis");
    const MultiPoly t1 = MultiPoly::variable(t_ring(), "t1");
    const MultiPoly t2 = MultiPoly::variable(t_ring(), "t2");
    const MultiPoly two = MultiPoly::constant(t_ring(), 2);
    return substitute(p, {{"a1", t1 - t2}, {"a2", two * t2 - t1}}, t_ring());
  }
  require_vars(p, t_ring(), "t-basis");
  const MultiPoly a1 = MultiPoly::variable(alpha_ring(), "a1");
  const MultiPoly a2 = MultiPoly::variable(alpha_ring(), "a2");
  const MultiPoly two = MultiPoly::constant(alpha_ring(), 2);
  return substitute(p, {{"t1", two * a1 + a2}, {"t2", a1 + a2}}, alpha_ring());
}

MultiPoly from_chern(const MultiPoly& q) {
  require_vars(q, chern_ring(), "Chern-class");
  const MultiPoly x1 = MultiPoly::variable(root_ring(), "x1");
  const MultiPoly x2 = MultiPoly::variable(root_ring(), "x2");
  return substitute(q, {{"c1", x1 + x2}, {"c2", x1 * x2}}, root_ring());
}

MultiPoly to_chern(const MultiPoly& p) {
  require_vars(p, root_ring(), "Chern-root");
  const MultiPoly x = embed_in(p, root_ring());
  const MultiPoly swapped = substitute(x,
                                       {{"x1", MultiPoly::variable(root_ring(), "x2")},
                                        {"x2", MultiPoly::variable(root_ring(), "x1")}},
                                       root_ring());
  if (!(swapped == x)) throw SymmetryError("polynomial is not symmetric in x1, x2: " + x.to_string());

  const MultiPoly e1 = MultiPoly::variable(root_ring(), "x1") + MultiPoly::variable(root_ring(), "x2");
  const MultiPoly e2 = MultiPoly::variable(root_ring(), "x1") * MultiPoly::variable(root_ring(), "x2");
  MultiPoly rest = x;
  MultiPoly out(chern_ring());
  while (!rest.is_zero()) {
    // Lex-leading term (largest x1 exponent, then x2); symmetry forces i >= j.
    const auto lead = std::max_element(rest.terms().begin(), rest.terms().end(),
                                       [](const auto& l, const auto& r) { return l.first < r.first; });
    const int i = lead->first[0];
    const int j = lead->first[1];
    const Rational coeff = lead->second;
    // chern_ring order is (c2, c1)
    out.add_term({j, i - j}, coeff);
    rest -= coeff * (e1.pow(static_cast<unsigned>(i - j)) * e2.pow(static_cast<unsigned>(j)));
  }
  return out;
}

}  // namespace g2deg
