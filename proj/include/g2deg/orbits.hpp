// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "g2deg/matrix.hpp"
#include "g2deg/poly.hpp"
#include "g2deg/triality.hpp"
#include "g2deg/weights.hpp"

namespace g2deg {

/// The cubic -c x^3 - d x^2 y + a x y^2 + b y^3 attached to (a, b, c, d).
struct BinaryCubic {
  Rational a, b, c, d;

  static BinaryCubic from_map(const TrialitySymmetricMap<Rational>& m) { return {m.a, m.b, m.c, m.d}; }
  /// Inverse of the dictionary above, from coefficients of x^3, x^2y, xy^2, y^3.
  static BinaryCubic from_monomial_coeffs(const Rational& x3, const Rational& x2y, const Rational& xy2,
                                          const Rational& y3) {
    return {xy2, y3, -x3, -x2y};
  }

  /// Coefficients of x^3, x^2 y, x y^2, y^3.
  std::array<Rational, 4> monomial_coeffs() const { return {-c, -d, a, b}; }
  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  /// The form in the ring {x, y}.
  MultiPoly form() const;
};

/// Orbits of the parabolic on U, labelled by codimension.
enum class OrbitLabel { O0, O1, O2, O3, O5 };

inline constexpr std::array<OrbitLabel, 5> kAllOrbits{OrbitLabel::O0, OrbitLabel::O1, OrbitLabel::O2,
                                                      OrbitLabel::O3, OrbitLabel::O5};

int codimension(OrbitLabel label);
std::string to_string(OrbitLabel label);
OrbitLabel parse_orbit_label(std::string_view text);

/// Multiset of root multiplicities over the algebraic closure.
enum class RootProfile { distinct, double_root, triple_root, zero };

std::string to_string(RootProfile profile);

/// Coordinate weights on U: b, a, d, c, z have weights -a2, -a1-a2,
/// -2a1-a2, -3a1-a2, -3a1-2a2.
const WeightAssignment& coordinate_weights();

/// a^2 d^2 + 4 a^3 c + 4 b d^3 - 27 b^2 c^2 + 18 a b c d
Rational discriminant(const BinaryCubic& f);
/// The same quartic over cubic_ring().
MultiPoly discriminant_poly();

/// [[a, -d, c], [b, a, d]]
RationalMatrix minor_matrix(const BinaryCubic& f);
/// 2x2 minors of the symbolic minor matrix over cubic_ring(): columns
/// (1,2), (1,3), (2,3).
std::array<MultiPoly, 3> minor_polys();

/// Classification by the defining equations: z != 0 -> O0, f = 0 -> O5,
/// minor rank 1 -> O3, then nonzero discriminant -> O1, else O2. Throws
/// DomainError if v is not triality-symmetric.
OrbitLabel classify(const TangentVector<Rational>& v);
OrbitLabel classify(const TrialitySymmetricMap<Rational>& m);

/// Root multiplicities from deg gcd(f, f_x, f_y), no root finding.
RootProfile classify_by_multiplicity(const BinaryCubic& f);

/// The orbit stratum of U' determined by a root profile.
OrbitLabel stratum_of(RootProfile profile);

/// O0 -> z = 1; O1 -> b = c = 1; O2 -> a = 1; O3 -> b = 1; O5 -> 0.
TangentVector<Rational> orbit_representative(OrbitLabel label);

namespace detail {

/// Dense univariate polynomial, coefficient of x^i at index i.
using UPoly = std::vector<Rational>;

void trim(UPoly& p);
int degree(const UPoly& p);
UPoly derivative(const UPoly& p);
UPoly remainder(UPoly num, const UPoly& den);
UPoly gcd(UPoly a, UPoly b);

}  // namespace detail

}  // namespace g2deg
