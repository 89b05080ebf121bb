// SPDX-License-Identifier: Apache-2.0
#include "g2deg/orbits.hpp"

#include <algorithm>

#include "g2deg/errors.hpp"
#include "g2deg/rings.hpp"

namespace g2deg {

MultiPoly BinaryCubic::form() const {
  static const Ring xy = make_ring({"x", "y"});
  const auto k = monomial_coeffs();
  MultiPoly p(xy);
  for (int i = 0; i < 4; ++i) p.add_term({3 - i, i}, k[static_cast<std::size_t>(i)]);
  return p;
}

int codimension(OrbitLabel label) {
  switch (label) {
    case OrbitLabel::O0: return 0;
    case OrbitLabel::O1: return 1;
    case OrbitLabel::O2: return 2;
    case OrbitLabel::O3: return 3;
    case OrbitLabel::O5: return 5;
  }
  return -1;
}

std::string to_string(OrbitLabel label) { return "O" + std::to_string(codimension(label)); }

OrbitLabel parse_orbit_label(std::string_view text) {
  for (auto l : kAllOrbits)
    if (text == to_string(l)) return l;
  throw ParseError("unknown orbit label '" + std::string(text) + "'");
}

std::string to_string(RootProfile profile) {
  switch (profile) {
    case RootProfile::distinct: return "(1,1,1)";
    case RootProfile::double_root: return "(2,1)";
    case RootProfile::triple_root: return "(3)";
    case RootProfile::zero: return "zero";
  }
  return "?";
}

const WeightAssignment& coordinate_weights() {
  static const WeightAssignment w{{"b", WeightVector::alpha(0, -1)},
                                  {"a", WeightVector::alpha(-1, -1)},
                                  {"d", WeightVector::alpha(-2, -1)},
                                  {"c", WeightVector::alpha(-3, -1)},
                                  {"z", WeightVector::alpha(-3, -2)}};
  return w;
}

Rational discriminant(const BinaryCubic& f) {
  const Rational& a = f.a;
  const Rational& b = f.b;
  const Rational& c = f.c;
  const Rational& d = f.d;
  return a * a * d * d + 4 * a * a * a * c + 4 * b * d * d * d - 27 * b * b * c * c + 18 * a * b * c * d;
}

MultiPoly discriminant_poly() {
  return parse_poly("a^2*d^2 + 4*a^3*c + 4*b*d^3 - 27*b^2*c^2 + 18*a*b*c*d", cubic_ring());
}

RationalMatrix minor_matrix(const BinaryCubic& f) {
  RationalMatrix m(2, 3);
  m.at(0, 0) = f.a;
  m.at(0, 1) = -f.d;
  m.at(0, 2) = f.c;
  m.at(1, 0) = f.b;
  m.at(1, 1) = f.a;
  m.at(1, 2) = f.d;
  return m;
}

std::array<MultiPoly, 3> minor_polys() {
  const Ring& r = cubic_ring();
  const MultiPoly a = MultiPoly::variable(r, "a");
  const MultiPoly b = MultiPoly::variable(r, "b");
  const MultiPoly c = MultiPoly::variable(r, "c");
  const MultiPoly d = MultiPoly::variable(r, "d");
  const std::array<std::array<MultiPoly, 3>, 2> m{{{a, -d, c}, {b, a, d}}};
  auto minor = [&](std::size_t i, std::size_t j) { return m[0][i] * m[1][j] - m[0][j] * m[1][i]; };
  return {minor(0, 1), minor(0, 2), minor(1, 2)};
}

OrbitLabel classify(const TrialitySymmetricMap<Rational>& m) {
  if (m.z != 0) return OrbitLabel::O0;
  const BinaryCubic f = BinaryCubic::from_map(m);
  if (f.is_zero()) return OrbitLabel::O5;
  // Minor rank first: the quartic does not vanish on every rank-one point,
  // e.g. (a, b, c, d) = (1, 1, -1, -1) has rank one and discriminant -16.
  if (matrix_rank(minor_matrix(f)) <= 1) return OrbitLabel::O3;
  return discriminant(f) != 0 ? OrbitLabel::O1 : OrbitLabel::O2;
}

OrbitLabel classify(const TangentVector<Rational>& v) {
  const auto m = is_triality_symmetric(v);
  if (!m) throw DomainError("tangent vector is not triality-symmetric");
  return classify(*m);
}

namespace detail {

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

UPoly remainder(UPoly num, const UPoly& den) {
  trim(num);
  if (den.empty()) throw DomainError("division by the zero polynomial");
  const Rational lead = den.back();
  while (num.size() >= den.size()) {
    const Rational q = num.back() / lead;
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
    num.pop_back();
    trim(num);
  }
  return num;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

}  // namespace detail

namespace {

/// A binary form of degree n given by coefficients of x^n, x^{n-1}y, ..., y^n.
struct BinaryForm {
  std::vector<Rational> coeffs;

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; });
  }
  /// F(x, 1) as a dense univariate polynomial in x.
  detail::UPoly dehomogenized() const {
    const std::size_t n = coeffs.size() - 1;
    detail::UPoly p(n + 1);
    for (std::size_t i = 0; i <= n; ++i) p[n - i] = coeffs[i];
    detail::trim(p);
    return p;
  }
  /// Largest k with y^k dividing F, i.e. the multiplicity of the root [1:0].
  int y_order() const {
    const int n = static_cast<int>(coeffs.size()) - 1;
    return n - detail::degree(dehomogenized());
  }
  BinaryForm d_dx() const {
    const std::size_t n = coeffs.size() - 1;
    BinaryForm out;
    for (std::size_t i = 0; i < n; ++i) out.coeffs.push_back(coeffs[i] * static_cast<long>(n - i));
    return out;
  }
  BinaryForm d_dy() const {
    const std::size_t n = coeffs.size() - 1;
    BinaryForm out;
    for (std::size_t i = 1; i <= n; ++i) out.coeffs.push_back(coeffs[i] * static_cast<long>(i));
    return out;
  }
};

/// Degree of the homogeneous gcd of nonzero binary forms: the gcd of the
/// dehomogenizations accounts for finite roots, the least y-order for the
/// root at infinity.
int homogeneous_gcd_degree(const std::vector<BinaryForm>& forms) {
  detail::UPoly g;
  int y_order = -1;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    g = detail::gcd(g, f.dehomogenized());
    y_order = y_order < 0 ? f.y_order() : std::min(y_order, f.y_order());
  }
  if (y_order < 0) throw DomainError("gcd of zero forms");
  return detail::degree(g) + y_order;
}

}  // namespace

RootProfile classify_by_multiplicity(const BinaryCubic& f) {
  if (f.is_zero()) return RootProfile::zero;
  const auto k = f.monomial_coeffs();
  const BinaryForm F{{k[0], k[1], k[2], k[3]}};
  switch (homogeneous_gcd_degree({F, F.d_dx(), F.d_dy()})) {
    case 0: return RootProfile::distinct;
    case 1: return RootProfile::double_root;
    case 2: return RootProfile::triple_root;
    default: throw DomainError("unexpected gcd degree for a nonzero cubic");
  }
}

OrbitLabel stratum_of(RootProfile profile) {
  switch (profile) {
    case RootProfile::distinct: return OrbitLabel::O1;
    case RootProfile::double_root: return OrbitLabel::O2;
    case RootProfile::triple_root: return OrbitLabel::O3;
    case RootProfile::zero: return OrbitLabel::O5;
  }
  return OrbitLabel::O5;
}

TangentVector<Rational> orbit_representative(OrbitLabel label) {
  TrialitySymmetricMap<Rational> m{0, 0, 0, 0, 0};
  switch (label) {
    case OrbitLabel::O0: m.z = 1; break;
    case OrbitLabel::O1: m.c = 1; m.b = 1; break;
    case OrbitLabel::O2: m.a = 1; break;
    case OrbitLabel::O3: m.b = 1; break;
    case OrbitLabel::O5: break;
  }
  return embed(m);
}

}  // namespace g2deg
