// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "g2deg/errors.hpp"
#include "g2deg/scalar.hpp"

namespace g2deg {

/// Element of C = E + End(E) + E* in the basis v1..v8:
///
///   v1, v2        basis of E
///   v3 = v2*(x)v1, v4 = v1*(x)v1, v5 = v2*(x)v2, v6 = v1*(x)v2
///   v7 = v2*,     v8 = v1*
///
/// so coordinates (a1..a8) give x = (a1, a2), the endomorphism
/// [[a4, a3], [a6, a5]] acting on columns, and the functional a8 v1* + a7 v2*.
/// The identity is e = v4 + v5.
template <class S>
struct Octonion {
  std::array<S, 8> coords;

  S& operator[](std::size_t i) { return coords[i]; }
  const S& operator[](std::size_t i) const { return coords[i]; }

  bool operator==(const Octonion&) const = default;
};

/// Exponents (n1, n2) of the torus character z1^n1 z2^n2.
struct TorusCharacter {
  int n1;
  int n2;
  bool operator==(const TorusCharacter&) const = default;
};

/// Characters by which the maximal torus scales v1..v8.
inline constexpr std::array<TorusCharacter, 8> kTorusCharacters{{
    {1, 0}, {0, 1}, {1, -1}, {0, 0}, {0, 0}, {-1, 1}, {0, -1}, {-1, 0}}};

namespace detail {

template <class S>
struct Mat2 {
  S m11, m12, m21, m22;

  S trace() const { return m11 + m22; }
  S det() const { return m11 * m22 - m12 * m21; }
  /// Tr(m) e - m
  Mat2 conj() const { return {m22, -m12, -m21, m11}; }

  Mat2 operator*(const Mat2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22, m21 * o.m11 + m22 * o.m21,
            m21 * o.m12 + m22 * o.m22};
  }
  Mat2 operator+(const Mat2& o) const { return {m11 + o.m11, m12 + o.m12, m21 + o.m21, m22 + o.m22}; }
};

template <class S>
struct Parts {
  S x1, x2;     // E (column vector)
  Mat2<S> xi;   // End(E)
  S f1, f2;     // E* (row vector, f1 = coefficient of v1*)
};

template <class S>
Parts<S> split(const Octonion<S>& u) {
  return {u[0], u[1], {u[3], u[2], u[5], u[4]}, u[7], u[6]};
}

template <class S>
Octonion<S> join(S x1, S x2, const Mat2<S>& m, S f1, S f2) {
  return {{std::move(x1), std::move(x2), m.m12, m.m11, m.m22, m.m21, std::move(f2), std::move(f1)}};
}

}  // namespace detail

template <class S>
Octonion<S> zero_octonion(const S& like) {
  const S z = zero_like(like);
  return {{z, z, z, z, z, z, z, z}};
}

/// v_{index}, index in 1..8.
template <class S>
Octonion<S> basis_vector(std::size_t index, const S& like) {
  if (index < 1 || index > 8) throw DomainError("basis index must be in 1..8");
  Octonion<S> u = zero_octonion(like);
  u[index - 1] = one_like(like);
  return u;
}

template <class S>
Octonion<S> identity_element(const S& like) {
  Octonion<S> u = zero_octonion(like);
  u[3] = one_like(like);
  u[4] = one_like(like);
  return u;
}

/// (x + xi + f)(y + eta + g) = (eta x + conj(xi) y) + (conj(g(x)x) + xi eta + f(x)y) + (g xi + f conj(eta)),
/// where g(x)x denotes the endomorphism w -> g(w) x.
template <class S>
Octonion<S> multiply(const Octonion<S>& u, const Octonion<S>& v) {
  const auto p = detail::split(u);
  const auto q = detail::split(v);
  const auto xi_bar = p.xi.conj();
  const auto eta_bar = q.xi.conj();

  S e1 = q.xi.m11 * p.x1 + q.xi.m12 * p.x2 + xi_bar.m11 * q.x1 + xi_bar.m12 * q.x2;
  S e2 = q.xi.m21 * p.x1 + q.xi.m22 * p.x2 + xi_bar.m21 * q.x1 + xi_bar.m22 * q.x2;

  const detail::Mat2<S> gx{p.x1 * q.f1, p.x1 * q.f2, p.x2 * q.f1, p.x2 * q.f2};
  const detail::Mat2<S> fy{q.x1 * p.f1, q.x1 * p.f2, q.x2 * p.f1, q.x2 * p.f2};
  const detail::Mat2<S> end = gx.conj() + p.xi * q.xi + fy;

  S h1 = q.f1 * p.xi.m11 + q.f2 * p.xi.m21 + p.f1 * eta_bar.m11 + p.f2 * eta_bar.m21;
  S h2 = q.f1 * p.xi.m12 + q.f2 * p.xi.m22 + p.f1 * eta_bar.m12 + p.f2 * eta_bar.m22;

  return detail::join(std::move(e1), std::move(e2), end, std::move(h1), std::move(h2));
}

/// N(x + xi + f) = det(xi) - f(x)
template <class S>
S norm(const Octonion<S>& u) {
  const auto p = detail::split(u);
  return p.xi.det() - (p.f1 * p.x1 + p.f2 * p.x2);
}

/// <x + xi + f, y + eta + g> = Tr(xi)Tr(eta) - Tr(xi eta) - f(y) - g(x)
template <class S>
S bilinear(const Octonion<S>& u, const Octonion<S>& v) {
  const auto p = detail::split(u);
  const auto q = detail::split(v);
  return p.xi.trace() * q.xi.trace() - (p.xi * q.xi).trace() - (p.f1 * q.x1 + p.f2 * q.x2) -
         (q.f1 * p.x1 + q.f2 * p.x2);
}

/// Gram matrix entry <v_p, v_q> of the basis, p, q in 1..8.
inline int gram_entry(std::size_t p, std::size_t q) {
  if ((p == 4 && q == 5) || (p == 5 && q == 4)) return 1;
  if (p == 4 || p == 5 || q == 4 || q == 5) return 0;
  return p + q == 9 ? -1 : 0;
}

/// The same form evaluated through the basis Gram matrix instead of the
/// trace formula.
template <class S>
S bilinear_from_gram(const Octonion<S>& u, const Octonion<S>& v) {
  S sum = zero_like(u[0]);
  for (std::size_t p = 1; p <= 8; ++p)
    for (std::size_t q = 1; q <= 8; ++q)
      if (const int g = gram_entry(p, q); g != 0) sum += scaled(u[p - 1] * v[q - 1], Rational(g));
  return sum;
}

/// Conjugation xi -> Tr(xi) e - xi on the End(E) part; the E and E* parts
/// are left untouched.
template <class S>
Octonion<S> conjugate_end(const Octonion<S>& u) {
  Octonion<S> out = u;
  out[2] = -u[2];
  out[3] = u[4];
  out[4] = u[3];
  out[5] = -u[5];
  return out;
}

/// Membership in V = e^perp, i.e. a4 + a5 = 0.
template <class S>
bool in_V(const Octonion<S>& u) {
  return is_zero(u[3] + u[4]);
}

/// Scales coordinate i by z1^n1 z2^n2 for the i-th basis character.
template <class S>
Octonion<S> torus_act(const Rational& z1, const Rational& z2, const Octonion<S>& u) {
  if (z1 == 0 || z2 == 0) throw DomainError("torus parameters must be nonzero");
  Octonion<S> out = u;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto [n1, n2] = kTorusCharacters[i];
    out[i] = scaled(u[i], pow(z1, n1) * pow(z2, n2));
  }
  return out;
}

/// True iff u, v lie in V and all four products uu, uv, vu, vv vanish.
template <class S>
bool is_g2_isotropic(const Octonion<S>& u, const Octonion<S>& v) {
  if (!in_V(u) || !in_V(v)) return false;
  for (const auto* l : {&u, &v})
    for (const auto* r : {&u, &v}) {
      const auto prod = multiply(*l, *r);
      for (const auto& c : prod.coords)
        if (!is_zero(c)) return false;
    }
  return true;
}

}  // namespace g2deg
