// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2deg/matrix.hpp"
#include "g2deg/octonion.hpp"

namespace g2deg {

/// A point of U = Hom(E, End(E)) + wedge^2 E*. As a 2x6 matrix:
///
///   ( b1 a1 d1 c1  z  0 )
///   ( b2 a2 d2 c2  0 -z )
///
/// Row k lists phi(v_k) in the coordinates v3..v8.
template <class S>
struct TangentVector {
  S b1, a1, d1, c1, b2, a2, d2, c2, z;

  bool operator==(const TangentVector&) const = default;

  std::array<std::array<S, 6>, 2> matrix() const {
    const S zero = zero_like(z);
    return {{{b1, a1, d1, c1, z, zero}, {b2, a2, d2, c2, zero, -z}}};
  }

  /// Coordinates in the order b1, a1, d1, c1, b2, a2, d2, c2, z.
  std::array<S, 9> coords() const { return {b1, a1, d1, c1, b2, a2, d2, c2, z}; }
  static TangentVector from_coords(const std::array<S, 9>& c) {
    return {c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7], c[8]};
  }
};

/// Triality-symmetric map, embedded as rows (a, -d, d, c, z, 0) and
/// (b, a, -a, d, 0, -z).
template <class S>
struct TrialitySymmetricMap {
  S a, b, c, d, z;

  bool operator==(const TrialitySymmetricMap&) const = default;
};

template <class S>
TangentVector<S> embed(const TrialitySymmetricMap<S>& m) {
  return {m.a, -m.d, m.d, m.c, m.b, m.a, -m.a, m.d, m.z};
}

/// Returns (a, b, c, d, z) = (a2, b2, c1, d1, z) when v has the symmetric
/// shape b1 = a2, a1 = -d1, d2 = -a2, c2 = d1.
template <class S>
std::optional<TrialitySymmetricMap<S>> is_triality_symmetric(const TangentVector<S>& v) {
  if (!is_zero(v.b1 - v.a2) || !is_zero(v.a1 + v.d1) || !is_zero(v.d2 + v.a2) || !is_zero(v.c2 - v.d1))
    return std::nullopt;
  return TrialitySymmetricMap<S>{v.a2, v.b2, v.c1, v.d1, v.z};
}

enum class S3Gen { tau, sigma };
using S3Word = std::vector<S3Gen>;

/// Parses a word such as "tau sigma tau", "t s t" or "tst" (t = tau,
/// s = sigma); empty or "id" is the identity.
S3Word parse_s3_word(std::string_view text);
std::string to_string(const S3Word& word);

template <class S>
TangentVector<S> apply_generator(S3Gen g, const TangentVector<S>& v) {
  if (g == S3Gen::tau) return {-v.d2, -v.c2, -v.a1, v.c1, v.b2, v.b1, -v.a2, v.d1, v.z};
  return {v.a2, v.a1, v.c2, v.c1, v.b2, v.b1, v.d2, v.d1, v.z};
}

/// Applies the word right to left: the last generator acts first.
template <class S>
TangentVector<S> s3_act(const S3Word& word, TangentVector<S> v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_generator(*it, v);
  return v;
}

/// The action of a word as a 9x9 matrix on the coordinates of
/// TangentVector::coords().
RationalMatrix s3_matrix(const S3Word& word);

/// Two spanning rows of the open-cell subspace attached to a symmetric map,
/// plus the scalars
///   X = -ac - d^2,  Y = z + ad - bc,  Z = -a^2 - bd.
/// The span is the graph of the map exactly when X = Z = 0 and Y = z.
template <class S>
struct IsotropicFrame {
  std::array<Octonion<S>, 2> rows;
  S X, Y, Z;
  bool is_graph;

  /// X, Z and Y - z: the polynomials whose vanishing makes the span a graph.
  std::array<S, 3> graph_conditions(const S& z) const { return {X, Z, Y - z}; }
};

template <class S>
IsotropicFrame<S> graph_frame(const TrialitySymmetricMap<S>& m) {
  const S& a = m.a;
  const S& b = m.b;
  const S& c = m.c;
  const S& d = m.d;
  const S one = one_like(a);
  const S zero = zero_like(a);
  S X = -(a * c) - d * d;
  S Y = m.z + a * d - b * c;
  S Z = -(a * a) - b * d;
  Octonion<S> r1{{one, zero, a, -d, d, c, m.z, -X}};
  Octonion<S> r2{{zero, one, b, a, -a, d, -Z, -Y}};
  const bool graph = is_zero(X) && is_zero(Z) && is_zero(Y - m.z);
  return {{std::move(r1), std::move(r2)}, std::move(X), std::move(Y), std::move(Z), graph};
}

/// Rows v_k + phi(v_k) of the graph of phi inside C.
template <class S>
std::array<Octonion<S>, 2> graph_rows(const TangentVector<S>& v) {
  const S one = one_like(v.z);
  const S zero = zero_like(v.z);
  const auto m = v.matrix();
  return {Octonion<S>{{one, zero, m[0][0], m[0][1], m[0][2], m[0][3], m[0][4], m[0][5]}},
          Octonion<S>{{zero, one, m[1][0], m[1][1], m[1][2], m[1][3], m[1][4], m[1][5]}}};
}

/// Rank of the 2x6 matrix of phi.
int morphism_rank(const TangentVector<Rational>& v);
/// Accepts polynomial entries only when every entry is a constant; throws
/// UnsupportedInputError otherwise.
int morphism_rank(const TangentVector<MultiPoly>& v);

/// Generic element of U with polynomial coordinates named after the fields,
/// in a ring of exactly those nine variables.
TangentVector<MultiPoly> generic_tangent_vector();
/// Generic symmetric map over tangent_ring() (a, b, c, d, z).
TrialitySymmetricMap<MultiPoly> generic_symmetric_map();

}  // namespace g2deg
