// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "g2deg/errors.hpp"
#include "g2deg/octonion.hpp"
#include "test_support.hpp"

using namespace g2deg;
using g2deg::testing::Gen;

namespace {

using O = Octonion<Rational>;

O basis(std::size_t i) { return basis_vector(i, Rational(0)); }

O random_octonion(Gen& g) {
  O u;
  for (auto& x : u.coords) x = g.rational();
  return u;
}

// Product written out from the vector/endomorphism/covector model, with
// 2x2 arrays indexed [row][col] and xi = [[a4, a3], [a6, a5]].
O oracle_product(const O& u, const O& v) {
  using M = std::array<std::array<Rational, 2>, 2>;
  auto end_of = [](const O& w) { return M{{{w[3], w[2]}, {w[5], w[4]}}}; };
  auto bar = [](const M& m) { return M{{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}; };
  auto mul = [](const M& l, const M& r) {
    M out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out[i][j] = l[i][0] * r[0][j] + l[i][1] * r[1][j];
    return out;
  };
  const std::array<Rational, 2> x{u[0], u[1]}, y{v[0], v[1]};
  const std::array<Rational, 2> f{u[7], u[6]}, g{v[7], v[6]};  // coefficients of v1*, v2*
  const M xi = end_of(u), eta = end_of(v);
  const M xib = bar(xi), etab = bar(eta);
  // g (x) x is the endomorphism w -> g(w) x, matrix x g^T.
  M gx, fy;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      gx[i][j] = x[i] * g[j];
      fy[i][j] = y[i] * f[j];
    }
  const M gxb = bar(gx);
  const M xe = mul(xi, eta);
  M end;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) end[i][j] = gxb[i][j] + xe[i][j] + fy[i][j];
  std::array<Rational, 2> e_part, cov;
  for (int i = 0; i < 2; ++i) {
    e_part[i] = eta[i][0] * x[0] + eta[i][1] * x[1] + xib[i][0] * y[0] + xib[i][1] * y[1];
    cov[i] = g[0] * xi[0][i] + g[1] * xi[1][i] + f[0] * etab[0][i] + f[1] * etab[1][i];
  }
  return O{{e_part[0], e_part[1], end[0][1], end[0][0], end[1][1], end[1][0], cov[1], cov[0]}};
}

Rational oracle_norm(const O& u) { return u[3] * u[4] - u[2] * u[5] - u[6] * u[1] - u[7] * u[0]; }

Octonion<MultiPoly> symbolic(const Ring& r, const std::string& prefix) {
  Octonion<MultiPoly> u = zero_octonion(MultiPoly(r));
  for (std::size_t i = 0; i < 8; ++i) u[i] = MultiPoly::variable(r, prefix + std::to_string(i + 1));
  return u;
}

const Ring& ring16() {
  static const Ring r = make_ring({"u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8",
                                   "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"});
  return r;
}

}  // namespace

TEST_CASE("identity element") {
  const auto u = symbolic(ring16(), "u");
  const auto e = identity_element(MultiPoly(ring16()));
  CHECK(multiply(e, u) == u);
  CHECK(multiply(u, e) == u);
  CHECK(norm(identity_element(Rational(0))) == 1);
  CHECK(identity_element(Rational(0)) == O{{0, 0, 0, 1, 1, 0, 0, 0}});
}

TEST_CASE("basis products") {
  const O zero = zero_octonion(Rational(0));
  CHECK(multiply(basis(1), basis(2)) == zero);
  CHECK(multiply(basis(1), basis(1)) == zero);
  CHECK(multiply(basis(2), basis(2)) == zero);
  CHECK(multiply(basis(1), basis(8)) == basis(5));
  CHECK_THROWS_AS(basis_vector(9, Rational(0)), DomainError);
}

TEST_CASE("multiplication agrees with the component formula") {
  for (std::size_t i = 1; i <= 8; ++i)
    for (std::size_t j = 1; j <= 8; ++j) CHECK(multiply(basis(i), basis(j)) == oracle_product(basis(i), basis(j)));
  Gen g(21);
  for (int k = 0; k < 100; ++k) {
    const O u = random_octonion(g), v = random_octonion(g);
    CHECK(multiply(u, v) == oracle_product(u, v));
    CHECK(norm(u) == oracle_norm(u));
  }
}

TEST_CASE("norm examples and multiplicativity") {
  CHECK(norm(basis(1)) == 0);
  const auto u = symbolic(ring16(), "u");
  const auto v = symbolic(ring16(), "v");
  CHECK((norm(multiply(u, v)) - norm(u) * norm(v)).is_zero());
}

TEST_CASE("bilinear form") {
  CHECK(bilinear(basis(1), basis(8)) == -1);
  CHECK(bilinear(basis(4), basis(5)) == 1);
  for (std::size_t p = 1; p <= 8; ++p)
    for (std::size_t q = 1; q <= 8; ++q) {
      // <v_p, v_{9-q}> = -delta_pq away from 4, 5; <v4, v5> = 1
      Rational expected = 0;
      if (p + q == 9) expected = (p == 4 || p == 5) ? 1 : -1;
      CHECK(bilinear(basis(p), basis(q)) == expected);
    }
  const auto u = symbolic(ring16(), "u");
  const auto v = symbolic(ring16(), "v");
  CHECK(bilinear(u, u) == norm(u) * Rational(2));
  CHECK(bilinear(u, v) == bilinear_from_gram(u, v));
  Octonion<MultiPoly> sum = u;
  for (std::size_t i = 0; i < 8; ++i) sum[i] += v[i];
  CHECK(bilinear(u, v) == norm(sum) - norm(u) - norm(v));
}

TEST_CASE("composition identity on random triples") {
  Gen g(22);
  for (int k = 0; k < 200; ++k) {
    const O u = random_octonion(g), v = random_octonion(g), w = random_octonion(g);
    CHECK(bilinear(multiply(u, w), multiply(v, w)) == bilinear(u, v) * norm(w));
  }
}

TEST_CASE("multiplication is not associative") {
  bool found = false;
  for (std::size_t i = 1; i <= 8 && !found; ++i)
    for (std::size_t j = 1; j <= 8 && !found; ++j)
      for (std::size_t k = 1; k <= 8 && !found; ++k)
        found = !(multiply(multiply(basis(i), basis(j)), basis(k)) == multiply(basis(i), multiply(basis(j), basis(k))));
  CHECK(found);
}

TEST_CASE("conjugation of the endomorphism part") {
  CHECK(conjugate_end(basis(4)) == basis(5));
  const auto e = identity_element(Rational(0));
  CHECK(conjugate_end(e) == e);
  const auto u = symbolic(ring16(), "u");
  CHECK(conjugate_end(conjugate_end(u)) == u);
}

TEST_CASE("torus action") {
  CHECK(torus_act(2, 3, basis(1)) == O{{2, 0, 0, 0, 0, 0, 0, 0}});
  CHECK(torus_act(2, 3, basis(8)) == O{{0, 0, 0, 0, 0, 0, 0, Rational(1, 2)}});
  // Characters of (2.3).
  const std::array<Rational, 8> scale{2, 3, Rational(2, 3), 1, 1, Rational(3, 2), Rational(1, 3), Rational(1, 2)};
  for (std::size_t i = 1; i <= 8; ++i) {
    O expected = zero_octonion(Rational(0));
    expected[i - 1] = scale[i - 1];
    CHECK(torus_act(2, 3, basis(i)) == expected);
    const auto ch = kTorusCharacters[i - 1];
    CHECK(pow(Rational(2), ch.n1) * pow(Rational(3), ch.n2) == scale[i - 1]);
  }
  const auto u = symbolic(ring16(), "u");
  const auto v = symbolic(ring16(), "v");
  CHECK(multiply(torus_act(2, 3, u), torus_act(2, 3, v)) == torus_act(2, 3, multiply(u, v)));
  CHECK_THROWS_AS(torus_act(0, 3, basis(1)), DomainError);
  CHECK_THROWS_AS(torus_act(2, 0, basis(1)), DomainError);
  O w = basis(4);
  w[4] = -1;
  CHECK(in_V(torus_act(5, Rational(-1, 7), w)));
}

TEST_CASE("G2-isotropy") {
  CHECK(is_g2_isotropic(basis(1), basis(2)));
  CHECK_FALSE(is_g2_isotropic(basis(1), basis(8)));
  CHECK_FALSE(is_g2_isotropic(identity_element(Rational(0)), basis(1)));
}
