// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "g2deg/errors.hpp"
#include "g2deg/orbits.hpp"
#include "g2deg/rings.hpp"
#include "g2deg/sweep.hpp"
#include "test_support.hpp"

using namespace g2deg;
using g2deg::testing::Gen;

namespace {

using SM = TrialitySymmetricMap<Rational>;
using Linear = std::array<Rational, 2>;  // p x + q y

BinaryCubic from_factors(const Linear& l1, const Linear& l2, const Linear& l3) {
  const Rational s0 = l1[0] * l2[0], s1 = l1[0] * l2[1] + l1[1] * l2[0], s2 = l1[1] * l2[1];
  return BinaryCubic::from_monomial_coeffs(s0 * l3[0], s0 * l3[1] + s1 * l3[0], s1 * l3[1] + s2 * l3[0], s2 * l3[1]);
}

// Discriminant of a product of linear forms: prod over pairs of the squared
// 2x2 determinants.
Rational disc_from_factors(const std::array<Linear, 3>& l) {
  Rational d = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Rational det = l[i][0] * l[j][1] - l[i][1] * l[j][0];
      d *= det * det;
    }
  return d;
}

Linear random_linear(Gen& g) {
  for (;;) {
    Linear l{g.rational(), g.rational()};
    if (l[0] != 0 || l[1] != 0) return l;
  }
}

TangentVector<Rational> tv(const SM& m) { return embed(m); }

}  // namespace

TEST_CASE("cubic dictionary") {
  const BinaryCubic f{1, 2, 3, 4};
  CHECK(f.form() == parse_poly("-3*x^3 - 4*x^2*y + x*y^2 + 2*y^3", f.form().ring()));
  const auto k = f.monomial_coeffs();
  CHECK(BinaryCubic::from_monomial_coeffs(k[0], k[1], k[2], k[3]).a == 1);
  CHECK(BinaryCubic::from_monomial_coeffs(k[0], k[1], k[2], k[3]).d == 4);
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant({1, 0, 0, 0}) == 0);
  CHECK(discriminant({1, 0, 0, -1}) == 1);
  CHECK(discriminant_poly() == parse_poly("a^2*d^2 + 4*a^3*c + 4*b*d^3 - 27*b^2*c^2 + 18*a*b*c*d", cubic_ring()));
}

TEST_CASE("discriminant agrees with the product over pairs of factors") {
  Gen g(41);
  for (int i = 0; i < 300; ++i) {
    std::array<Linear, 3> l{random_linear(g), random_linear(g), random_linear(g)};
    if (i % 3 == 0) l[1] = l[0];
    const BinaryCubic f = from_factors(l[0], l[1], l[2]);
    CHECK(discriminant(f) == disc_from_factors(l));
    const std::array<Rational, 4> pt{f.a, f.b, f.c, f.d};
    CHECK(discriminant_poly().evaluate(pt) == discriminant(f));
  }
}

TEST_CASE("minor matrix") {
  CHECK(minor_matrix({0, 0, -1, 0}) == RationalMatrix{{0, 0, -1}, {0, 0, 0}});
  CHECK(matrix_rank(minor_matrix({0, 0, -1, 0})) == 1);
  CHECK(minor_matrix({1, 0, 0, 0}) == RationalMatrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(matrix_rank(minor_matrix({1, 0, 0, 0})) == 2);
  CHECK(matrix_rank(minor_matrix({0, 0, 0, 0})) == 0);
  const auto m = minor_polys();
  const Ring& r = cubic_ring();
  for (const char* q : {"a^2 + b*d", "a*d - b*c", "d^2 + a*c"}) {
    const MultiPoly p = parse_poly(q, r);
    CHECK(std::any_of(m.begin(), m.end(), [&](const MultiPoly& x) { return x == p || x == -p; }));
  }
}

TEST_CASE("classify examples") {
  CHECK(classify(tv({0, 0, 0, 0, 1})) == OrbitLabel::O0);
  CHECK(classify(tv({1, 0, 0, 0, 0})) == OrbitLabel::O2);
  CHECK(classify(tv({0, 0, -1, 0, 0})) == OrbitLabel::O3);
  CHECK(classify(tv({0, 0, 0, 0, 0})) == OrbitLabel::O5);
  CHECK(classify(tv({1, 0, 0, -1, 0})) == OrbitLabel::O1);
  CHECK_THROWS_AS(classify(TangentVector<Rational>::from_coords({1, 0, 0, 0, 0, 0, 0, 0, 0})), DomainError);
}

TEST_CASE("classify_by_multiplicity examples") {
  CHECK(classify_by_multiplicity(BinaryCubic::from_monomial_coeffs(0, 1, 1, 0)) == RootProfile::distinct);  // xy(x+y)
  CHECK(classify_by_multiplicity({1, 0, 0, 0}) == RootProfile::double_root);                                // xy^2
  CHECK(classify_by_multiplicity({0, 0, -1, 0}) == RootProfile::triple_root);                               // x^3
  CHECK(classify_by_multiplicity({0, 0, 0, 0}) == RootProfile::zero);
  CHECK(to_string(RootProfile::distinct) == "(1,1,1)");
  CHECK(to_string(RootProfile::double_root) == "(2,1)");
  CHECK(to_string(RootProfile::triple_root) == "(3)");
}

TEST_CASE("root multiplicities of constructed products") {
  Gen g(42);
  for (int i = 0; i < 300; ++i) {
    const Linear l1 = random_linear(g), l2 = random_linear(g), l3 = random_linear(g);
    auto indep = [](const Linear& u, const Linear& v) { return u[0] * v[1] - u[1] * v[0] != 0; };
    CHECK(classify_by_multiplicity(from_factors(l1, l1, l1)) == RootProfile::triple_root);
    if (indep(l1, l2)) CHECK(classify_by_multiplicity(from_factors(l1, l1, l2)) == RootProfile::double_root);
    if (indep(l1, l2) && indep(l1, l3) && indep(l2, l3))
      CHECK(classify_by_multiplicity(from_factors(l1, l2, l3)) == RootProfile::distinct);
  }
  // irreducible over Q: x^3 - 2 y^3, and x^3 + x y^2 + y^3
  CHECK(classify_by_multiplicity(BinaryCubic::from_monomial_coeffs(1, 0, 0, -2)) == RootProfile::distinct);
  CHECK(classify_by_multiplicity(BinaryCubic::from_monomial_coeffs(1, 0, 1, 1)) == RootProfile::distinct);
}

TEST_CASE("orbit representatives") {
  CHECK(orbit_representative(OrbitLabel::O3) == tv({0, 1, 0, 0, 0}));
  CHECK(orbit_representative(OrbitLabel::O2) == tv({1, 0, 0, 0, 0}));
  CHECK(orbit_representative(OrbitLabel::O1) == tv({0, 1, 1, 0, 0}));
  CHECK(orbit_representative(OrbitLabel::O0) == tv({0, 0, 0, 0, 1}));
  for (OrbitLabel l : kAllOrbits) CHECK(classify(orbit_representative(l)) == l);
  CHECK(classify_by_multiplicity({0, 1, 0, 0}) == RootProfile::triple_root);
}

TEST_CASE("labels") {
  CHECK(codimension(OrbitLabel::O5) == 5);
  CHECK(parse_orbit_label("O3") == OrbitLabel::O3);
  CHECK_THROWS_AS(parse_orbit_label("O4"), ParseError);
}

TEST_CASE("rank correspondence on seeded samples") {
  const auto samples = draw_symmetric_samples(1000, 0);
  const auto summary = summarize(samples, sweep_serial(samples));
  CHECK(summary.z_zero_samples == 1000);
  CHECK(summary.rank_violations == 0);
  for (OrbitLabel l : {OrbitLabel::O1, OrbitLabel::O2, OrbitLabel::O3, OrbitLabel::O5})
    CHECK(summary.orbit_counts.count(l) == 1);
}

TEST_CASE("nonzero discriminant <=> three distinct roots") {
  const auto samples = draw_symmetric_samples(1000, 0);
  for (const auto& m : samples) {
    const BinaryCubic f = BinaryCubic::from_map(m);
    CHECK((discriminant(f) != 0) == (classify_by_multiplicity(f) == RootProfile::distinct));
  }
}

// The quartic and the minor matrix cannot both describe root multiplicities
// of the cubic -c x^3 - d x^2 y + a x y^2 + b y^3. The next two cases pin the
// two kinds of counterexample.
TEST_CASE("rank-one point off the quartic") {
  const BinaryCubic f{1, 1, -1, -1};
  CHECK(matrix_rank(minor_matrix(f)) == 1);
  CHECK(discriminant(f) == -16);
  CHECK(classify_by_multiplicity(f) == RootProfile::distinct);
  CHECK(classify(tv({1, 1, -1, -1, 0})) == OrbitLabel::O3);
  CHECK(morphism_rank(tv({1, 1, -1, -1, 0})) == 1);
}

TEST_CASE("perfect cube with a rank-two minor matrix") {
  const BinaryCubic f = from_factors({1, 1}, {1, 1}, {1, 1});  // (x + y)^3
  CHECK(f.a == 3);
  CHECK(f.b == 1);
  CHECK(f.c == -1);
  CHECK(f.d == -3);
  CHECK(classify_by_multiplicity(f) == RootProfile::triple_root);
  CHECK(discriminant(f) == 0);
  CHECK(matrix_rank(minor_matrix(f)) == 2);
}

TEST_CASE("equation and multiplicity classifiers agree on every sample" * doctest::should_fail()) {
  const auto samples = draw_symmetric_samples(1000, 0);
  const auto summary = summarize(samples, sweep_serial(samples));
  CHECK(summary.classifier_disagreements == 0);
}
