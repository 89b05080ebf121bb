// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "g2deg/basis.hpp"
#include "g2deg/errors.hpp"
#include "g2deg/groebner.hpp"
#include "g2deg/multidegree.hpp"
#include "g2deg/orbits.hpp"
#include "g2deg/rings.hpp"
#include "test_support.hpp"

using namespace g2deg;
using g2deg::testing::Gen;

namespace {

MultiPoly C(const std::string& s) { return parse_poly(s, cubic_ring()); }
MultiPoly A(const std::string& s) { return parse_poly(s, alpha_ring()); }

TermOrder grevlex() { return TermOrder::degrevlex(cubic_ring(), {"a", "b", "c", "d"}); }

std::vector<MultiPoly> twisted_cubic() {
  std::vector<MultiPoly> out;
  for (const auto& m : minor_polys()) out.push_back(m);
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Hilbert function of S/in(I) in the standard grading, counted directly.
long hilbert(const MonomialIdeal& ideal, int k) {
  const std::size_t n = ideal.ring()->size();
  long count = 0;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      if (std::none_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Exponents& g) { return divides(g, e); }))
        ++count;
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, k);
  return count;
}

// Degree from the leading coefficient of the Hilbert polynomial: the
// (dim-1)-th finite difference is eventually the degree.
long degree_oracle(const MonomialIdeal& ideal, int dim) {
  std::vector<long> h;
  for (int k = 20; k <= 20 + dim; ++k) h.push_back(hilbert(ideal, k));
  for (int step = 0; step < dim - 1; ++step)
    for (std::size_t i = 0; i + 1 < h.size(); ++i) h[i] = h[i + 1] - h[i];
  return h[0];
}

WeightAssignment standard_grading(const Ring& r) {
  WeightAssignment w;
  for (const auto& n : r->names()) w.emplace(n, WeightVector::alpha(1, 0));
  return w;
}

}  // namespace

TEST_CASE("twisted cubic Groebner basis and initial ideal") {
  const auto gb = buchberger(twisted_cubic(), grevlex());
  CHECK(gb.size() == 3);
  CHECK(satisfies_s_pair_criterion(gb, grevlex()));
  CHECK(is_autoreduced(gb, grevlex()));
  CHECK(sorted(initial_ideal(gb, grevlex()).generator_strings()) == sorted({"a^2", "a*c", "b*c"}));
  CHECK(ideals_equal(gb, twisted_cubic(), grevlex()));
}

TEST_CASE("textbook example") {
  const Ring r = make_ring({"x", "y"});
  const TermOrder o = TermOrder::degrevlex(r);
  const auto gb = buchberger({parse_poly("x^3 - 2*x*y", r), parse_poly("x^2*y - 2*y^2 + x", r)}, o);
  std::vector<std::string> got;
  for (const auto& g : gb) got.push_back(g.to_string());
  const std::vector<std::string> want{parse_poly("x^2", r).to_string(), parse_poly("x*y", r).to_string(),
                                      parse_poly("y^2 - 1/2*x", r).to_string()};
  CHECK(sorted(got) == sorted(want));
}

TEST_CASE("normal forms and membership") {
  const auto gb = buchberger(twisted_cubic(), grevlex());
  Gen g(51);
  for (int i = 0; i < 40; ++i) {
    MultiPoly combo(cubic_ring());
    for (const auto& m : twisted_cubic()) combo += g.poly(cubic_ring(), 3, 2) * m;
    CHECK(ideal_contains(gb, combo, grevlex()));
    CHECK(normal_form(combo, gb, grevlex()).is_zero());
  }
  CHECK_FALSE(ideal_contains(gb, C("a"), grevlex()));
  CHECK_FALSE(ideal_contains(gb, discriminant_poly(), grevlex()));
  CHECK_THROWS_AS(buchberger({MultiPoly(cubic_ring())}, grevlex()), DomainError);
}

TEST_CASE("Groebner bases of random ideals satisfy Buchberger's criterion") {
  Gen g(52);
  const Ring r = make_ring({"x", "y", "z"});
  for (const auto& o : {TermOrder::degrevlex(r), TermOrder::lex(r)}) {
    for (int i = 0; i < 10; ++i) {
      const std::vector<MultiPoly> gens{g.poly(r, 3, 2, true), g.poly(r, 3, 2, true)};
      if (gens[0].is_zero() || gens[1].is_zero()) continue;
      const auto gb = buchberger(gens, o);
      CHECK(satisfies_s_pair_criterion(gb, o));
      CHECK(ideals_equal(gb, gens, o));
    }
  }
}

TEST_CASE("term orders") {
  const Ring r = make_ring({"x", "y", "z"});
  const auto lex = TermOrder::lex(r);
  const auto drl = TermOrder::degrevlex(r);
  CHECK(lex.greater({1, 0, 0}, {0, 5, 5}));
  CHECK(drl.greater({0, 5, 5}, {1, 0, 0}));
  CHECK(drl.greater({1, 1, 0}, {1, 0, 1}));  // xy > xz
  CHECK(drl.greater({0, 2, 0}, {1, 0, 1}));  // y^2 > xz in degrevlex
  CHECK(lex.describe() == "lex(x>y>z)");
  CHECK(grevlex().describe() == "degrevlex(a>b>c>d)");
}

TEST_CASE("monomial ideal multidegrees") {
  const Ring r = make_ring({"x", "y"});
  const WeightAssignment w{{"x", WeightVector::alpha(1, 0)}, {"y", WeightVector::alpha(0, 1)}};
  CHECK(multidegree(MonomialIdeal(r, {{2, 0}}), w).polynomial == A("2*a1"));
  CHECK(multidegree(MonomialIdeal(r, {{1, 1}}), w).polynomial == A("a1 + a2"));
  CHECK(multidegree(MonomialIdeal(r, {{2, 0}, {1, 1}, {0, 3}}), w).polynomial == A("4*a1*a2"));
  CHECK(multidegree(MonomialIdeal(r, {{1, 0}, {1, 1}}), w).codimension == 1);
  CHECK(MonomialIdeal(r, {{1, 0}, {1, 1}}).generators().size() == 1);
  CHECK_THROWS_AS(multidegree(MonomialIdeal(r, {{0, 0}}), w), DomainError);
}

TEST_CASE("standard-grading degree matches Hilbert polynomial") {
  const auto ring = cubic_ring();
  const auto gw = standard_grading(ring);
  const auto tc = initial_ideal(buchberger(twisted_cubic(), grevlex()), grevlex());
  const auto md = multidegree(tc, gw);
  CHECK(md.codimension == 2);
  CHECK(md.polynomial == A("3*a1^2"));
  CHECK(degree_oracle(tc, 2) == 3);

  const auto di = initial_ideal(buchberger({discriminant_poly()}, grevlex()), grevlex());
  CHECK(multidegree(di, gw).polynomial == A("4*a1"));
  CHECK(degree_oracle(di, 3) == 4);

  const Ring r = make_ring({"x", "y", "z", "w"});
  Gen g(53);
  for (int i = 0; i < 8; ++i) {
    std::vector<Exponents> gens;
    for (int k = 0; k < 3; ++k) {
      Exponents e(4);
      for (auto& x : e) x = g.integer(0, 2);
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
      gens.push_back(e);
    }
    const MonomialIdeal m(r, gens);
    const auto res = multidegree(m, standard_grading(r));
    const int dim = 4 - res.codimension;
    if (dim < 1) continue;
    CHECK(res.polynomial.evaluate(std::vector<Rational>{1, 0}) == Rational(degree_oracle(m, dim)));
  }
}

TEST_CASE("graded ideal rejects inhomogeneous generators") {
  CHECK_THROWS_AS(GradedIdeal({C("a + b")}, coordinate_weights()), InhomogeneousError);
  CHECK_NOTHROW(GradedIdeal({discriminant_poly()}, coordinate_weights()));
  CHECK_THROWS_AS(GradedIdeal({}, coordinate_weights()), DomainError);
}

TEST_CASE("twisted cubic multidegree on U'") {
  const GradedIdeal ideal(twisted_cubic(), coordinate_weights());
  const auto md = multidegree(ideal, grevlex());
  CHECK(md.polynomial == A("6*a1^2 + 9*a1*a2 + 3*a2^2"));
  CHECK(md.polynomial == A("3*(a1 + a2)*(2*a1 + a2)"));
  CHECK(md.codimension == 2);
  CHECK(subspace_class() == A("-3*a1 - 2*a2"));
  CHECK(subspace_class() * md.polynomial == A("-3*(a1 + a2)*(2*a1 + a2)*(3*a1 + 2*a2)"));
}

TEST_CASE("multidegree does not depend on the term order") {
  const GradedIdeal ideal(twisted_cubic(), coordinate_weights());
  const Ring& r = cubic_ring();
  const std::vector<TermOrder> orders{TermOrder::degrevlex(r, {"a", "b", "c", "d"}),
                                      TermOrder::degrevlex(r, {"d", "c", "b", "a"}),
                                      TermOrder::lex(r, {"a", "b", "c", "d"}), TermOrder::lex(r, {"c", "a", "d", "b"})};
  for (const auto& o : orders) CHECK(multidegree(ideal, o).polynomial == A("3*(a1 + a2)*(2*a1 + a2)"));
  for (const auto& o : orders) CHECK(orbit_class_oracle(OrbitLabel::O2, o).alpha == orbit_class_oracle(OrbitLabel::O2).alpha);
}

TEST_CASE("oracle classes") {
  CHECK(orbit_class_oracle(OrbitLabel::O0).alpha == A("1"));
  CHECK(orbit_class_oracle(OrbitLabel::O1).alpha == A("-3*a1 - 2*a2"));
  CHECK(orbit_class_oracle(OrbitLabel::O2).alpha == A("2*(3*a1 + 2*a2)^2"));
  CHECK(orbit_class_oracle(OrbitLabel::O3).alpha == A("-3*(a1 + a2)*(2*a1 + a2)*(3*a1 + 2*a2)"));
  CHECK(orbit_class_oracle(OrbitLabel::O5).alpha == A("-a2*(a1 + a2)*(2*a1 + a2)*(3*a1 + a2)*(3*a1 + 2*a2)"));
  CHECK(sorted(orbit_class_oracle(OrbitLabel::O3).initial_ideal) == sorted({"a^2", "a*c", "b*c"}));
  CHECK_THROWS_AS(orbit_class_oracle(OrbitLabel::O3, TermOrder::lex(tangent_ring())), RingMismatchError);
}

TEST_CASE("classes on all of U agree with the U' route") {
  const auto o = TermOrder::degrevlex(tangent_ring());
  for (OrbitLabel l : kAllOrbits) {
    const auto md = orbit_class_in_U(l, o);
    CHECK(md.polynomial == orbit_class_oracle(l).alpha);
    CHECK(md.codimension == codimension(l));
  }
}
