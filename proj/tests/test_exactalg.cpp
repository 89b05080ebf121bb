// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "g2deg/basis.hpp"
#include "g2deg/errors.hpp"
#include "g2deg/matrix.hpp"
#include "g2deg/orbits.hpp"
#include "g2deg/rings.hpp"
#include "g2deg/weights.hpp"
#include "test_support.hpp"

using namespace g2deg;
using g2deg::testing::Gen;

namespace {

MultiPoly A(const std::string& s) { return parse_poly(s, alpha_ring()); }
MultiPoly T(const std::string& s) { return parse_poly(s, t_ring()); }
MultiPoly X(const std::string& s) { return parse_poly(s, root_ring()); }
MultiPoly C(const std::string& s) { return parse_poly(s, chern_ring()); }

// Plain Gauss-Jordan over the rationals, for comparison with the
// fraction-free rank.
std::size_t naive_rank(RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(pivot, c));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const Rational f = m.at(r, col) / m.at(rank, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rationals parse to lowest terms") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-3/2")) == "-3/2");
  CHECK(to_string(parse_rational("−3/2")) == "-3/2");
  CHECK(to_string(parse_rational(" -4/2 ")) == "-2");
  CHECK_THROWS_AS(parse_rational("4/-2"), ParseError);
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"1/0", "1.5", "abc", "", "1/", "--1", "2e3", "1/2/3"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("canonical polynomial text") {
  CHECK(T("-3*t1*t2*(t1 + t2)").to_string() == "-3*t1^2*t2 - 3*t1*t2^2");
  CHECK(T("2*(t1+t2)^2").to_string() == "2*t1^2 + 4*t1*t2 + 2*t2^2");
  CHECK(T("t1 - t1").to_string() == "0");
  CHECK(T("1/2*t1 - 3/4").to_string() == "1/2*t1 - 3/4");
  CHECK(A("-3*a1 - 2*a2").to_string() == "-3*a1 - 2*a2");
}

TEST_CASE("parser rejects bad input and unknown variables") {
  CHECK_THROWS_AS(parse_poly("t1 +", t_ring()), ParseError);
  CHECK_THROWS_AS(parse_poly("(t1", t_ring()), ParseError);
  CHECK_THROWS(parse_poly("x1", t_ring()));
}

TEST_CASE("ring mismatch is an error, not a silent merge") {
  CHECK_THROWS_AS(T("t1") + A("a1"), RingMismatchError);
  CHECK_THROWS_AS(T("t1") * A("a1"), RingMismatchError);
  CHECK_FALSE(T("1") == A("1"));
}

TEST_CASE("ring axioms on random triples") {
  Gen g(11);
  const Ring r = make_ring({"x", "y", "z"});
  for (int i = 0; i < 60; ++i) {
    const MultiPoly p = g.poly(r), q = g.poly(r), s = g.poly(r);
    CHECK((p + q) + s == p + (q + s));
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
    CHECK(parse_poly(p.to_string(), r) == p);
  }
}

TEST_CASE("arithmetic agrees with pointwise evaluation") {
  Gen g(12);
  const Ring r = make_ring({"x", "y", "z"});
  for (int i = 0; i < 40; ++i) {
    const MultiPoly p = g.poly(r), q = g.poly(r);
    const auto pt = g.point(3);
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
    CHECK(p.pow(3).evaluate(pt) == pow(p.evaluate(pt), 3));
  }
}

TEST_CASE("change_basis examples") {
  CHECK(change_basis(A("a1"), BasisDirection::alpha_to_t) == T("t1 - t2"));
  CHECK(change_basis(T("t1"), BasisDirection::t_to_alpha) == A("2*a1 + a2"));
  CHECK(change_basis(A("a1 + a2"), BasisDirection::alpha_to_t) == T("t2"));
  CHECK_THROWS_AS(change_basis(T("t1"), BasisDirection::alpha_to_t), BasisMismatchError);
  CHECK_THROWS_AS(change_basis(X("x1"), BasisDirection::t_to_alpha), BasisMismatchError);
}

TEST_CASE("change_basis round trip on 100 random integer polynomials") {
  Gen g(13);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly t = g.poly(t_ring(), 5, 4, true);
    CHECK(change_basis(change_basis(t, BasisDirection::t_to_alpha), BasisDirection::alpha_to_t) == t);
    const MultiPoly a = g.poly(alpha_ring(), 5, 4, true);
    CHECK(change_basis(change_basis(a, BasisDirection::alpha_to_t), BasisDirection::t_to_alpha) == a);
  }
}

TEST_CASE("to_chern examples") {
  CHECK(to_chern(X("x1 + x2")) == C("c1"));
  CHECK(to_chern(X("3*x1*x2*(x1 + x2)")) == C("3*c2*c1"));
  CHECK(to_chern(X("3*x1*x2*(x1 + x2)")).to_string() == "3*c2*c1");
  CHECK(to_chern(X("x1*x2*(x1 + x2)*(2*x1 - x2)*(-x1 + 2*x2)")) == C("c2*c1*(9*c2 - 2*c1^2)"));
  CHECK_THROWS_AS(to_chern(X("x1")), SymmetryError);
  CHECK_THROWS_AS(to_chern(X("x1^2*x2")), SymmetryError);
}

TEST_CASE("to_chern inverts c1 -> x1 + x2, c2 -> x1 x2") {
  Gen g(14);
  for (int i = 0; i < 50; ++i) {
    const MultiPoly q = g.poly(chern_ring(), 4, 3);
    const MultiPoly p = substitute(q, {{"c1", X("x1 + x2")}, {"c2", X("x1*x2")}}, root_ring());
    CHECK(to_chern(p) == q);
    CHECK(from_chern(to_chern(p)) == p);
  }
}

TEST_CASE("weight_of") {
  const auto& w = coordinate_weights();
  CHECK(weight_of(discriminant_poly(), w) == WeightVector::alpha(-6, -4));
  const Ring& r = cubic_ring();
  CHECK(weight_of(parse_poly("a^2 + b*d", r), w) == WeightVector::alpha(-2, -2));
  CHECK(weight_of(parse_poly("c", r), w) == WeightVector::alpha(-3, -1));
  CHECK(weight_of(parse_poly("b", r), w) == WeightVector::alpha(0, -1));
  try {
    (void)weight_of(parse_poly("a + b", r), w);
    FAIL("expected an inhomogeneity error");
  } catch (const InhomogeneousError& e) {
    const std::string msg = e.what();
    CHECK(msg.find('a') != std::string::npos);
    CHECK(msg.find('b') != std::string::npos);
  }
  CHECK_THROWS_AS(weight_of(MultiPoly(r), w), DomainError);
}

TEST_CASE("weight vectors check their basis") {
  CHECK(WeightVector::alpha(1, 0) + WeightVector::alpha(0, 1) == WeightVector::alpha(1, 1));
  CHECK(2 * WeightVector::alpha(1, 1) - WeightVector::alpha(0, 1) == WeightVector::alpha(2, 1));
  CHECK_THROWS_AS((void)(WeightVector::t(1, 0) == WeightVector::alpha(1, 0)), BasisMismatchError);
  CHECK_THROWS_AS((void)(WeightVector::t(1, 0) + WeightVector::alpha(1, 0)), BasisMismatchError);
  CHECK(WeightVector::t(1, 0).in_basis(WeightBasis::alpha) == WeightVector::alpha(2, 1));
  CHECK(WeightVector::alpha(1, 0).in_basis(WeightBasis::t) == WeightVector::t(1, -1));
}

TEST_CASE("substitute examples") {
  const MultiPoly o3 = T("-3*t1*t2*(t1 + t2)");
  const MultiPoly p1 = substitute(o3, {{"t1", X("-x1")}, {"t2", X("-x2")}}, root_ring());
  CHECK(p1 == X("3*x1*x2*(x1 + x2)"));
  CHECK(substitute(o3, {}) == o3);
  CHECK(substitute(p1, {{"x1", T("-t1")}, {"x2", T("-t2")}}, t_ring()) == o3);
  const Ring r = make_ring({"x", "y"});
  CHECK(substitute(parse_poly("x*y", r), {{"x", parse_poly("y", r)}}) == parse_poly("y^2", r));
}

TEST_CASE("matrix rank examples") {
  CHECK(matrix_rank(RationalMatrix{{1, 0, 0}, {0, 1, 0}}) == 2);
  CHECK(matrix_rank(RationalMatrix{{0, 0, -1}, {0, 0, 0}}) == 1);
  CHECK(matrix_rank(RationalMatrix(2, 6)) == 0);
  CHECK(matrix_rank(RationalMatrix{{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}}) == 1);
}

TEST_CASE("fraction-free rank matches Gauss-Jordan; nullspace is a kernel basis") {
  Gen g(15);
  for (int i = 0; i < 80; ++i) {
    const std::size_t rows = static_cast<std::size_t>(g.integer(1, 5));
    const std::size_t cols = static_cast<std::size_t>(g.integer(1, 6));
    RationalMatrix m(rows, cols);
    const bool low_rank = g.integer(0, 1) == 1;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = low_rank && r > 0 ? m.at(0, c) * g.rational() : g.rational(3);
    const std::size_t rank = matrix_rank(m);
    CHECK(rank == naive_rank(m));
    const RationalMatrix n = nullspace(m);
    CHECK(n.cols() == cols - rank);
    for (std::size_t k = 0; k < n.cols(); ++k)
      for (std::size_t r = 0; r < rows; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += m.at(r, c) * n.at(c, k);
        CHECK(s == 0);
      }
  }
}
