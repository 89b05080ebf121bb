// SPDX-License-Identifier: Apache-2.0
#include "g2deg/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "g2deg/basis.hpp"
#include "g2deg/classes.hpp"
#include "g2deg/errors.hpp"
#include "g2deg/multidegree.hpp"
#include "g2deg/octonion.hpp"
#include "g2deg/rings.hpp"
#include "g2deg/sweep.hpp"
#include "g2deg/triality.hpp"
#include "g2deg/weyl.hpp"

namespace g2deg {

namespace {

void add(std::vector<Check>& out, std::string name, std::string anchor, bool passed, std::string detail) {
  out.push_back({std::move(name), std::move(anchor), passed, std::move(detail)});
}

/// Runs `body`; an exception counts as a failure with its message as detail.
template <class F>
void guarded(std::vector<Check>& out, const std::string& name, const std::string& anchor, F body) {
  try {
    std::string detail;
    const bool passed = body(detail);
    add(out, name, anchor, passed, detail);
  } catch (const std::exception& e) {
    add(out, name, anchor, false, std::string("exception: ") + e.what());
  }
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rational rational() {
    Rational q(std::uniform_int_distribution<int>(-9, 9)(engine_), std::uniform_int_distribution<int>(1, 4)(engine_));
    q.canonicalize();
    return q;
  }
  Rational nonzero() {
    for (;;)
      if (Rational q = rational(); q != 0) return q;
  }
  Octonion<Rational> octonion() {
    Octonion<Rational> u;
    for (auto& x : u.coords) x = rational();
    return u;
  }

 private:
  std::mt19937_64 engine_;
};

const Ring& octonion_ring() {
  static const Ring ring = make_ring({"u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8",
                                      "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"});
  return ring;
}

Octonion<MultiPoly> symbolic(char prefix) {
  const Ring& r = octonion_ring();
  Octonion<MultiPoly> u = zero_octonion(MultiPoly(r));
  for (std::size_t i = 0; i < 8; ++i) u[i] = MultiPoly::variable(r, prefix + std::to_string(i + 1));
  return u;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix minus_identity(RationalMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) -= 1;
  return m;
}

std::vector<MultiPoly> isotropy_quadrics() {
  const Ring& r = tangent_ring();
  return {parse_poly("a^2 + b*d", r), parse_poly("a*c + d^2", r), parse_poly("a*d - b*c", r)};
}

std::vector<MultiPoly> nonzero_entries(const std::vector<Octonion<MultiPoly>>& products) {
  std::vector<MultiPoly> out;
  for (const auto& p : products)
    for (const auto& x : p.coords)
      if (!x.is_zero()) out.push_back(x);
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

}  // namespace

std::string to_string(Scope scope) {
  switch (scope) {
    case Scope::all: return "all";
    case Scope::octonion: return "octonion";
    case Scope::triality: return "triality";
    case Scope::orbits: return "orbits";
    case Scope::classes: return "classes";
    case Scope::weyl: return "weyl";
  }
  return "all";
}

Scope parse_scope(std::string_view text) {
  for (Scope s : {Scope::all, Scope::octonion, Scope::triality, Scope::orbits, Scope::classes, Scope::weyl})
    if (to_string(s) == text) return s;
  throw ParseError("unknown scope '" + std::string(text) + "'");
}

Fault parse_fault(std::string_view text) {
  if (text == "none") return Fault::none;
  if (text == "orbit-class") return Fault::orbit_class;
  if (text == "chern-form") return Fault::chern_form;
  if (text == "gram-table") return Fault::gram_table;
  throw ParseError("unknown fault '" + std::string(text) + "'");
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

void verify_octonion(const VerifyOptions& options, std::vector<Check>& out) {
  const auto u = symbolic('u');
  const auto v = symbolic('v');
  const MultiPoly zero(octonion_ring());

  guarded(out, "norm-multiplicativity (Prop A.1)", "Prop A.1", [&](std::string& detail) {
    const MultiPoly diff = norm(multiply(u, v)) - norm(u) * norm(v);
    detail = "N(uv) - N(u)N(v) = " + diff.to_string();
    return diff.is_zero();
  });

  guarded(out, "identity element (Prop A.1)", "Prop A.1", [&](std::string& detail) {
    const auto e = identity_element(zero);
    detail = "e = v4 + v5; e*u = u*e = u symbolically";
    return multiply(e, u) == u && multiply(u, e) == u && norm(e) == MultiPoly::constant(octonion_ring(), 1);
  });

  guarded(out, "bilinear Gram table (Eq. 2.2)", "Eq. (2.2)", [&](std::string& detail) {
    int mismatches = 0;
    for (std::size_t p = 1; p <= 8; ++p)
      for (std::size_t q = 1; q <= 8; ++q) {
        Rational expected = 0;
        if (p + q == 9) expected = (p == 4 || p == 5) ? 1 : -1;
        if (options.fault == Fault::gram_table && p == 1 && q == 8) expected = 1;
        const Rational got = bilinear(basis_vector(p, Rational(0)), basis_vector(q, Rational(0)));
        if (got != expected) ++mismatches;
      }
    detail = std::to_string(64 - mismatches) + "/64 basis pairs match";
    return mismatches == 0;
  });

  guarded(out, "polarization <u,u> = 2N(u) (Eq. 2.2)", "Eq. (2.2)", [&](std::string& detail) {
    const MultiPoly diff = bilinear(u, u) - norm(u) * Rational(2);
    const MultiPoly gram = bilinear(u, v) - bilinear_from_gram(u, v);
    detail = "<u,u> - 2N(u) = " + diff.to_string() + "; trace form - Gram form = " + gram.to_string();
    return diff.is_zero() && gram.is_zero();
  });

  guarded(out, "composition <uw,vw> = <u,v>N(w) (Prop A.1)", "Prop A.1", [&](std::string& detail) {
    Rng rng(options.seed);
    const std::size_t n = std::max<std::size_t>(1, options.samples / 10);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = rng.octonion();
      const auto b = rng.octonion();
      const auto w = rng.octonion();
      if (bilinear(multiply(a, w), multiply(b, w)) != bilinear(a, b) * norm(w)) ++bad;
      if (bilinear(multiply(w, a), multiply(w, b)) != bilinear(a, b) * norm(w)) ++bad;
    }
    detail = std::to_string(n) + " random triples, " + std::to_string(bad) + " failures";
    return bad == 0;
  });

  guarded(out, "multiplication is not associative (Prop A.1)", "Prop A.1", [&](std::string& detail) {
    for (std::size_t i = 1; i <= 8; ++i)
      for (std::size_t j = 1; j <= 8; ++j)
        for (std::size_t k = 1; k <= 8; ++k) {
          const auto a = basis_vector(i, Rational(0));
          const auto b = basis_vector(j, Rational(0));
          const auto c = basis_vector(k, Rational(0));
          if (!(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)))) {
            detail = "(v" + std::to_string(i) + " v" + std::to_string(j) + ") v" + std::to_string(k) + " != v" +
                     std::to_string(i) + " (v" + std::to_string(j) + " v" + std::to_string(k) + ")";
            return true;
          }
        }
    detail = "all basis triples associate";
    return false;
  });

  guarded(out, "E is G2-isotropic (Prop A.1)", "Prop A.1", [&](std::string& detail) {
    const auto v1 = basis_vector(1, Rational(0));
    const auto v2 = basis_vector(2, Rational(0));
    detail = "v1, v2 lie in V and all four products vanish";
    return is_g2_isotropic(v1, v2);
  });

  guarded(out, "torus automorphism (Eq. 2.3)", "Eq. (2.3)", [&](std::string& detail) {
    Rng rng(options.seed + 1);
    int bad = 0;
    std::vector<std::string> params;
    for (int i = 0; i < 5; ++i) {
      const Rational z1 = rng.nonzero();
      const Rational z2 = rng.nonzero();
      params.push_back("(" + to_string(z1) + "," + to_string(z2) + ")");
      if (!(multiply(torus_act(z1, z2, u), torus_act(z1, z2, v)) == torus_act(z1, z2, multiply(u, v)))) ++bad;
      Octonion<Rational> w = rng.octonion();
      w[4] = -w[3];
      if (!in_V(torus_act(z1, z2, w))) ++bad;
    }
    detail = "symbolic in u, v, V preserved, for (z1,z2) in " + join(params);
    return bad == 0;
  });
}

void verify_triality(const VerifyOptions&, std::vector<Check>& out) {
  guarded(out, "S3 relations tau^3 = sigma^2 = id, sigma tau sigma = tau^2 (Sec. 3)", "Sec. 3",
          [&](std::string& detail) {
            const auto id = identity_matrix(9);
            const bool t3 = s3_matrix(parse_s3_word("tau tau tau")) == id;
            const bool s2 = s3_matrix(parse_s3_word("sigma sigma")) == id;
            const bool braid = s3_matrix(parse_s3_word("sigma tau sigma")) == s3_matrix(parse_s3_word("tau tau"));
            const bool t1 = !(s3_matrix(parse_s3_word("tau")) == id);
            detail = std::string("tau^3=id ") + (t3 ? "yes" : "no") + ", sigma^2=id " + (s2 ? "yes" : "no") +
                     ", sigma tau sigma=tau^2 " + (braid ? "yes" : "no");
            return t3 && s2 && braid && t1;
          });

  guarded(out, "Fix(tau) = Fix(S3) = image of embed (Eq. 3.2)", "Eq. (3.2)", [&](std::string& detail) {
    const auto fix_tau = nullspace(minus_identity(s3_matrix(parse_s3_word("tau"))));
    const auto fix_all =
        nullspace(minus_identity(s3_matrix(parse_s3_word("tau"))).stacked(minus_identity(s3_matrix(parse_s3_word("sigma")))));
    RationalMatrix image(9, 5);
    for (std::size_t j = 0; j < 5; ++j) {
      std::array<Rational, 5> e{0, 0, 0, 0, 0};
      e[j] = 1;
      const auto col = embed(TrialitySymmetricMap<Rational>{e[0], e[1], e[2], e[3], e[4]}).coords();
      for (std::size_t i = 0; i < 9; ++i) image.at(i, j) = col[i];
    }
    detail = "dim Fix(tau) = " + std::to_string(fix_tau.cols()) + ", dim Fix(S3) = " + std::to_string(fix_all.cols()) +
             ", rank of embed = " + std::to_string(matrix_rank(image));
    return fix_tau.cols() == 5 && matrix_rank(image) == 5 && same_column_span(fix_tau, image) &&
           same_column_span(fix_all, image);
  });

  guarded(out, "symmetric maps are fixed by tau and sigma (Eq. 3.2)", "Eq. (3.2)", [&](std::string& detail) {
    const auto v = embed(generic_symmetric_map());
    const auto tv = generic_tangent_vector();
    const bool fixed = s3_act(parse_s3_word("tau"), v) == v && s3_act(parse_s3_word("sigma"), v) == v;
    const bool detects = is_triality_symmetric(v).has_value() && !is_triality_symmetric(tv).has_value();
    detail = "embed(a,b,c,d,z) is S3-fixed; the generic vector is not symmetric";
    return fixed && detects;
  });

  guarded(out, "Lemma 4.1 ideal equality (Eq. 4.1)", "Lemma 4.1", [&](std::string& detail) {
    const auto m = generic_symmetric_map();
    const auto frame = graph_frame(m);
    std::vector<Octonion<MultiPoly>> prods;
    for (const auto& l : frame.rows)
      for (const auto& r : frame.rows) prods.push_back(multiply(l, r));
    auto conds = nonzero_entries(prods);
    for (const auto& g : frame.graph_conditions(m.z)) conds.push_back(g);
    const auto order = TermOrder::degrevlex(tangent_ring());
    const auto gb = buchberger(conds, order);
    std::vector<std::string> basis;
    for (const auto& g : gb) basis.push_back(g.to_string());
    detail = std::to_string(conds.size()) + " conditions; reduced basis " + join(basis);
    return ideals_equal(conds, isotropy_quadrics(), order);
  });

  guarded(out, "Lemma 4.1 via the graph of phi", "Lemma 4.1", [&](std::string& detail) {
    const auto rows = graph_rows(embed(generic_symmetric_map()));
    std::vector<Octonion<MultiPoly>> prods;
    for (const auto& l : rows)
      for (const auto& r : rows) prods.push_back(multiply(l, r));
    const auto conds = nonzero_entries(prods);
    detail = "products of v_k + phi(v_k) cut out the same ideal";
    return ideals_equal(conds, isotropy_quadrics(), TermOrder::degrevlex(tangent_ring()));
  });

  guarded(out, "rank <= 1 of A_phi on U' (Lemma 5.4)", "Lemma 5.4", [&](std::string& detail) {
    auto m = generic_symmetric_map();
    m.z = MultiPoly(tangent_ring());
    const auto a = embed(m).matrix();
    std::vector<MultiPoly> minors;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        if (MultiPoly x = a[0][i] * a[1][j] - a[0][j] * a[1][i]; !x.is_zero()) minors.push_back(std::move(x));
    // The quadrics do not involve z, so compare after adding z on both sides.
    const MultiPoly z = MultiPoly::variable(tangent_ring(), "z");
    minors.push_back(z);
    auto quadrics = isotropy_quadrics();
    quadrics.push_back(z);
    detail = std::to_string(minors.size() - 1) + " nonzero 2x2 minors";
    return ideals_equal(minors, quadrics, TermOrder::degrevlex(tangent_ring()));
  });
}

void verify_orbits(const VerifyOptions& options, std::vector<Check>& out) {
  guarded(out, "discriminant weight -6a1-4a2 (Thm 5.2)", "Thm 5.2", [&](std::string& detail) {
    const auto w = weight_of(discriminant_poly(), coordinate_weights()).in_basis(WeightBasis::alpha);
    detail = "weight " + w.to_string();
    return w == WeightVector::alpha(-6, -4);
  });

  guarded(out, "minor quadrics match Lemma 4.1 (Prop 5.1)", "Prop 5.1", [&](std::string& detail) {
    const auto q = isotropy_quadrics();
    std::vector<std::string> got;
    bool ok = true;
    for (const auto& m : minor_polys()) {
      const MultiPoly e = embed_in(m, tangent_ring());
      got.push_back(m.to_string());
      ok = ok && std::any_of(q.begin(), q.end(), [&](const MultiPoly& p) { return e == p || e == -p; });
    }
    detail = "minors " + join(got);
    return ok;
  });

  guarded(out, "orbit representatives (Prop 5.1)", "Prop 5.1", [&](std::string& detail) {
    std::vector<std::string> seen;
    bool ok = true;
    for (OrbitLabel l : kAllOrbits) {
      const OrbitLabel got = classify(orbit_representative(l));
      seen.push_back(to_string(l) + "->" + to_string(got));
      ok = ok && got == l;
    }
    detail = join(seen);
    return ok;
  });

  const auto samples = draw_symmetric_samples(options.samples, options.seed);
  const auto records = sweep_parallel(samples);
  const auto summary = summarize(samples, records);
  auto first_failures = [&] {
    std::vector<std::string> parts;
    for (auto i : summary.failing_indices) {
      const auto& m = samples[i];
      parts.push_back("(" + to_string(m.a) + "," + to_string(m.b) + "," + to_string(m.c) + "," + to_string(m.d) + ")");
    }
    return parts.empty() ? std::string() : "; e.g. (a,b,c,d) = " + join(parts);
  };

  guarded(out, "rank 1 <=> O3 on U' (Lemma 5.4)", "Lemma 5.4", [&](std::string& detail) {
    detail = std::to_string(summary.z_zero_samples) + " samples with z = 0, " +
             std::to_string(summary.rank_violations) + " violations";
    if (summary.rank_violations != 0) detail += first_failures();
    return summary.rank_violations == 0;
  });

  guarded(out, "equation and root-multiplicity classifiers agree (Prop 5.1)", "Prop 5.1", [&](std::string& detail) {
    detail = std::to_string(summary.z_zero_samples) + " samples with z = 0, " +
             std::to_string(summary.classifier_disagreements) + " disagreements";
    if (summary.classifier_disagreements != 0) detail += first_failures();
    return summary.classifier_disagreements == 0;
  });
}

void verify_classes(const VerifyOptions& options, std::vector<Check>& out) {
  auto closed_alpha = [&](OrbitLabel l) {
    MultiPoly p = orbit_class(l, WeightBasis::alpha);
    if (options.fault == Fault::orbit_class && l == OrbitLabel::O3) p += MultiPoly::constant(alpha_ring(), 1);
    return p;
  };

  guarded(out, "Thm 5.2 oracle agreement ×5", "Thm 5.2", [&](std::string& detail) {
    std::vector<std::string> bad;
    for (OrbitLabel l : kAllOrbits) {
      const MultiPoly oracle = orbit_class_oracle(l).alpha;
      const bool alpha_ok = closed_alpha(l) == oracle;
      const bool t_ok = change_basis(orbit_class(l, WeightBasis::t), BasisDirection::t_to_alpha) == oracle &&
                        change_basis(oracle, BasisDirection::alpha_to_t) == orbit_class(l, WeightBasis::t);
      if (!alpha_ok || !t_ok) bad.push_back(to_string(l) + " (oracle " + oracle.to_string() + ")");
    }
    detail = bad.empty() ? "5/5 orbits agree in both bases" : "mismatch: " + join(bad);
    return bad.empty();
  });

  guarded(out, "Thm 5.2 second route on all of U", "Thm 5.2", [&](std::string& detail) {
    std::vector<std::string> bad;
    for (OrbitLabel l : kAllOrbits) {
      const auto md = orbit_class_in_U(l, TermOrder::degrevlex(tangent_ring()));
      if (!(md.polynomial == closed_alpha(l)) || md.codimension != codimension(l)) bad.push_back(to_string(l));
    }
    detail = bad.empty() ? "multidegrees of the five closures in U agree" : "mismatch: " + join(bad);
    return bad.empty();
  });

  guarded(out, "multidegree independent of term order", "Thm 5.2", [&](std::string& detail) {
    const Ring& r = cubic_ring();
    const std::vector<TermOrder> orders{TermOrder::degrevlex(r, {"a", "b", "c", "d"}),
                                        TermOrder::degrevlex(r, {"d", "c", "b", "a"}),
                                        TermOrder::lex(r, {"a", "b", "c", "d"}), TermOrder::lex(r, {"c", "a", "d", "b"})};
    const auto minors = minor_polys();
    const GradedIdeal cubic({minors.begin(), minors.end()}, coordinate_weights());
    const GradedIdeal disc({discriminant_poly()}, coordinate_weights());
    const auto ref_cubic = multidegree(cubic, orders.front()).polynomial;
    const auto ref_disc = multidegree(disc, orders.front()).polynomial;
    bool ok = true;
    std::vector<std::string> names;
    for (const auto& o : orders) {
      const auto gb = buchberger(cubic.generators(), o);
      ok = ok && satisfies_s_pair_criterion(gb, o) && is_autoreduced(gb, o);
      ok = ok && multidegree(cubic, o).polynomial == ref_cubic && multidegree(disc, o).polynomial == ref_disc;
      names.push_back(o.describe());
    }
    detail = "twisted cubic multidegree " + ref_cubic.to_string() + " under " + join(names);
    return ok;
  });

  guarded(out, "class degree = codimension (Thm 5.2)", "Thm 5.2", [&](std::string& detail) {
    bool ok = true;
    for (OrbitLabel l : kAllOrbits)
      for (WeightBasis b : {WeightBasis::alpha, WeightBasis::t}) {
        const MultiPoly p = orbit_class(l, b);
        const bool homogeneous = std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& term) {
          int deg = 0;
          for (int e : term.first) deg += e;
          return deg == codimension(l);
        });
        ok = ok && homogeneous;
      }
    for (int r : {0, 1, 2}) ok = ok && locus_class(r).root_form.total_degree() == locus_class(r).expected_codim;
    detail = "orbit classes homogeneous of degree 0,1,2,3,5; P_r of degree 5,3,0";
    return ok;
  });

  guarded(out, "Thm 1.2 root forms via t -> -x", "Thm 1.2", [&](std::string& detail) {
    std::vector<std::string> bad;
    for (int r : {2, 1, 0})
      if (!(locus_from_orbit(r) == locus_class(r).root_form)) bad.push_back("P" + std::to_string(r));
    detail = bad.empty() ? "P2, P1, P0 agree" : "mismatch: " + join(bad);
    return bad.empty();
  });

  guarded(out, "Thm 1.2 Chern forms", "Thm 1.2", [&](std::string& detail) {
    std::vector<std::string> got;
    bool ok = true;
    for (int r : {2, 1, 0}) {
      const MultiPoly c = to_chern(locus_from_orbit(r));
      MultiPoly expected = locus_class(r).chern_form;
      if (options.fault == Fault::chern_form && r == 1) expected *= Rational(2);
      got.push_back("P" + std::to_string(r) + " = " + c.to_string());
      ok = ok && c == expected && from_chern(c) == locus_class(r).root_form;
    }
    detail = join(got);
    return ok;
  });
}

void verify_weyl(const VerifyOptions&, std::vector<Check>& out) {
  const auto& group = WeylGroup::instance();

  guarded(out, "Weyl group closure has 12 elements (Sec. 2.2)", "Sec. 2.2", [&](std::string& detail) {
    std::set<Permutation> seen{Permutation{1, 2, 3, 4, 5, 6, 7}};
    std::vector<Permutation> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
      const Permutation p = todo.back();
      todo.pop_back();
      for (const auto& g : {kPermS, kPermT})
        if (seen.insert(compose(p, g)).second) todo.push_back(compose(p, g));
    }
    detail = "closure of <s, t> in S7 has " + std::to_string(seen.size()) + " elements";
    return seen.size() == 12 && group.elements().size() == 12;
  });

  guarded(out, "Coxeter relations s^2 = t^2 = (st)^6 = id (Sec. 2.2)", "Sec. 2.2", [&](std::string& detail) {
    const Permutation id{1, 2, 3, 4, 5, 6, 7};
    const Permutation st = compose(kPermS, kPermT);
    Permutation p = id;
    int order = 0;
    do {
      p = compose(p, st);
      ++order;
    } while (p != id && order < 100);
    detail = "order of st is " + std::to_string(order);
    return compose(kPermS, kPermS) == id && compose(kPermT, kPermT) == id && order == 6;
  });

  guarded(out, "tst = 3 6 1 4 7 2 5 (Sec. 2.2)", "Sec. 2.2", [&](std::string& detail) {
    const auto p = element_from_word("tst").perm();
    detail = "tst -> " + to_string(p);
    return p == Permutation{3, 6, 1, 4, 7, 2, 5};
  });

  guarded(out, "r_tst(2,2) = 1 (Sec. 2.3)", "Sec. 2.3", [&](std::string& detail) {
    const int r = rank_function(element_from_word("tst"), 2, 2);
    detail = "r_tst(2,2) = " + std::to_string(r);
    return r == 1;
  });

  guarded(out, "locus lengths match expected codimensions (Sec. 4)", "Sec. 4", [&](std::string& detail) {
    const int l2 = locus_element(2).length();
    const int l1 = locus_element(1).length();
    const int l0 = locus_element(0).length();
    detail = "lengths (id, tst, tstst) = (" + std::to_string(l2) + ", " + std::to_string(l1) + ", " +
             std::to_string(l0) + ")";
    return l2 == locus_class(2).expected_codim && l1 == locus_class(1).expected_codim &&
           l0 == locus_class(0).expected_codim && group.longest().length() == 6;
  });

  guarded(out, "permutation action matches reflections (Sec. 2.2)", "Sec. 2.2", [&](std::string& detail) {
    // Weights of v1, v2, v3, v4 - v5, v6, v7, v8 in V.
    const std::array<WeightVector, 7> weights{WeightVector::t(1, 0),  WeightVector::t(0, 1), WeightVector::t(1, -1),
                                             WeightVector::t(0, 0),  WeightVector::t(-1, 1), WeightVector::t(0, -1),
                                             WeightVector::t(-1, 0)};
    int bad = 0;
    for (const auto& w : group.elements())
      for (std::size_t i = 0; i < 7; ++i)
        if (!(w.act(weights[i]) == weights[static_cast<std::size_t>(w.perm()[i] - 1)])) ++bad;
    detail = std::to_string(bad) + " mismatches over 12 elements x 7 weights";
    return bad == 0;
  });

  guarded(out, "Billey restriction properties (Remark 4.3)", "Remark 4.3", [&](std::string& detail) {
    const MultiPoly one = MultiPoly::constant(t_ring(), 1);
    int bad = 0;
    for (const auto& v : group.elements())
      for (const auto& w : group.elements()) {
        const MultiPoly x = billey_restriction(w, v);
        if (w.length() == 0 && !(x == one)) ++bad;
        if (w.length() > v.length() && !x.is_zero()) ++bad;
        if (w == v && !(x == inversion_product(w))) ++bad;
        for (const auto& word : group.reduced_words(v))
          if (!(billey_restriction_word(w, word) == x)) ++bad;
      }
    detail = std::to_string(bad) + " violations over all pairs and reduced words";
    return bad == 0;
  });

  guarded(out, "Billey localization pinning (Remark 4.3)", "Remark 4.3", [&](std::string& detail) {
    const auto pin = pin_localization({{"tst", orbit_class(OrbitLabel::O3, WeightBasis::t)},
                                       {"tstst", orbit_class(OrbitLabel::O5, WeightBasis::t)}});
    int matches = 0;
    for (const auto& c : pin.candidates) matches += c.matches ? 1 : 0;
    if (pin.pinned_index < 0) {
      detail = std::to_string(matches) + " of 4 conventions match";
      return false;
    }
    const auto& c = pin.candidates[static_cast<std::size_t>(pin.pinned_index)];
    detail = std::string("pinned point ") + to_string(c.point) + ", sign " + to_string(c.sign) + "; 1 of 4 match";
    return matches == 1;
  });
}

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport report{options, {}};
  const Scope s = options.scope;
  if (s == Scope::all || s == Scope::octonion) verify_octonion(options, report.checks);
  if (s == Scope::all || s == Scope::triality) verify_triality(options, report.checks);
  if (s == Scope::all || s == Scope::orbits) verify_orbits(options, report.checks);
  if (s == Scope::all || s == Scope::classes) verify_classes(options, report.checks);
  if (s == Scope::all || s == Scope::weyl) verify_weyl(options, report.checks);
  return report;
}

}  // namespace g2deg
