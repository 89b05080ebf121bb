// SPDX-License-Identifier: Apache-2.0
#include "g2deg/multidegree.hpp"

#include <algorithm>
#include <limits>

#include "g2deg/errors.hpp"
#include "g2deg/rings.hpp"

namespace g2deg {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

GradedIdeal::GradedIdeal(std::vector<MultiPoly> generators, WeightAssignment grading)
    : generators_(std::move(generators)), grading_(std::move(grading)) {
  if (generators_.empty()) throw DomainError("graded ideal needs at least one generator");
  for (const auto& g : generators_) {
    if (!same_ring(g.ring(), generators_.front().ring())) throw RingMismatchError("generators in different rings");
    if (!g.is_zero()) (void)weight_of(g, grading_);
  }
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Exponents> generators) : ring_(std::move(ring)) {
  std::sort(generators.begin(), generators.end(), GrlexGreater{});
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ring_->size()) throw DomainError("monomial has wrong number of exponents");
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
      if (i != j && divides(generators[j], generators[i])) redundant = true;
    if (!redundant) generators_.push_back(generators[i]);
  }
}

std::vector<std::string> MonomialIdeal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(MultiPoly::monomial(ring_, g).to_string());
  return out;
}

MonomialIdeal initial_ideal(const std::vector<MultiPoly>& groebner_basis, const TermOrder& order) {
  std::vector<Exponents> leads;
  for (const auto& g : groebner_basis) leads.push_back(leading_exponents(g, order));
  return MonomialIdeal(order.ring(), std::move(leads));
}

MultidegreeResult multidegree(const MonomialIdeal& ideal, const WeightAssignment& grading) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring->size();
  if (n > 20) throw DomainError("too many variables for subspace enumeration");
  const auto& gens = ideal.generators();
  for (const auto& g : gens)
    if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; }))
      throw DomainError("multidegree of the unit ideal is undefined");

  std::vector<MultiPoly> weight_form;
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = grading.find(ring->name(i));
    if (it == grading.end()) throw DomainError("no weight for variable '" + ring->name(i) + "'");
    weight_form.push_back(it->second.in_basis(WeightBasis::alpha).linear_form());
  }

  auto covers = [&](unsigned mask) {
    return std::all_of(gens.begin(), gens.end(), [&](const Exponents& g) {
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > 0 && ((mask >> i) & 1U)) return true;
      return false;
    });
  };

  int codim = std::numeric_limits<int>::max();
  for (unsigned mask = 0; mask < (1U << n); ++mask)
    if (covers(mask)) codim = std::min(codim, __builtin_popcount(mask));

  MultidegreeResult result{MultiPoly(alpha_ring()), {}, codim};
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != codim || !covers(mask)) continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) vars.push_back(i);

    // Localize: forget exponents of variables outside S.
    std::vector<Exponents> local;
    for (const auto& g : gens) {
      Exponents e;
      for (auto i : vars) e.push_back(g[i]);
      local.push_back(std::move(e));
    }
    // The localized ideal is primary to the maximal ideal, so each variable
    // has a pure power in it; that bounds the standard-monomial box.
    std::vector<int> bound(vars.size(), std::numeric_limits<int>::max());
    for (const auto& e : local) {
      std::size_t nonzero = 0;
      std::size_t where = 0;
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] > 0) {
          ++nonzero;
          where = k;
        }
      if (nonzero == 1) bound[where] = std::min(bound[where], e[where]);
    }
    for (int b : bound)
      if (b == std::numeric_limits<int>::max()) throw DomainError("localized ideal is not primary");

    int mult = 0;
    Exponents m(vars.size(), 0);
    for (;;) {
      const bool standard = std::none_of(local.begin(), local.end(), [&](const Exponents& g) { return divides(g, m); });
      if (standard) ++mult;
      std::size_t k = 0;
      while (k < m.size() && ++m[k] == bound[k]) m[k++] = 0;
      if (k == m.size()) break;
    }

    MultiPoly term = MultiPoly::constant(alpha_ring(), mult);
    MultidegreeComponent comp{{}, mult};
    for (auto i : vars) {
      term *= weight_form[i];
      comp.variables.push_back(ring->name(i));
    }
    result.polynomial += term;
    result.components.push_back(std::move(comp));
  }
  return result;
}

MultidegreeResult multidegree(const GradedIdeal& ideal, const TermOrder& order) {
  const auto gb = buchberger(ideal.generators(), order);
  return multidegree(initial_ideal(gb, order), ideal.grading());
}

MultiPoly subspace_class() { return coordinate_weights().at("z").in_basis(WeightBasis::alpha).linear_form(); }

std::vector<MultiPoly> orbit_closure_ideal(OrbitLabel label) {
  const Ring& r = tangent_ring();
  const MultiPoly z = MultiPoly::variable(r, "z");
  switch (label) {
    case OrbitLabel::O0: return {};
    case OrbitLabel::O1: return {z};
    case OrbitLabel::O2: return {z, embed_in(discriminant_poly(), r)};
    case OrbitLabel::O3: {
      std::vector<MultiPoly> gens{z};
      for (const auto& m : minor_polys()) gens.push_back(embed_in(m, r));
      return gens;
    }
    case OrbitLabel::O5: {
      std::vector<MultiPoly> gens;
      for (const auto& name : r->names()) gens.push_back(MultiPoly::variable(r, name));
      return gens;
    }
  }
  return {};
}

OracleResult orbit_class_oracle(OrbitLabel label, const TermOrder& order) {
  if (!same_ring(order.ring(), cubic_ring())) throw RingMismatchError("oracle term order must be over (a, b, c, d)");
  const MultiPoly one = MultiPoly::constant(alpha_ring(), 1);
  const MultiPoly normal = subspace_class();
  OracleResult out{label, one, {}, {}, {}};

  auto record = [&](const std::vector<MultiPoly>& gb, const MultidegreeResult& md) {
    for (const auto& g : gb) out.groebner_basis.push_back(g.to_string());
    out.initial_ideal = initial_ideal(gb, order).generator_strings();
    out.components = md.components;
  };

  switch (label) {
    case OrbitLabel::O0:
      break;
    case OrbitLabel::O1:
      out.alpha = normal;
      out.components.push_back({{"z"}, 1});
      break;
    case OrbitLabel::O2: {
      const MultiPoly disc = discriminant_poly();
      out.alpha = normal * weight_of(disc, coordinate_weights()).in_basis(WeightBasis::alpha).linear_form();
      const auto gb = buchberger({disc}, order);
      record(gb, multidegree(initial_ideal(gb, order), coordinate_weights()));
      break;
    }
    case OrbitLabel::O3: {
      const auto minors = minor_polys();
      const GradedIdeal ideal({minors.begin(), minors.end()}, coordinate_weights());
      const auto gb = buchberger(ideal.generators(), order);
      const auto md = multidegree(initial_ideal(gb, order), coordinate_weights());
      out.alpha = normal * md.polynomial;
      record(gb, md);
      break;
    }
    case OrbitLabel::O5: {
      MultiPoly prod = one;
      for (const auto& [name, w] : coordinate_weights()) prod *= w.in_basis(WeightBasis::alpha).linear_form();
      out.alpha = prod;
      out.components = {{{"a", "b", "c", "d", "z"}, 1}};
      break;
    }
  }
  return out;
}

OracleResult orbit_class_oracle(OrbitLabel label) {
  return orbit_class_oracle(label, TermOrder::degrevlex(cubic_ring(), {"a", "b", "c", "d"}));
}

MultidegreeResult orbit_class_in_U(OrbitLabel label, const TermOrder& order) {
  if (!same_ring(order.ring(), tangent_ring())) throw RingMismatchError("term order must be over (a, b, c, d, z)");
  const auto gens = orbit_closure_ideal(label);
  if (gens.empty()) return {MultiPoly::constant(alpha_ring(), 1), {}, 0};
  const GradedIdeal ideal(gens, coordinate_weights());
  return multidegree(ideal, order);
}

}  // namespace g2deg
