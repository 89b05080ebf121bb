// SPDX-License-Identifier: Apache-2.0
#include "g2deg/groebner.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "g2deg/errors.hpp"

namespace g2deg {

namespace {

std::vector<std::size_t> priority_from_names(const Ring& ring, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  if (names.empty()) {
    out.resize(ring->size());
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  if (names.size() != ring->size()) throw DomainError("term order must rank every ring variable");
  for (const auto& n : names) {
    const auto idx = ring->index_of(n);
    if (!idx) throw RingMismatchError("term order names unknown variable '" + n + "'");
    if (std::find(out.begin(), out.end(), *idx) != out.end()) throw DomainError("variable listed twice: " + n);
    out.push_back(*idx);
  }
  return out;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents minus(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

MultiPoly make_monic(MultiPoly p, const TermOrder& order) {
  const Rational lc = leading_coefficient(p, order);
  p *= Rational(1) / lc;
  return p;
}

}  // namespace

TermOrder TermOrder::degrevlex(const Ring& ring, const std::vector<std::string>& largest_first) {
  return TermOrder(OrderKind::degrevlex, ring, priority_from_names(ring, largest_first));
}

TermOrder TermOrder::lex(const Ring& ring, const std::vector<std::string>& largest_first) {
  return TermOrder(OrderKind::lex, ring, priority_from_names(ring, largest_first));
}

bool TermOrder::greater(const Exponents& lhs, const Exponents& rhs) const {
  if (kind_ == OrderKind::lex) {
    for (auto i : priority_)
      if (lhs[i] != rhs[i]) return lhs[i] > rhs[i];
    return false;
  }
  const int dl = std::accumulate(lhs.begin(), lhs.end(), 0);
  const int dr = std::accumulate(rhs.begin(), rhs.end(), 0);
  if (dl != dr) return dl > dr;
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it)
    if (lhs[*it] != rhs[*it]) return lhs[*it] < rhs[*it];
  return false;
}

std::string TermOrder::describe() const {
  std::string out = kind_ == OrderKind::lex ? "lex(" : "degrevlex(";
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    if (k) out += '>';
    out += ring_->name(priority_[k]);
  }
  return out + ')';
}

const Exponents& leading_exponents(const MultiPoly& p, const TermOrder& order) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no leading term");
  const auto& terms = p.terms();
  auto best = terms.begin();
  for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return best->first;
}

Rational leading_coefficient(const MultiPoly& p, const TermOrder& order) {
  return p.coefficient(leading_exponents(p, order));
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, const TermOrder& order) {
  std::vector<Exponents> leads;
  std::vector<Rational> lcs;
  for (const auto& g : basis) {
    leads.push_back(leading_exponents(g, order));
    lcs.push_back(g.coefficient(leads.back()));
  }
  MultiPoly rest = f;
  MultiPoly out(f.ring());
  while (!rest.is_zero()) {
    const Exponents lt = leading_exponents(rest, order);
    const Rational lc = rest.coefficient(lt);
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!divides(leads[k], lt)) continue;
      rest -= MultiPoly::monomial(f.ring(), minus(lt, leads[k]), lc / lcs[k]) * basis[k];
      reduced = true;
      break;
    }
    if (!reduced) {
      out.add_term(lt, lc);
      rest.add_term(lt, -lc);
    }
  }
  return out;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const TermOrder& order) {
  const Exponents& lf = leading_exponents(f, order);
  const Exponents& lg = leading_exponents(g, order);
  const Exponents l = lcm(lf, lg);
  return MultiPoly::monomial(f.ring(), minus(l, lf), Rational(1) / f.coefficient(lf)) * f -
         MultiPoly::monomial(g.ring(), minus(l, lg), Rational(1) / g.coefficient(lg)) * g;
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators, const TermOrder& order) {
  std::vector<MultiPoly> basis;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), order.ring())) throw RingMismatchError("generator ring differs from term order ring");
    if (!g.is_zero()) basis.push_back(make_monic(g, order));
  }
  if (basis.empty()) throw DomainError("buchberger needs at least one nonzero generator");

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(leading_exponents(basis[i], order), leading_exponents(basis[j], order))) continue;
    MultiPoly r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(std::move(r), order));
    const std::size_t k = basis.size() - 1;
    for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Exponents& li = leading_exponents(basis[i], order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exponents& lj = leading_exponents(basis[j], order);
      // Equal leading monomials: keep the earliest one.
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce.
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(make_monic(normal_form(minimal[i], others, order), order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& l, const MultiPoly& r) {
    return order.greater(leading_exponents(l, order), leading_exponents(r, order));
  });
  return reduced;
}

bool satisfies_s_pair_criterion(const std::vector<MultiPoly>& basis, const TermOrder& order) {
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
  return true;
}

bool is_autoreduced(const std::vector<MultiPoly>& basis, const TermOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Exponents& lj = leading_exponents(basis[j], order);
      for (const auto& [e, c] : basis[i].terms())
        if (divides(lj, e)) return false;
    }
  return true;
}

bool ideal_contains(const std::vector<MultiPoly>& groebner_basis, const MultiPoly& f, const TermOrder& order) {
  return normal_form(f, groebner_basis, order).is_zero();
}

bool ideals_equal(const std::vector<MultiPoly>& lhs, const std::vector<MultiPoly>& rhs, const TermOrder& order) {
  const auto gl = buchberger(lhs, order);
  const auto gr = buchberger(rhs, order);
  for (const auto& f : rhs)
    if (!ideal_contains(gl, f, order)) return false;
  for (const auto& f : lhs)
    if (!ideal_contains(gr, f, order)) return false;
  return true;
}

}  // namespace g2deg
