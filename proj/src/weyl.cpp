// SPDX-License-Identifier: Apache-2.0
#include "g2deg/weyl.hpp"

#include <algorithm>

#include "g2deg/errors.hpp"
#include "g2deg/rings.hpp"

namespace g2deg {

Permutation compose(const Permutation& u, const Permutation& v) {
  Permutation out{};
  for (std::size_t i = 0; i < 7; ++i) out[i] = u[static_cast<std::size_t>(v[i] - 1)];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out{};
  for (std::size_t i = 0; i < 7; ++i) out[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return out;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int x : p) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

namespace roots {

const std::vector<WeightVector>& positive() {
  static const std::vector<WeightVector> list{WeightVector::alpha(1, 0), WeightVector::alpha(0, 1),
                                              WeightVector::alpha(1, 1), WeightVector::alpha(2, 1),
                                              WeightVector::alpha(3, 1), WeightVector::alpha(3, 2)};
  return list;
}

bool is_positive(const WeightVector& root) {
  const auto a = root.in_basis(WeightBasis::alpha);
  return a.c1() >= 0 && a.c2() >= 0 && !a.is_zero();
}

bool is_long(const WeightVector& root) {
  // Invariant form with (alpha1, alpha1) = 2, (alpha2, alpha2) = 6, (alpha1, alpha2) = -3.
  const auto a = root.in_basis(WeightBasis::alpha);
  const int p = a.c1();
  const int q = a.c2();
  return 2 * p * p + 6 * q * q - 6 * p * q == 6;
}

WeightVector reflect(char generator, const WeightVector& w) {
  const auto a = w.in_basis(WeightBasis::alpha);
  const int p = a.c1();
  const int q = a.c2();
  WeightVector out = WeightVector::alpha(0, 0);
  if (generator == 's') {
    out = WeightVector::alpha(-p + 3 * q, q);
  } else if (generator == 't') {
    out = WeightVector::alpha(p, p - q);
  } else {
    throw DomainError(std::string("unknown simple reflection '") + generator + "'");
  }
  return out.in_basis(w.basis());
}

}  // namespace roots

namespace {

std::string normalize_word(std::string_view word) {
  std::string out;
  for (char ch : word) {
    if (ch == 's' || ch == 't') {
      out += ch;
    } else if (ch != ' ' && ch != '*' && ch != ',') {
      throw ParseError("bad Weyl word '" + std::string(word) + "': letters must be s or t");
    }
  }
  return out;
}

Permutation word_perm(const std::string& word) {
  Permutation p{1, 2, 3, 4, 5, 6, 7};
  for (char ch : word) p = compose(p, ch == 's' ? kPermS : kPermT);
  return p;
}

}  // namespace

Permutation permutation_of_word(std::string_view word) { return word_perm(normalize_word(word)); }

WeightVector WeylElement::act(const WeightVector& w) const {
  WeightVector out = w;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) out = roots::reflect(*it, out);
  return out;
}

std::vector<WeightVector> WeylElement::inversions() const {
  std::vector<WeightVector> out;
  const std::string inv_word(word_.rbegin(), word_.rend());
  for (const auto& beta : roots::positive()) {
    WeightVector image = beta;
    for (auto it = inv_word.rbegin(); it != inv_word.rend(); ++it) image = roots::reflect(*it, image);
    if (!roots::is_positive(image)) out.push_back(beta);
  }
  return out;
}

WeylGroup::WeylGroup() {
  // Shortlex enumeration: the first word reaching a permutation is its
  // canonical reduced word.
  std::vector<std::string> frontier{""};
  elements_.push_back(WeylElement("", word_perm("")));
  for (int len = 1; len <= 7; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier)
      for (char ch : {'s', 't'}) next.push_back(w + ch);
    std::sort(next.begin(), next.end());
    for (const auto& w : next) {
      const auto p = word_perm(w);
      const bool seen = std::any_of(elements_.begin(), elements_.end(), [&](const auto& e) { return e.perm() == p; });
      if (!seen) elements_.push_back(WeylElement(w, p));
    }
    frontier = std::move(next);
  }
}

const WeylGroup& WeylGroup::instance() {
  static const WeylGroup group;
  return group;
}

const WeylElement& WeylGroup::longest() const {
  return *std::max_element(elements_.begin(), elements_.end(),
                           [](const auto& l, const auto& r) { return l.length() < r.length(); });
}

const WeylElement& WeylGroup::from_perm(const Permutation& perm) const {
  for (const auto& e : elements_)
    if (e.perm() == perm) return e;
  throw DomainError("permutation " + to_string(perm) + " is not in the Weyl group");
}

const WeylElement& WeylGroup::from_word(std::string_view word) const {
  if (word.empty() || word == "id" || word == "e") return identity();
  if (word == "w0") return longest();
  return from_perm(permutation_of_word(word));
}

const WeylElement& WeylGroup::product(const WeylElement& u, const WeylElement& v) const {
  return from_perm(compose(u.perm(), v.perm()));
}

const WeylElement& WeylGroup::inverse(const WeylElement& w) const { return from_perm(g2deg::inverse(w.perm())); }

std::vector<std::string> WeylGroup::reduced_words(const WeylElement& w) const {
  std::vector<std::string> out;
  const int len = w.length();
  for (unsigned mask = 0; mask < (1U << len); ++mask) {
    std::string word;
    for (int i = len - 1; i >= 0; --i) word += (mask >> i) & 1U ? 't' : 's';
    if (word_perm(word) == w.perm()) out.push_back(word);
  }
  return out;
}

const WeylElement& element_from_word(std::string_view word) { return WeylGroup::instance().from_word(word); }

int rank_function(const WeylElement& w, int q, int p) {
  if (q < 1 || q > 7 || p < 1 || p > 7) throw DomainError("rank_function arguments must be in 1..7");
  int count = 0;
  for (int i = 1; i <= q; ++i)
    if (w.perm()[static_cast<std::size_t>(8 - i - 1)] <= p) ++count;
  return count;
}

std::array<std::array<int, 7>, 7> rank_table(const WeylElement& w) {
  std::array<std::array<int, 7>, 7> table{};
  for (int q = 1; q <= 7; ++q)
    for (int p = 1; p <= 7; ++p) table[q - 1][p - 1] = rank_function(w, q, p);
  return table;
}

const WeylElement& locus_element(int r) {
  switch (r) {
    case 2: return element_from_word("");
    case 1: return element_from_word("tst");
    case 0: return element_from_word("tstst");
    default: throw DomainError("locus rank must be 0, 1 or 2");
  }
}

const char* to_string(RootSign sign) { return sign == RootSign::positive ? "roots" : "negative_roots"; }
const char* to_string(FixedPoint point) { return point == FixedPoint::identity ? "e" : "w0"; }

MultiPoly billey_restriction_word(const WeylElement& w, std::string_view reduced_word_of_v, RootSign sign) {
  const std::string word = normalize_word(reduced_word_of_v);
  const auto& group = WeylGroup::instance();
  if (group.from_perm(word_perm(word)).length() != static_cast<int>(word.size()))
    throw DomainError("'" + word + "' is not a reduced word");

  const int n = static_cast<int>(word.size());
  std::vector<MultiPoly> beta;
  for (int j = 0; j < n; ++j) {
    WeightVector r = word[static_cast<std::size_t>(j)] == 's' ? roots::kAlpha1 : roots::kAlpha2;
    for (int k = j - 1; k >= 0; --k) r = roots::reflect(word[static_cast<std::size_t>(k)], r);
    if (sign == RootSign::negative) r = -r;
    beta.push_back(r.in_basis(WeightBasis::t).linear_form());
  }

  MultiPoly sum(t_ring());
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != w.length()) continue;
    std::string sub;
    MultiPoly prod = MultiPoly::constant(t_ring(), 1);
    for (int j = 0; j < n; ++j) {
      if (!((mask >> j) & 1U)) continue;
      sub += word[static_cast<std::size_t>(j)];
      prod *= beta[static_cast<std::size_t>(j)];
    }
    if (word_perm(sub) == w.perm()) sum += prod;
  }
  return sum;
}

MultiPoly billey_restriction(const WeylElement& w, const WeylElement& v, RootSign sign) {
  return billey_restriction_word(w, v.word(), sign);
}

MultiPoly inversion_product(const WeylElement& w, RootSign sign) {
  MultiPoly prod = MultiPoly::constant(t_ring(), 1);
  for (const auto& beta : w.inversions())
    prod *= (sign == RootSign::negative ? -beta : beta).in_basis(WeightBasis::t).linear_form();
  return prod;
}

LocalizationPinning pin_localization(const std::map<std::string, MultiPoly>& targets) {
  const auto& group = WeylGroup::instance();
  LocalizationPinning out{{}, -1};
  int matches = 0;
  for (FixedPoint point : {FixedPoint::identity, FixedPoint::longest}) {
    const WeylElement& at = point == FixedPoint::identity ? group.identity() : group.longest();
    for (RootSign sign : {RootSign::positive, RootSign::negative}) {
      LocalizationCandidate cand{point, sign, {}, true};
      for (const auto& [word, target] : targets) {
        const auto& w = group.from_word(word);
        MultiPoly value = billey_restriction(w, at, sign);
        if (!(value == embed_in(target, t_ring()))) cand.matches = false;
        cand.restrictions.emplace(w.word().empty() ? "id" : w.word(), std::move(value));
      }
      if (cand.matches) {
        ++matches;
        out.pinned_index = static_cast<int>(out.candidates.size());
      }
      out.candidates.push_back(std::move(cand));
    }
  }
  if (matches != 1) out.pinned_index = -1;
  return out;
}

}  // namespace g2deg
