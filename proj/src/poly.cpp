// SPDX-License-Identifier: Apache-2.0
#include "g2deg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "g2deg/errors.hpp"

namespace g2deg {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Ring make_ring(std::vector<std::string> names) { return std::make_shared<const VarSet>(std::move(names)); }

bool same_ring(const Ring& lhs, const Ring& rhs) { return lhs == rhs || *lhs == *rhs; }

bool GrlexGreater::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const int dl = std::accumulate(lhs.begin(), lhs.end(), 0);
  const int dr = std::accumulate(rhs.begin(), rhs.end(), 0);
  if (dl != dr) return dl > dr;
  return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

MultiPoly::MultiPoly(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

MultiPoly MultiPoly::constant(Ring ring, const Rational& value) {
  MultiPoly p(std::move(ring));
  p.add_term(Exponents(p.ring_->size(), 0), value);
  return p;
}

MultiPoly MultiPoly::variable(Ring ring, std::string_view name) {
  const auto idx = ring->index_of(name);
  if (!idx) throw RingMismatchError("variable '" + std::string(name) + "' is not in the ring");
  Exponents e(ring->size(), 0);
  e[*idx] = 1;
  return monomial(std::move(ring), std::move(e));
}

MultiPoly MultiPoly::monomial(Ring ring, Exponents exps, const Rational& coeff) {
  MultiPoly p(std::move(ring));
  if (exps.size() != p.ring_->size()) throw std::invalid_argument("exponent vector length does not match ring");
  if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; }))
    throw std::invalid_argument("negative exponent");
  p.add_term(exps, coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(ring_->size(), 0)); }

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;  // grlex: first term has maximal degree
  return std::accumulate(e.begin(), e.end(), 0);
}

std::vector<std::string> MultiPoly::support() const {
  std::vector<bool> used(ring_->size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back(ring_->name(i));
  return out;
}

void MultiPoly::require_same_ring(const MultiPoly& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatchError("polynomials belong to different rings");
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.require_same_ring(rhs);
  MultiPoly out(lhs.ring_);
  Exponents e(lhs.ring_->size());
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  for (; e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= g2deg::pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->name(i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << g2deg::to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << g2deg::to_string(mag) << '*' << mono;
    }
  }
  return out.str();
}

std::string to_string(const MultiPoly& p) { return p.to_string(); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly acc(ring_);
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    MultiPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (eat('*')) acc *= power();
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (eat('^')) {
      skip_ws();
      const std::string e = digits();
      if (e.empty()) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) fail("expected denominator");
        num += '/' + den;
      }
      return MultiPoly::constant(ring_, parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (!ring_->index_of(name)) fail("unknown variable '" + std::string(name) + "'");
      return MultiPoly::variable(ring_, name);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Ring& ring) { return PolyParser(text, ring).parse(); }

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& images, const Ring& target) {
  const Ring& src = p.ring();
  std::vector<MultiPoly> image_of;
  image_of.reserve(src->size());
  for (std::size_t i = 0; i < src->size(); ++i) {
    const auto it = images.find(src->name(i));
    if (it != images.end()) {
      if (!same_ring(it->second.ring(), target))
        throw RingMismatchError("substitution image for '" + src->name(i) + "' is not in the target ring");
      image_of.push_back(it->second);
    } else if (target->index_of(src->name(i))) {
      image_of.push_back(MultiPoly::variable(target, src->name(i)));
    } else {
      // Only an error if the variable is actually used.
      image_of.push_back(MultiPoly(target));
    }
  }
  const auto used = p.support();
  for (const auto& name : used)
    if (!images.count(name) && !target->index_of(name))
      throw RingMismatchError("unmapped variable '" + name + "' does not exist in the target ring");

  MultiPoly out(target);
  // Cache powers per variable to avoid recomputation across terms.
  std::vector<std::vector<MultiPoly>> powers(src->size());
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * image_of[i]);
      term *= cache[static_cast<std::size_t>(e[i])];
    }
    out += term;
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& images) {
  if (images.empty()) return p;
  const Ring& target = images.begin()->second.ring();
  return substitute(p, images, target);
}

MultiPoly embed_in(const MultiPoly& p, const Ring& target) { return substitute(p, {}, target); }

}  // namespace g2deg
