// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "g2deg/poly.hpp"
#include "g2deg/weights.hpp"

namespace g2deg {

/// One-line notation of a permutation of {1..7}.
using Permutation = std::array<int, 7>;

/// (u o v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& p);
std::string to_string(const Permutation& p);

/// Images of the simple reflections s = s_{alpha1}, t = s_{alpha2} under the
/// embedding of the Weyl group into S7 given by the action on V.
inline constexpr Permutation kPermS{2, 1, 5, 4, 3, 7, 6};
inline constexpr Permutation kPermT{1, 3, 2, 4, 6, 5, 7};

/// Simple roots, positive roots (alpha basis) and reflections of G2.
namespace roots {

inline constexpr WeightVector kAlpha1 = WeightVector::alpha(1, 0);
inline constexpr WeightVector kAlpha2 = WeightVector::alpha(0, 1);

/// alpha1, alpha2, alpha1+alpha2, 2alpha1+alpha2, 3alpha1+alpha2, 3alpha1+2alpha2.
const std::vector<WeightVector>& positive();

bool is_positive(const WeightVector& root);
/// alpha2 is long (squared length 3x that of alpha1).
bool is_long(const WeightVector& root);

/// Reflection in alpha1 ('s') or alpha2 ('t') acting on a weight.
WeightVector reflect(char generator, const WeightVector& w);

}  // namespace roots

/// An element of W(G2) with its canonical reduced word: the
/// lexicographically least (s < t) among minimal-length words. Words are
/// read as compositions, rightmost letter acting first.
class WeylElement {
 public:
  const std::string& word() const { return word_; }
  const Permutation& perm() const { return perm_; }
  int length() const { return static_cast<int>(word_.size()); }

  /// Acts on a weight (rightmost generator first).
  WeightVector act(const WeightVector& w) const;
  /// Positive roots beta with w^{-1}(beta) negative.
  std::vector<WeightVector> inversions() const;

  bool operator==(const WeylElement& other) const { return perm_ == other.perm_; }

 private:
  friend class WeylGroup;
  WeylElement(std::string word, Permutation perm) : word_(std::move(word)), perm_(perm) {}

  std::string word_;
  Permutation perm_;
};

/// The 12-element group, enumerated once.
class WeylGroup {
 public:
  static const WeylGroup& instance();

  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const;

  /// Any word over {s, t}; "", "id" and "e" denote the identity, "w0" the
  /// longest element.
  const WeylElement& from_word(std::string_view word) const;
  const WeylElement& from_perm(const Permutation& perm) const;
  const WeylElement& product(const WeylElement& u, const WeylElement& v) const;
  const WeylElement& inverse(const WeylElement& w) const;

  /// Every reduced word of w.
  std::vector<std::string> reduced_words(const WeylElement& w) const;

 private:
  WeylGroup();

  std::vector<WeylElement> elements_;  // sorted by (length, word)
};

Permutation permutation_of_word(std::string_view word);
const WeylElement& element_from_word(std::string_view word);

/// #{ i <= q : w(8 - i) <= p }, for 1 <= p, q <= 7.
int rank_function(const WeylElement& w, int q, int p);
/// Full 7x7 table, entry [q-1][p-1].
std::array<std::array<int, 7>, 7> rank_table(const WeylElement& w);

/// Element indexing the rank-r locus: id, tst, tstst for r = 2, 1, 0.
const WeylElement& locus_element(int r);

enum class RootSign { positive, negative };
enum class FixedPoint { identity, longest };

const char* to_string(RootSign sign);
const char* to_string(FixedPoint point);

/// Subword sum over the given reduced word of v: for every subword that is a
/// reduced word of w, the product of the roots
/// beta_j = g_1 ... g_{j-1}(alpha_{g_j}) at the chosen positions. With
/// RootSign::negative every beta_j is negated. Result in {t1, t2}.
MultiPoly billey_restriction_word(const WeylElement& w, std::string_view reduced_word_of_v,
                                  RootSign sign = RootSign::positive);

/// Same, over the canonical reduced word of v.
MultiPoly billey_restriction(const WeylElement& w, const WeylElement& v, RootSign sign = RootSign::positive);

/// Product of the roots in w's inversion set, in {t1, t2}.
MultiPoly inversion_product(const WeylElement& w, RootSign sign = RootSign::positive);

struct LocalizationCandidate {
  FixedPoint point;
  RootSign sign;
  std::map<std::string, MultiPoly> restrictions;  // keyed by canonical word of w
  bool matches;
};

struct LocalizationPinning {
  std::vector<LocalizationCandidate> candidates;  // all four combinations
  int pinned_index;                               // -1 unless exactly one matches
};

/// Restricts the classes of the given elements at each fixed point under
/// each sign convention and keeps the combinations that reproduce
/// `targets` (canonical word -> polynomial in {t1, t2}) exactly.
LocalizationPinning pin_localization(const std::map<std::string, MultiPoly>& targets);

}  // namespace g2deg
