// SPDX-License-Identifier: Apache-2.0
#include "g2deg/triality.hpp"

#include <cctype>

#include "g2deg/rings.hpp"

namespace g2deg {

S3Word parse_s3_word(std::string_view text) {
  S3Word word;
  std::size_t i = 0;
  auto starts = [&](std::string_view tok) { return text.substr(i, tok.size()) == tok; };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == ',') {
      ++i;
    } else if (starts("tau")) {
      word.push_back(S3Gen::tau);
      i += 3;
    } else if (starts("sigma")) {
      word.push_back(S3Gen::sigma);
      i += 5;
    } else if (starts("id")) {
      i += 2;
    } else if (ch == 't') {
      word.push_back(S3Gen::tau);
      ++i;
    } else if (ch == 's') {
      word.push_back(S3Gen::sigma);
      ++i;
    } else {
      throw ParseError("bad S3 word '" + std::string(text) + "'");
    }
  }
  return word;
}

std::string to_string(const S3Word& word) {
  if (word.empty()) return "id";
  std::string out;
  for (auto g : word) {
    if (!out.empty()) out += ' ';
    out += g == S3Gen::tau ? "tau" : "sigma";
  }
  return out;
}

RationalMatrix s3_matrix(const S3Word& word) {
  RationalMatrix m(9, 9);
  for (std::size_t j = 0; j < 9; ++j) {
    std::array<Rational, 9> unit{};
    for (auto& x : unit) x = 0;
    unit[j] = 1;
    const auto image = s3_act(word, TangentVector<Rational>::from_coords(unit)).coords();
    for (std::size_t i = 0; i < 9; ++i) m.at(i, j) = image[i];
  }
  return m;
}

int morphism_rank(const TangentVector<Rational>& v) {
  const auto rows = v.matrix();
  RationalMatrix m(2, 6);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 6; ++c) m.at(r, c) = rows[r][c];
  return static_cast<int>(matrix_rank(m));
}

int morphism_rank(const TangentVector<MultiPoly>& v) {
  std::array<Rational, 9> values;
  const auto c = v.coords();
  for (std::size_t i = 0; i < 9; ++i) {
    if (!c[i].is_constant())
      throw UnsupportedInputError("morphism_rank needs rational entries; got '" + c[i].to_string() + "'");
    values[i] = c[i].constant_term();
  }
  return morphism_rank(TangentVector<Rational>::from_coords(values));
}

TangentVector<MultiPoly> generic_tangent_vector() {
  static const Ring ring = make_ring({"b1", "a1", "d1", "c1", "b2", "a2", "d2", "c2", "z"});
  std::array<MultiPoly, 9> c{MultiPoly(ring), MultiPoly(ring), MultiPoly(ring), MultiPoly(ring), MultiPoly(ring),
                             MultiPoly(ring), MultiPoly(ring), MultiPoly(ring), MultiPoly(ring)};
  for (std::size_t i = 0; i < 9; ++i) c[i] = MultiPoly::variable(ring, ring->name(i));
  return TangentVector<MultiPoly>::from_coords(c);
}

TrialitySymmetricMap<MultiPoly> generic_symmetric_map() {
  const Ring& r = tangent_ring();
  return {MultiPoly::variable(r, "a"), MultiPoly::variable(r, "b"), MultiPoly::variable(r, "c"),
          MultiPoly::variable(r, "d"), MultiPoly::variable(r, "z")};
}

}  // namespace g2deg
