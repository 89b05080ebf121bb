// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "g2deg/poly.hpp"
#include "g2deg/rational.hpp"

namespace g2deg {

// Uniform access to the additive/multiplicative identities of a scalar
// ring. Polynomial scalars need a witness to know which ring they live in.

inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline bool is_zero(const Rational& q) { return q == 0; }
inline Rational scaled(const Rational& s, const Rational& k) { return s * k; }

inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.ring()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.ring(), 1); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly scaled(const MultiPoly& s, const Rational& k) { return s * k; }

inline std::string scalar_string(const Rational& q) { return to_string(q); }
inline std::string scalar_string(const MultiPoly& p) { return p.to_string(); }

}  // namespace g2deg
