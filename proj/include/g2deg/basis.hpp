// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "g2deg/poly.hpp"

namespace g2deg {

enum class BasisDirection { alpha_to_t, t_to_alpha };

/// Rewrites a polynomial in {a1, a2} as one in {t1, t2} or back. Throws
/// BasisMismatchError if `p` uses a variable outside the source basis.
MultiPoly change_basis(const MultiPoly& p, BasisDirection direction);

/// Expresses a polynomial symmetric in x1, x2 through c1 = x1 + x2,
/// c2 = x1*x2. Throws SymmetryError for non-symmetric input.
MultiPoly to_chern(const MultiPoly& p);

/// c1 -> x1 + x2, c2 -> x1*x2.
MultiPoly from_chern(const MultiPoly& q);

}  // namespace g2deg
