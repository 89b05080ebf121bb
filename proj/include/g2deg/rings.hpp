// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "g2deg/poly.hpp"

namespace g2deg {

// Shared variable sets. Each is created once and never mutated.

/// {a1, a2}: simple roots alpha1, alpha2.
const Ring& alpha_ring();
/// {t1, t2}: weights of the standard torus action on E.
const Ring& t_ring();
/// {x1, x2}: Chern roots of E*.
const Ring& root_ring();
/// {c2, c1}: Chern classes of E*. c2 is listed first so monomials print as
/// "c2*c1".
const Ring& chern_ring();
/// {a, b, c, d}: coordinates on the binary-cubic subspace.
const Ring& cubic_ring();
/// {a, b, c, d, z}: coordinates on the full triality-symmetric space.
const Ring& tangent_ring();

}  // namespace g2deg
