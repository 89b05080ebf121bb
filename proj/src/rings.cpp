// SPDX-License-Identifier: Apache-2.0
#include "g2deg/rings.hpp"

namespace g2deg {

const Ring& alpha_ring() {
  static const Ring ring = make_ring({"a1", "a2"});
  return ring;
}

const Ring& t_ring() {
  static const Ring ring = make_ring({"t1", "t2"});
  return ring;
}

const Ring& root_ring() {
  static const Ring ring = make_ring({"x1", "x2"});
  return ring;
}

const Ring& chern_ring() {
  static const Ring ring = make_ring({"c2", "c1"});
  return ring;
}

const Ring& cubic_ring() {
  static const Ring ring = make_ring({"a", "b", "c", "d"});
  return ring;
}

const Ring& tangent_ring() {
  static const Ring ring = make_ring({"a", "b", "c", "d", "z"});
  return ring;
}

}  // namespace g2deg
