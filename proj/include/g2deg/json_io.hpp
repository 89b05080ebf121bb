// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "g2deg/octonion.hpp"
#include "g2deg/triality.hpp"
#include "g2deg/verify.hpp"

namespace g2deg {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings; JSON integers are accepted too. Anything
/// else (floats, booleans, objects) throws ParseError.
Rational rational_from_json(const Json& value, std::string_view field);

/// Accepts {a, b, c, d, z} or the nine keys b1 a1 d1 c1 b2 a2 d2 c2 z.
/// Unknown or missing keys throw ParseError.
TangentVector<Rational> tangent_from_json(const Json& input);

/// An array of eight rationals.
Octonion<Rational> octonion_from_json(const Json& value, std::string_view field);
Json to_json(const Octonion<Rational>& u);

Json to_json(const VerificationReport& report);

/// Parses text as JSON, converting library errors to ParseError.
Json parse_json(std::string_view text);

}  // namespace g2deg
