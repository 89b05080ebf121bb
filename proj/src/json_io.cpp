// SPDX-License-Identifier: Apache-2.0
#include "g2deg/json_io.hpp"

#include <set>

#include "g2deg/errors.hpp"

namespace g2deg {

Rational rational_from_json(const Json& value, std::string_view field) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("field '" + std::string(field) + "': " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.dump());
  throw ParseError("field '" + std::string(field) + "' must be a rational string such as \"-3/2\", got " + value.dump());
}

TangentVector<Rational> tangent_from_json(const Json& input) {
  if (!input.is_object()) throw ParseError("input must be a JSON object");
  static const std::vector<std::string> symmetric{"a", "b", "c", "d", "z"};
  static const std::vector<std::string> full{"b1", "a1", "d1", "c1", "b2", "a2", "d2", "c2", "z"};
  const std::vector<std::string>& keys = input.contains("a") || input.contains("b") ? symmetric : full;
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : input.items())
    if (!allowed.count(k)) throw ParseError("unexpected field '" + k + "'");
  std::vector<Rational> values;
  for (const auto& k : keys) {
    if (!input.contains(k)) throw ParseError("missing field '" + k + "'");
    values.push_back(rational_from_json(input.at(k), k));
  }
  if (keys.size() == 5)
    return embed(TrialitySymmetricMap<Rational>{values[0], values[1], values[2], values[3], values[4]});
  std::array<Rational, 9> c;
  std::copy(values.begin(), values.end(), c.begin());
  return TangentVector<Rational>::from_coords(c);
}

Octonion<Rational> octonion_from_json(const Json& value, std::string_view field) {
  if (!value.is_array() || value.size() != 8)
    throw ParseError("field '" + std::string(field) + "' must be an array of 8 rationals");
  Octonion<Rational> u;
  for (std::size_t i = 0; i < 8; ++i) u[i] = rational_from_json(value[i], field);
  return u;
}

Json to_json(const Octonion<Rational>& u) {
  Json out = Json::array();
  for (const auto& x : u.coords) out.push_back(to_string(x));
  return out;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(
        {{"name", c.name}, {"paper_anchor", c.anchor}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  return {{"scope", to_string(report.options.scope)},
          {"samples", report.options.samples},
          {"seed", report.options.seed},
          {"checks", std::move(checks)},
          {"summary", {{"total", report.checks.size()}, {"passed", report.passed()}, {"failed", report.failed()}}}};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace g2deg
