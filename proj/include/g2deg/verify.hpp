// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace g2deg {

struct Check {
  std::string name;
  std::string anchor;
  bool passed;
  std::string detail;
};

enum class Scope { all, octonion, triality, orbits, classes, weyl };

std::string to_string(Scope scope);
/// Throws ParseError on an unknown scope.
Scope parse_scope(std::string_view text);

/// Deliberate corruptions used to exercise the failure path.
enum class Fault { none, orbit_class, chern_form, gram_table };

Fault parse_fault(std::string_view text);

struct VerifyOptions {
  Scope scope = Scope::all;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  Fault fault = Fault::none;
};

struct VerificationReport {
  VerifyOptions options;
  std::vector<Check> checks;

  bool ok() const;
  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
};

VerificationReport run_verification(const VerifyOptions& options);

/// The individual suites, each appending to `out`.
void verify_octonion(const VerifyOptions& options, std::vector<Check>& out);
void verify_triality(const VerifyOptions& options, std::vector<Check>& out);
void verify_orbits(const VerifyOptions& options, std::vector<Check>& out);
void verify_classes(const VerifyOptions& options, std::vector<Check>& out);
void verify_weyl(const VerifyOptions& options, std::vector<Check>& out);

}  // namespace g2deg
