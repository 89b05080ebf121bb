// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "g2deg/orbits.hpp"

namespace g2deg {

/// Everything the property suites need to know about one sample.
struct SweepRecord {
  OrbitLabel orbit;      // equation-based classifier
  RootProfile profile;   // gcd-based classifier
  int morphism_rank;
  int minor_rank;
  bool discriminant_zero;

  bool operator==(const SweepRecord&) const = default;
};

struct SampleOptions {
  /// Fraction of samples with z != 0 (0 for the rank-correspondence suite).
  double nonzero_z_fraction = 0.0;
};

/// Seeded random symmetric maps. About half are engineered degenerate
/// cubics (L1 L2 L3, L1^2 L2, L^3, rank-one minor matrix, 0); the
/// rest have independent random rational coefficients. Deterministic for a
/// given (n, seed, options).
std::vector<TrialitySymmetricMap<Rational>> draw_symmetric_samples(std::size_t n, std::uint64_t seed,
                                                                   SampleOptions options = {});

SweepRecord evaluate_sample(const TrialitySymmetricMap<Rational>& m);

/// Reference implementation.
std::vector<SweepRecord> sweep_serial(std::span<const TrialitySymmetricMap<Rational>> samples);
/// OpenMP version; identical output to sweep_serial.
std::vector<SweepRecord> sweep_parallel(std::span<const TrialitySymmetricMap<Rational>> samples);

struct SweepSummary {
  std::size_t samples = 0;
  std::size_t z_zero_samples = 0;
  /// z = 0 samples violating  rank 1 <=> O3,  rank 0 <=> O5,  rank 2 <=> O1 or O2.
  std::size_t rank_violations = 0;
  /// z = 0 samples where the two classifiers disagree.
  std::size_t classifier_disagreements = 0;
  std::map<OrbitLabel, std::size_t> orbit_counts;
  std::vector<std::size_t> failing_indices;  // first few offenders

  bool ok() const { return rank_violations == 0 && classifier_disagreements == 0; }
};

SweepSummary summarize(std::span<const TrialitySymmetricMap<Rational>> samples,
                       std::span<const SweepRecord> records);

}  // namespace g2deg
