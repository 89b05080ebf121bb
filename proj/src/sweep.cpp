// SPDX-License-Identifier: Apache-2.0
#include "g2deg/sweep.hpp"

#include <omp.h>

#include <array>
#include <random>
#include <stdexcept>

namespace g2deg {

namespace {

using Linear = std::array<Rational, 2>;  // p x + q y
using Cubic = std::array<Rational, 4>;   // x^3, x^2y, xy^2, y^3

class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  /// Small rational, integral two thirds of the time.
  Rational rational() {
    const int num = uniform(-6, 6);
    const int den = uniform(0, 2) == 0 ? uniform(2, 5) : 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational() {
    for (;;)
      if (Rational q = rational(); q != 0) return q;
  }

  Linear linear() {
    for (;;) {
      Linear l{rational(), rational()};
      if (l[0] != 0 || l[1] != 0) return l;
    }
  }

 private:
  std::mt19937_64 engine_;
};

Cubic product(const Linear& l1, const Linear& l2, const Linear& l3) {
  // (p1 x + q1 y)(p2 x + q2 y) = p1p2 x^2 + (p1q2 + q1p2) xy + q1q2 y^2
  const Rational s0 = l1[0] * l2[0];
  const Rational s1 = l1[0] * l2[1] + l1[1] * l2[0];
  const Rational s2 = l1[1] * l2[1];
  return {s0 * l3[0], s0 * l3[1] + s1 * l3[0], s1 * l3[1] + s2 * l3[0], s2 * l3[1]};
}

}  // namespace

std::vector<TrialitySymmetricMap<Rational>> draw_symmetric_samples(std::size_t n, std::uint64_t seed,
                                                                   SampleOptions options) {
  SampleRng rng(seed);
  std::vector<TrialitySymmetricMap<Rational>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BinaryCubic f{0, 0, 0, 0};
    switch (rng.uniform(0, 8)) {
      case 0:
      case 1:
      case 2:
      case 3:
        f = {rng.rational(), rng.rational(), rng.rational(), rng.rational()};
        break;
      case 4: {
        const auto k = product(rng.linear(), rng.linear(), rng.linear());
        f = BinaryCubic::from_monomial_coeffs(k[0], k[1], k[2], k[3]);
        break;
      }
      case 5: {
        const auto l = rng.linear();
        const auto k = product(l, l, rng.linear());
        f = BinaryCubic::from_monomial_coeffs(k[0], k[1], k[2], k[3]);
        break;
      }
      case 6: {
        const auto l = rng.linear();
        auto k = product(l, l, l);
        const Rational s = rng.nonzero_rational();
        for (auto& x : k) x *= s;
        f = BinaryCubic::from_monomial_coeffs(k[0], k[1], k[2], k[3]);
        break;
      }
      case 7: {
        // Point of the rank-one cone: s (u, 1, -u^3, -u^2), or s (0, 0, 1, 0).
        const Rational s = rng.nonzero_rational();
        if (rng.uniform(0, 5) == 0) {
          f = {0, 0, s, 0};
        } else {
          const Rational u = rng.rational();
          f = {s * u, s, -s * u * u * u, -s * u * u};
        }
        break;
      }
      default:
        break;  // zero cubic
    }
    Rational z = 0;
    if (options.nonzero_z_fraction > 0 && rng.unit() < options.nonzero_z_fraction) z = rng.nonzero_rational();
    out.push_back({f.a, f.b, f.c, f.d, z});
  }
  return out;
}

SweepRecord evaluate_sample(const TrialitySymmetricMap<Rational>& m) {
  const BinaryCubic f = BinaryCubic::from_map(m);
  return {classify(m), classify_by_multiplicity(f), morphism_rank(embed(m)),
          static_cast<int>(matrix_rank(minor_matrix(f))), discriminant(f) == 0};
}

std::vector<SweepRecord> sweep_serial(std::span<const TrialitySymmetricMap<Rational>> samples) {
  std::vector<SweepRecord> out;
  out.reserve(samples.size());
  for (const auto& m : samples) out.push_back(evaluate_sample(m));
  return out;
}

std::vector<SweepRecord> sweep_parallel(std::span<const TrialitySymmetricMap<Rational>> samples) {
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
  std::vector<SweepRecord> out(samples.size(), SweepRecord{OrbitLabel::O5, RootProfile::zero, 0, 0, true});
  // Each iteration only touches its own sample and output slot.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = evaluate_sample(samples[static_cast<std::size_t>(i)]);
  return out;
}

SweepSummary summarize(std::span<const TrialitySymmetricMap<Rational>> samples,
                       std::span<const SweepRecord> records) {
  if (samples.size() != records.size()) throw std::invalid_argument("sample/record count mismatch");
  SweepSummary s;
  s.samples = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& r = records[i];
    ++s.orbit_counts[r.orbit];
    if (samples[i].z != 0) continue;
    ++s.z_zero_samples;
    const bool rank_ok = (r.morphism_rank == 1) == (r.orbit == OrbitLabel::O3) &&
                         (r.morphism_rank == 0) == (r.orbit == OrbitLabel::O5) &&
                         (r.morphism_rank == 2) == (r.orbit == OrbitLabel::O1 || r.orbit == OrbitLabel::O2);
    const bool agree = stratum_of(r.profile) == r.orbit;
    if (!rank_ok) ++s.rank_violations;
    if (!agree) ++s.classifier_disagreements;
    if ((!rank_ok || !agree) && s.failing_indices.size() < 5) s.failing_indices.push_back(i);
  }
  return s;
}

}  // namespace g2deg
