// Copyright 2026 The scsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCSYNTH_RNG_HPP
#define SCSYNTH_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "scs/su2.hpp"

namespace scs {

/// splitmix64 mixing step. Used to derive independent per-run seeds from a
/// master seed: derive_seed(master, i) = splitmix64(master + (i+1)*GOLDEN).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Deterministic random source. The engine is std::mt19937_64 (its output
/// sequence is pinned by the standard); all distributions are implemented
/// here rather than with std:: distributions, whose streams vary across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Marsaglia polar (no cached spare, so the draw
  /// count per call is variable but the stream is reproducible).
  double normal() {
    for (;;) {
      double u = 2.0 * uniform() - 1.0;
      double v = 2.0 * uniform() - 1.0;
      double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) {
        return u * std::sqrt(-2.0 * std::log(s) / s);
      }
    }
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling to avoid modulo bias.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;) {
      std::uint64_t r = eng_();
      if (r < limit) return r % n;
    }
  }

  /// Uniformly distributed unit 3-vector.
  Vec3 unit_vector() {
    for (;;) {
      Vec3 v{2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0,
             2.0 * uniform() - 1.0};
      double n2 = dot(v, v);
      if (n2 > 1e-12 && n2 <= 1.0) {
        double inv = 1.0 / std::sqrt(n2);
        return {v[0] * inv, v[1] * inv, v[2] * inv};
      }
    }
  }

  /// Haar-random SU(2) element (uniform unit quaternion).
  Unitary2 haar_su2() {
    for (;;) {
      double w = normal(), x = normal(), y = normal(), z = normal();
      double n2 = w * w + x * x + y * y + z * z;
      if (n2 > 1e-12) return Unitary2::from_quaternion(w, x, y, z);
    }
  }

  /// Index sampled with probability weights[i] / sum(weights).
  std::size_t categorical(std::span<const double> weights) {
    double total = 0;
    for (double w : weights) total += w;
    double r = uniform() * total;
    double acc = 0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (r < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace scs

#endif  // SCSYNTH_RNG_HPP
