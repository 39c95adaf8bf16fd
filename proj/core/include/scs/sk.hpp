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

#ifndef SCSYNTH_SK_HPP
#define SCSYNTH_SK_HPP

#include <vector>

#include "scs/epsilon_net.hpp"

namespace scs {

struct GcPair {
  Unitary2 v, w;
};

/// Balanced group-commutator decomposition: returns (V, W) with
/// V W V^dag W^dag = delta to ~1e-12 and the two factors rotations by the
/// same angle about conjugated perpendicular axes, so that
/// ||V - I||, ||W - I|| ~ 0.71 * sqrt(||delta - I||).
///
/// `split_angle` rotates the perpendicular split frame about the delta axis
/// before alignment; every value yields an exact decomposition, giving a
/// one-parameter family of alternatives (used by the stochastic layer).
///
/// Requires op_distance(delta, I) < 0.5; throws std::domain_error otherwise.
GcPair gc_decompose(const Unitary2& delta, double split_angle = 0.0);

/// Solves sin(theta/2) = 2 sin^2(phi/2) sqrt(1 - sin^4(phi/2)) for the
/// balanced commutator rotation angle phi, by bisection to 1e-14.
double balanced_commutator_angle(double theta);

struct SkParams {
  int depth = 0;
  const EpsilonNet* net = nullptr;
  /// Optional memoization of sub-syntheses keyed by quantized unitary.
  /// Off by default; the stochastic layer never uses it.
  bool use_cache = false;
};

/// Deterministic Dawson-Nielsen recursion over the net, with a monotone
/// guard: a level whose commutator correction does not improve the
/// projective distance keeps the previous level's word, so the per-level
/// residual trace never increases.
GateWord sk_synthesize(const Unitary2& target, const SkParams& params);

struct LevelRecord {
  double residual = 0;        // projective op_distance to the target
  std::size_t word_length = 0;
};

/// Per-level (residual, word length) along the recursion spine;
/// record k describes the depth-k approximation (depth+1 records).
std::vector<LevelRecord> synth_trace(const Unitary2& target,
                                     const SkParams& params);

/// Nominal contraction constant of the default net, measured on random
/// targets; used by depth_for_eps predictions.
inline constexpr double kContractionNominal = 1.0;

/// Smallest depth whose predicted residual eps_k = c * eps_{k-1}^{3/2}
/// (seeded at eps0) is <= eps. Throws std::domain_error when the
/// contraction precondition c^2 * eps0 >= 1 fails (net too coarse).
int depth_for_eps(double eps, double eps0,
                  double contraction_c = kContractionNominal);

}  // namespace scs

#endif  // SCSYNTH_SK_HPP
