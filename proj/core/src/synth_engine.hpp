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

#ifndef SCSYNTH_SYNTH_ENGINE_HPP
#define SCSYNTH_SYNTH_ENGINE_HPP

#include <vector>

#include "scs/sk.hpp"

namespace scs::detail {

/// Choice points of the recursion; the deterministic and Gibbs-sampled
/// synthesizers share one engine and differ only in this policy, which
/// makes the (K = 1, T = 0) degeneracy bit-exact.
class SynthPolicy {
 public:
  virtual ~SynthPolicy() = default;

  /// Net entry used as the level-0 approximation of `target`.
  virtual std::size_t select_base(const EpsilonNet& net,
                                  const Unitary2& target) = 0;

  /// Commutator pair for the level-`level` residual (level >= 1; `depth`
  /// is the total depth of the original call).
  virtual GcPair select_pair(const Unitary2& delta, int level, int depth) = 0;
};

struct SpineRecord {
  Unitary2 approx;
  std::size_t word_length = 0;
};

/// Recursive synthesis with a monotone guard (a level that does not
/// improve the projective distance keeps the previous word). When `spine`
/// is non-null it receives depth+1 records for the target's own refinement
/// sequence (levels 0..depth).
GateWord synthesize_recursive(const Unitary2& target, int depth,
                              const EpsilonNet& net, SynthPolicy& policy,
                              bool use_cache,
                              std::vector<SpineRecord>* spine);

}  // namespace scs::detail

#endif  // SCSYNTH_SYNTH_ENGINE_HPP
