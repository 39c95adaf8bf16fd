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

#ifndef SCSYNTH_RC_HPP
#define SCSYNTH_RC_HPP

#include <span>

#include "scs/channel.hpp"
#include "scs/epsilon_net.hpp"
#include "scs/noise.hpp"
#include "scs/rng.hpp"

namespace scs {

/// PTM of the noisy implementation of a compiled single-qubit word: gates
/// applied in word order, each as its over-rotated unitary followed by the
/// depolarizing channel. Noiseless words give a unitary (orthogonal-block)
/// channel.
Channel1Q word_channel(const GateWord& word, const GateSet& gs,
                       const NoiseModel& noise);

/// PTM mean of the member channels.
Channel1Q average_channel(std::span<const GateWord> words, const GateSet& gs,
                          const NoiseModel& noise);

enum class DressMode {
  /// Dress every hard (t_weight > 0) gate g as Q g P with P a fresh
  /// uniformly random Pauli and Q = g P g^dag emitted as an exact Clifford
  /// composite word. The ideal unitary is preserved exactly.
  kPerHardGate,
  /// Draw one global Pauli frame P, prepend it, and compensate with
  /// C = U P U^dag re-synthesized deterministically over `net`; the ideal
  /// unitary is preserved to the re-synthesis accuracy.
  kGlobalFrameResynth,
};

struct DressOptions {
  DressMode mode = DressMode::kPerHardGate;
  const EpsilonNet* net = nullptr;  // required by kGlobalFrameResynth
  int resynth_depth = 3;
};

/// Randomized-compilation dressing: a logically equivalent word with random
/// Pauli frames inserted and compensated. Requires the gate set to provide
/// X, Y, Z (as generators or composites).
GateWord dress_word(const GateWord& word, const GateSet& gs, Rng& rng,
                    const DressOptions& opts = {});

}  // namespace scs

#endif  // SCSYNTH_RC_HPP
