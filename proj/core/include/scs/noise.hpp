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

#ifndef SCSYNTH_NOISE_HPP
#define SCSYNTH_NOISE_HPP

#include "scs/su2.hpp"

namespace scs {

/// Rotation axis used for the coherent over-rotation error.
enum class AxisPolicy { kGateAxis, kFixedX, kFixedY, kFixedZ };

/// Coherent over-rotation plus depolarizing noise. Over-rotation semantics:
/// every applied gate acquires a fixed extra rotation by alpha about its
/// own rotation axis (angle-additive); gates with rotation angle 0 receive
/// no coherent error. Depolarizing acts after each gate on the gate's
/// qubit(s).
struct NoiseModel {
  double overrotation_alpha = 0.0;
  double depolarizing_p = 0.0;
  AxisPolicy axis_policy = AxisPolicy::kGateAxis;

  bool is_noiseless() const {
    return overrotation_alpha == 0.0 && depolarizing_p == 0.0;
  }
};

/// The noisy realization of a single-qubit gate under the over-rotation
/// model (coherent part only).
Unitary2 noisy_gate(const Unitary2& ideal, const NoiseModel& noise);

}  // namespace scs

#endif  // SCSYNTH_NOISE_HPP
