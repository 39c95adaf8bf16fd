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

#ifndef SCSYNTH_CHANNEL_HPP
#define SCSYNTH_CHANNEL_HPP

#include <span>

#include <Eigen/Dense>

#include "scs/su2.hpp"

namespace scs {

/// Single-qubit channel in Pauli-transfer-matrix form:
/// R_ij = tr(sigma_i Lambda(sigma_j)) / 2 over (I, X, Y, Z).
/// Trace preservation is the first row (1, 0, 0, 0).
class Channel1Q {
 public:
  Channel1Q() : ptm_(Eigen::Matrix4d::Identity()) {}
  explicit Channel1Q(const Eigen::Matrix4d& ptm) : ptm_(ptm) {}

  static Channel1Q identity() { return Channel1Q(); }
  static Channel1Q from_unitary(const Unitary2& u);
  /// rho -> (1-p) rho + p I/2, i.e. PTM diag(1, 1-p, 1-p, 1-p).
  static Channel1Q depolarizing(double p);

  const Eigen::Matrix4d& ptm() const { return ptm_; }

  /// Composition: `after` applied after this channel.
  Channel1Q then(const Channel1Q& after) const {
    return Channel1Q(after.ptm_ * ptm_);
  }

  /// Choi matrix (trace normalized to 1).
  Eigen::Matrix4cd choi() const;

  /// Most negative Choi eigenvalue, >= -1e-10 for a CP channel.
  double cp_defect() const;

  bool is_trace_preserving(double tol = 1e-12) const;

  /// Channel applied to a Bloch vector (with the unital offset).
  Eigen::Vector3d apply_bloch(const Eigen::Vector3d& r) const;

 private:
  Eigen::Matrix4d ptm_;
};

/// Average over conjugation by the four Paulis; zeroes every off-diagonal
/// PTM entry exactly and preserves the diagonal exactly.
Channel1Q pauli_twirl(const Channel1Q& ch);

/// Arithmetic PTM mean (channel mixtures are affine in PTM form).
Channel1Q average_channel(std::span<const Channel1Q> members);

/// Coherent/incoherent decomposition of the error channel E = ch o ideal^-1:
/// polar-decompose its 3x3 Bloch block M = O * S; coherent_angle is the
/// rotation angle of the special-orthogonal factor O and
/// incoherent_infidelity = 1 - tr(S)/3. A fully depolarized block yields
/// coherent_angle 0.
struct ErrorSplit {
  double coherent_angle = 0;
  double incoherent_infidelity = 0;
};

ErrorSplit split_error(const Channel1Q& ch, const Unitary2& ideal);

/// Process fidelity in the entanglement-fidelity convention:
/// F = tr(R_ideal^T R_ch) / 4. Equals 1 iff the channel is the ideal
/// unitary; a depolarizing(p) error gives 1 - 3p/4.
double process_fidelity(const Channel1Q& ch, const Unitary2& ideal);

}  // namespace scs

#endif  // SCSYNTH_CHANNEL_HPP
