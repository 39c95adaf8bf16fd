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

#ifndef SCSYNTH_SIM_HPP
#define SCSYNTH_SIM_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "scs/channel.hpp"
#include "scs/gate_set.hpp"
#include "scs/noise.hpp"

namespace scs {

inline constexpr int kMaxQubits = 12;

/// Dense state vector over n <= 12 qubits, qubit 0 the least significant
/// bit of the basis index.
class StateVector {
 public:
  explicit StateVector(int num_qubits);
  static StateVector basis(int num_qubits, std::uint64_t bits);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  std::complex<double> amplitude(std::uint64_t basis) const {
    return amp_(static_cast<Eigen::Index>(basis));
  }

  void apply_1q(const Eigen::Matrix2cd& m, int qubit);
  void apply_unitary(const Unitary2& u, int qubit) {
    apply_1q(u.matrix(), qubit);
  }
  void apply_cnot(int control, int target);
  /// Applies m to the target qubit on the control = 1 subspace.
  void apply_controlled_1q(const Eigen::Matrix2cd& m, int control, int target);
  /// Multiplies amplitude x by phases[x] (diagonal operator).
  void apply_diagonal(std::span<const std::complex<double>> phases);

  double norm() const { return amp_.norm(); }
  std::vector<double> probabilities() const;

 private:
  int n_;
  Eigen::VectorXcd amp_;
};

/// Dense density matrix over n <= 12 qubits.
class DensityMatrix {
 public:
  explicit DensityMatrix(int num_qubits);  // |0...0><0...0|
  static DensityMatrix from_state(const StateVector& psi);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  const Eigen::MatrixXcd& rho() const { return rho_; }

  void apply_1q(const Eigen::Matrix2cd& m, int qubit);
  void apply_unitary(const Unitary2& u, int qubit) {
    apply_1q(u.matrix(), qubit);
  }
  void apply_cnot(int control, int target);
  void apply_controlled_1q(const Eigen::Matrix2cd& m, int control, int target);
  /// rho -> (1-p) rho + p (I/2 (x) tr_q rho) on the given qubit.
  void depolarize(int qubit, double p);

  void accumulate(const DensityMatrix& other, double weight);
  void scale(double s) { rho_ *= s; }

  double trace() const { return rho_.trace().real(); }
  /// Most negative eigenvalue (>= -1e-10 for a physical state).
  double positivity_defect() const;
  std::vector<double> probabilities() const;
  /// <psi| rho |psi>.
  double fidelity_with(const StateVector& psi) const;

 private:
  int n_;
  Eigen::MatrixXcd rho_;
};

/// Applies a compiled word (in word order) to one qubit of the state.
/// Over-rotation noise only; depolarizing noise needs the density-matrix
/// overload and throws std::invalid_argument here.
void apply_word(StateVector& state, const GateWord& word, const GateSet& gs,
                const NoiseModel& noise, int qubit);
void apply_word(DensityMatrix& state, const GateWord& word, const GateSet& gs,
                const NoiseModel& noise, int qubit);

/// (1/2) ||a - b||_1.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
/// Pure-state special case: sqrt(1 - |<a|b>|^2).
double trace_distance(const StateVector& a, const StateVector& b);

}  // namespace scs

#endif  // SCSYNTH_SIM_HPP
