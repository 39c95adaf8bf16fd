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

#include "scs/sim.hpp"

#include <stdexcept>

namespace scs {

namespace {

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("simulator: qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
}

void check_index(int n, int qubit) {
  if (qubit < 0 || qubit >= n) {
    throw std::out_of_range("simulator: qubit index " + std::to_string(qubit) +
                            " out of range for " + std::to_string(n) +
                            " qubits");
  }
}

// In-place single-qubit update of a dense vector of length 2^n.
void kernel_1q(Eigen::VectorXcd& v, const Eigen::Matrix2cd& m, int qubit) {
  const std::size_t dim = static_cast<std::size_t>(v.size());
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < dim; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; ++off) {
      std::size_t i0 = base + off;
      std::size_t i1 = i0 + bit;
      std::complex<double> a0 = v(static_cast<Eigen::Index>(i0));
      std::complex<double> a1 = v(static_cast<Eigen::Index>(i1));
      v(static_cast<Eigen::Index>(i0)) = m(0, 0) * a0 + m(0, 1) * a1;
      v(static_cast<Eigen::Index>(i1)) = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
}

void kernel_cnot(Eigen::VectorXcd& v, int control, int target) {
  const std::size_t dim = static_cast<std::size_t>(v.size());
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cbit) != 0 && (i & tbit) == 0) {
      std::swap(v(static_cast<Eigen::Index>(i)),
                v(static_cast<Eigen::Index>(i | tbit)));
    }
  }
}

void kernel_controlled_1q(Eigen::VectorXcd& v, const Eigen::Matrix2cd& m,
                          int control, int target) {
  const std::size_t dim = static_cast<std::size_t>(v.size());
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cbit) != 0 && (i & tbit) == 0) {
      std::size_t i1 = i | tbit;
      std::complex<double> a0 = v(static_cast<Eigen::Index>(i));
      std::complex<double> a1 = v(static_cast<Eigen::Index>(i1));
      v(static_cast<Eigen::Index>(i)) = m(0, 0) * a0 + m(0, 1) * a1;
      v(static_cast<Eigen::Index>(i1)) = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
}

}  // namespace

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
  check_qubits(n_);
  amp_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_);
  amp_(0) = 1.0;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t bits) {
  StateVector s(num_qubits);
  s.amp_(0) = 0.0;
  s.amp_(static_cast<Eigen::Index>(bits)) = 1.0;
  return s;
}

void StateVector::apply_1q(const Eigen::Matrix2cd& m, int qubit) {
  check_index(n_, qubit);
  kernel_1q(amp_, m, qubit);
}

void StateVector::apply_cnot(int control, int target) {
  check_index(n_, control);
  check_index(n_, target);
  if (control == target) {
    throw std::invalid_argument("apply_cnot: control == target");
  }
  kernel_cnot(amp_, control, target);
}

void StateVector::apply_controlled_1q(const Eigen::Matrix2cd& m, int control,
                                      int target) {
  check_index(n_, control);
  check_index(n_, target);
  if (control == target) {
    throw std::invalid_argument("apply_controlled_1q: control == target");
  }
  kernel_controlled_1q(amp_, m, control, target);
}

void StateVector::apply_diagonal(
    std::span<const std::complex<double>> phases) {
  if (phases.size() != dim()) {
    throw std::invalid_argument("apply_diagonal: wrong diagonal length");
  }
  for (std::size_t i = 0; i < phases.size(); ++i) {
    amp_(static_cast<Eigen::Index>(i)) *= phases[i];
  }
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::norm(amp_(static_cast<Eigen::Index>(i)));
  }
  return p;
}

DensityMatrix::DensityMatrix(int num_qubits) : n_(num_qubits) {
  check_qubits(n_);
  Eigen::Index d = Eigen::Index{1} << n_;
  rho_ = Eigen::MatrixXcd::Zero(d, d);
  rho_(0, 0) = 1.0;
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  DensityMatrix dm(psi.num_qubits());
  dm.rho_ = psi.amplitudes() * psi.amplitudes().adjoint();
  return dm;
}

void DensityMatrix::apply_1q(const Eigen::Matrix2cd& m, int qubit) {
  check_index(n_, qubit);
  // rho -> (U rho) U^dag: U on columns, conj(U) on rows.
  for (Eigen::Index c = 0; c < rho_.cols(); ++c) {
    Eigen::VectorXcd col = rho_.col(c);
    kernel_1q(col, m, qubit);
    rho_.col(c) = col;
  }
  Eigen::Matrix2cd mc = m.conjugate();
  for (Eigen::Index r = 0; r < rho_.rows(); ++r) {
    Eigen::VectorXcd row = rho_.row(r).transpose();
    kernel_1q(row, mc, qubit);
    rho_.row(r) = row.transpose();
  }
}

void DensityMatrix::apply_cnot(int control, int target) {
  check_index(n_, control);
  check_index(n_, target);
  if (control == target) {
    throw std::invalid_argument("apply_cnot: control == target");
  }
  for (Eigen::Index c = 0; c < rho_.cols(); ++c) {
    Eigen::VectorXcd col = rho_.col(c);
    kernel_cnot(col, control, target);
    rho_.col(c) = col;
  }
  for (Eigen::Index r = 0; r < rho_.rows(); ++r) {
    Eigen::VectorXcd row = rho_.row(r).transpose();
    kernel_cnot(row, control, target);
    rho_.row(r) = row.transpose();
  }
}

void DensityMatrix::apply_controlled_1q(const Eigen::Matrix2cd& m, int control,
                                        int target) {
  check_index(n_, control);
  check_index(n_, target);
  if (control == target) {
    throw std::invalid_argument("apply_controlled_1q: control == target");
  }
  for (Eigen::Index c = 0; c < rho_.cols(); ++c) {
    Eigen::VectorXcd col = rho_.col(c);
    kernel_controlled_1q(col, m, control, target);
    rho_.col(c) = col;
  }
  Eigen::Matrix2cd mc = m.conjugate();
  for (Eigen::Index r = 0; r < rho_.rows(); ++r) {
    Eigen::VectorXcd row = rho_.row(r).transpose();
    kernel_controlled_1q(row, mc, control, target);
    rho_.row(r) = row.transpose();
  }
}

void DensityMatrix::depolarize(int qubit, double p) {
  check_index(n_, qubit);
  if (p < 0 || p > 1) {
    throw std::invalid_argument("depolarize: p must be in [0, 1]");
  }
  if (p == 0) return;
  // (1-p) rho + p (rho + X rho X + Y rho Y + Z rho Z) / 4.
  DensityMatrix x = *this, y = *this, z = *this;
  Eigen::Matrix2cd mx = Unitary2::pauli_x().matrix();
  Eigen::Matrix2cd my = Unitary2::pauli_y().matrix();
  Eigen::Matrix2cd mz = Unitary2::pauli_z().matrix();
  x.apply_1q(mx, qubit);
  y.apply_1q(my, qubit);
  z.apply_1q(mz, qubit);
  rho_ = (1 - 0.75 * p) * rho_ +
         (p / 4) * (x.rho_ + y.rho_ + z.rho_);
}

void DensityMatrix::accumulate(const DensityMatrix& other, double weight) {
  if (other.n_ != n_) {
    throw std::invalid_argument("accumulate: dimension mismatch");
  }
  rho_ += weight * other.rho_;
}

double DensityMatrix::positivity_defect() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_);
  return es.eigenvalues().minCoeff();
}

std::vector<double> DensityMatrix::probabilities() const {
  std::vector<double> p(dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i))
               .real();
  }
  return p;
}

double DensityMatrix::fidelity_with(const StateVector& psi) const {
  if (psi.num_qubits() != n_) {
    throw std::invalid_argument("fidelity_with: dimension mismatch");
  }
  return (psi.amplitudes().adjoint() * rho_ * psi.amplitudes())(0, 0).real();
}

void apply_word(StateVector& state, const GateWord& word, const GateSet& gs,
                const NoiseModel& noise, int qubit) {
  if (noise.depolarizing_p > 0) {
    throw std::invalid_argument(
        "apply_word: depolarizing noise requires a DensityMatrix");
  }
  for (std::int32_t idx : word.indices()) {
    state.apply_unitary(noisy_gate(gs.gen(idx).unitary, noise), qubit);
  }
}

void apply_word(DensityMatrix& state, const GateWord& word, const GateSet& gs,
                const NoiseModel& noise, int qubit) {
  for (std::int32_t idx : word.indices()) {
    state.apply_unitary(noisy_gate(gs.gen(idx).unitary, noise), qubit);
    if (noise.depolarizing_p > 0) {
      state.depolarize(qubit, noise.depolarizing_p);
    }
  }
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  Eigen::MatrixXcd diff = a.rho() - b.rho();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  std::complex<double> ov = (a.amplitudes().adjoint() * b.amplitudes())(0, 0);
  double f = std::min(1.0, std::norm(ov));
  return std::sqrt(1.0 - f);
}

}  // namespace scs
