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

#include "scs/channel.hpp"

#include <stdexcept>

namespace scs {

Channel1Q Channel1Q::from_unitary(const Unitary2& u) {
  const auto& q = u.quat();
  double w = q[0], x = q[1], y = q[2], z = q[3];
  Eigen::Matrix4d r = Eigen::Matrix4d::Identity();
  r(1, 1) = 1 - 2 * (y * y + z * z);
  r(1, 2) = 2 * (x * y - w * z);
  r(1, 3) = 2 * (x * z + w * y);
  r(2, 1) = 2 * (x * y + w * z);
  r(2, 2) = 1 - 2 * (x * x + z * z);
  r(2, 3) = 2 * (y * z - w * x);
  r(3, 1) = 2 * (x * z - w * y);
  r(3, 2) = 2 * (y * z + w * x);
  r(3, 3) = 1 - 2 * (x * x + y * y);
  return Channel1Q(r);
}

Channel1Q Channel1Q::depolarizing(double p) {
  if (p < 0 || p > 1) {
    throw std::invalid_argument("depolarizing: p must be in [0, 1]");
  }
  Eigen::Matrix4d r = Eigen::Matrix4d::Identity();
  r(1, 1) = r(2, 2) = r(3, 3) = 1 - p;
  return Channel1Q(r);
}

Eigen::Matrix4cd Channel1Q::choi() const {
  using C = std::complex<double>;
  Eigen::Matrix2cd sigma[4];
  sigma[0] = Eigen::Matrix2cd::Identity();
  sigma[1] << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
  sigma[2] << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
  sigma[3] << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);

  Eigen::Matrix4cd choi = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      Eigen::Matrix2cd ekl = Eigen::Matrix2cd::Zero();
      ekl(k, l) = 1.0;
      // Pauli coefficients of E_kl, then the channel action.
      Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
      for (int i = 0; i < 4; ++i) {
        C acc(0, 0);
        for (int j = 0; j < 4; ++j) {
          C cj = (sigma[j] * ekl).trace();
          acc += ptm_(i, j) * cj;
        }
        out += 0.5 * acc * sigma[i];
      }
      // J = (1/2) sum_kl Lambda(E_kl) (x) E_kl, trace-1 normalized.
      choi.block<2, 2>(2 * k, 2 * l) += 0.5 * out;
    }
  }
  return choi;
}

double Channel1Q::cp_defect() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(choi());
  return es.eigenvalues().minCoeff();
}

bool Channel1Q::is_trace_preserving(double tol) const {
  Eigen::RowVector4d first = ptm_.row(0);
  return std::abs(first(0) - 1.0) <= tol && std::abs(first(1)) <= tol &&
         std::abs(first(2)) <= tol && std::abs(first(3)) <= tol;
}

Eigen::Vector3d Channel1Q::apply_bloch(const Eigen::Vector3d& r) const {
  Eigen::Vector4d v(1.0, r(0), r(1), r(2));
  Eigen::Vector4d out = ptm_ * v;
  return out.tail<3>();
}

Channel1Q pauli_twirl(const Channel1Q& ch) {
  // PTM signs of conjugation by I, X, Y, Z.
  static const double sign[4][4] = {{1, 1, 1, 1},
                                    {1, 1, -1, -1},
                                    {1, -1, 1, -1},
                                    {1, -1, -1, 1}};
  Eigen::Matrix4d acc = Eigen::Matrix4d::Zero();
  for (int p = 0; p < 4; ++p) {
    Eigen::Matrix4d term;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        term(i, j) = sign[p][i] * ch.ptm()(i, j) * sign[p][j];
      }
    }
    acc += term;
  }
  return Channel1Q(acc / 4.0);
}

Channel1Q average_channel(std::span<const Channel1Q> members) {
  if (members.empty()) {
    throw std::invalid_argument("average_channel: empty member list");
  }
  Eigen::Matrix4d acc = Eigen::Matrix4d::Zero();
  for (const Channel1Q& ch : members) acc += ch.ptm();
  return Channel1Q(acc / static_cast<double>(members.size()));
}

ErrorSplit split_error(const Channel1Q& ch, const Unitary2& ideal) {
  // The ideal unitary's PTM block is orthogonal, so its inverse is the
  // transpose.
  Eigen::Matrix4d err =
      ch.ptm() * Channel1Q::from_unitary(ideal).ptm().transpose();
  Eigen::Matrix3d m = err.block<3, 3>(1, 1);

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues().maxCoeff() < 1e-12) {
    return {0.0, 1.0 - m.trace() / 3.0};
  }
  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  double flip = (u * v.transpose()).determinant() < 0 ? -1.0 : 1.0;
  Eigen::Vector3d d(1.0, 1.0, flip);
  Eigen::Matrix3d o = u * d.asDiagonal() * v.transpose();
  Eigen::Matrix3d s =
      v * (d.cwiseProduct(svd.singularValues())).asDiagonal() * v.transpose();

  double ctheta = std::clamp((o.trace() - 1.0) / 2.0, -1.0, 1.0);
  ErrorSplit split;
  split.coherent_angle = std::acos(ctheta);
  split.incoherent_infidelity = 1.0 - s.trace() / 3.0;
  return split;
}

double process_fidelity(const Channel1Q& ch, const Unitary2& ideal) {
  return (Channel1Q::from_unitary(ideal).ptm().transpose() * ch.ptm())
             .trace() /
         4.0;
}

}  // namespace scs
