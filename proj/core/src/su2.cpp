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

#include "scs/su2.hpp"

#include <algorithm>
#include <stdexcept>

namespace scs {

namespace {

constexpr double kSignTol = 1e-12;
// Renormalize the quaternion after this many compositions; keeps the
// accumulated drift below 1e-12 across words of ~1e6 generators.
constexpr unsigned kRenormPeriod = 64;

}  // namespace

void Unitary2::canonicalize() {
  double n2 = q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3];
  // Skip the division when already unit to rounding; this keeps values that
  // round-trip through text formats bit-identical.
  if (std::abs(n2 - 1.0) > 1e-12) {
    double inv = 1.0 / std::sqrt(n2);
    for (double& c : q_) c *= inv;
  }
  for (double c : q_) {
    if (std::abs(c) > kSignTol) {
      if (c < 0) {
        for (double& cc : q_) cc = -cc;
      }
      break;
    }
  }
}

Unitary2 Unitary2::from_quaternion(double w, double x, double y, double z) {
  Unitary2 u({w, x, y, z}, 0);
  double n2 = w * w + x * x + y * y + z * z;
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw std::invalid_argument("Unitary2: quaternion must be nonzero finite");
  }
  u.canonicalize();
  return u;
}

Unitary2 Unitary2::from_matrix(const Eigen::Matrix2cd& m) {
  Eigen::Matrix2cd defect = m * m.adjoint() - Eigen::Matrix2cd::Identity();
  if (defect.cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("Unitary2: matrix is not unitary");
  }
  std::complex<double> det = m.determinant();
  Eigen::Matrix2cd su = m / std::sqrt(det);
  double w = 0.5 * (su(0, 0).real() + su(1, 1).real());
  double x = -0.5 * (su(0, 1).imag() + su(1, 0).imag());
  double y = 0.5 * (su(1, 0).real() - su(0, 1).real());
  double z = 0.5 * (su(1, 1).imag() - su(0, 0).imag());
  return from_quaternion(w, x, y, z);
}

Unitary2 Unitary2::rotation(const Vec3& axis, double angle) {
  double n = norm(axis);
  if (n < 1e-15) {
    if (std::abs(angle) < 1e-15) return identity();
    throw std::invalid_argument("Unitary2::rotation: zero axis");
  }
  double c = std::cos(angle / 2), s = std::sin(angle / 2) / n;
  return from_quaternion(c, s * axis[0], s * axis[1], s * axis[2]);
}

Unitary2 Unitary2::h() {
  return rotation({1, 0, 1}, kPi);
}

Eigen::Matrix2cd Unitary2::matrix() const {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  m(0, 0) = C(q_[0], -q_[3]);
  m(0, 1) = C(-q_[2], -q_[1]);
  m(1, 0) = C(q_[2], -q_[1]);
  m(1, 1) = C(q_[0], q_[3]);
  return m;
}

Unitary2 Unitary2::dagger() const {
  Unitary2 r({q_[0], -q_[1], -q_[2], -q_[3]}, gen_);
  r.canonicalize();
  return r;
}

Unitary2 Unitary2::operator*(const Unitary2& rhs) const {
  const auto& a = q_;
  const auto& b = rhs.q_;
  std::array<double, 4> p{
      a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
      a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
      a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
      a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  unsigned gen = gen_ + rhs.gen_ + 1;
  Unitary2 r(p, gen);
  if (gen >= kRenormPeriod) {
    double n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
    double inv = 1.0 / std::sqrt(n2);
    for (double& c : r.q_) c *= inv;
    r.gen_ = 0;
  }
  // Sign canonicalization only; the norm is within rounding of 1.
  for (double c : r.q_) {
    if (std::abs(c) > kSignTol) {
      if (c < 0) {
        for (double& cc : r.q_) cc = -cc;
      }
      break;
    }
  }
  return r;
}

double Unitary2::unitarity_defect() const {
  double n2 = q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3];
  return std::abs(n2 - 1.0);
}

bool Unitary2::approx_equal(const Unitary2& other, double tol) const {
  return op_distance_raw(*this, other) <= tol;
}

double op_distance_raw(const Unitary2& a, const Unitary2& b) {
  const auto& p = a.quat();
  const auto& q = b.quat();
  double s = 0;
  for (int i = 0; i < 4; ++i) {
    double d = p[i] - q[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double op_distance(const Unitary2& a, const Unitary2& b) {
  const auto& p = a.quat();
  const auto& q = b.quat();
  double sm = 0, sp = 0;
  for (int i = 0; i < 4; ++i) {
    double dm = p[i] - q[i];
    double dp = p[i] + q[i];
    sm += dm * dm;
    sp += dp * dp;
  }
  return std::sqrt(std::min(sm, sp));
}

double frob_distance(const Unitary2& a, const Unitary2& b) {
  Eigen::Matrix2cd d = a.matrix() - b.matrix();
  return d.norm();
}

AxisAngle to_axis_angle(const Unitary2& u) {
  const auto& q = u.quat();
  Vec3 v{q[1], q[2], q[3]};
  double n = norm(v);
  double angle = 2.0 * std::atan2(n, q[0]);
  if (n < 1e-15) return {{0, 0, 1}, 0.0};
  return {{v[0] / n, v[1] / n, v[2] / n}, angle};
}

Unitary2 from_axis_angle(const AxisAngle& aa) {
  return Unitary2::rotation(aa.axis, aa.angle);
}

LieVector log_map(const Unitary2& u) {
  AxisAngle aa = to_axis_angle(u);
  return {{aa.angle * aa.axis[0], aa.angle * aa.axis[1],
           aa.angle * aa.axis[2]}};
}

Unitary2 exp_map(const LieVector& vec) {
  double n = vec.norm();
  if (n < 1e-300) return Unitary2::identity();
  return Unitary2::rotation(vec.v, n);
}

}  // namespace scs
