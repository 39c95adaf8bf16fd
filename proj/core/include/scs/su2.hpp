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

#ifndef SCSYNTH_SU2_HPP
#define SCSYNTH_SU2_HPP

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace scs {

inline constexpr double kPi = 3.14159265358979323846;

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// An SU(2) element stored as a unit quaternion (w, x, y, z) with
///   U = w*I - i*(x*X + y*Y + z*Z).
///
/// Every constructor and operation returns the canonical representative of
/// the +/-U pair: the first component whose magnitude exceeds 1e-12 is made
/// positive. This fixes the global phase once, so raw (non-projective)
/// distances between Unitary2 values are deterministic.
///
/// A rotation by `angle` about unit axis n corresponds to
/// (cos(angle/2), sin(angle/2)*n), i.e. U = exp(-i*angle/2 * n.sigma).
class Unitary2 {
 public:
  Unitary2() : q_{1.0, 0.0, 0.0, 0.0}, gen_(0) {}

  /// From quaternion components; normalizes and canonicalizes the sign.
  static Unitary2 from_quaternion(double w, double x, double y, double z);

  /// From a 2x2 unitary matrix (any global phase); divides by sqrt(det) and
  /// canonicalizes. Throws std::invalid_argument if the matrix is not
  /// unitary to 1e-9.
  static Unitary2 from_matrix(const Eigen::Matrix2cd& m);

  /// Rotation by `angle` about `axis` (need not be normalized; must be
  /// nonzero unless angle is 0).
  static Unitary2 rotation(const Vec3& axis, double angle);

  static Unitary2 identity() { return Unitary2(); }
  static Unitary2 rx(double angle) { return rotation({1, 0, 0}, angle); }
  static Unitary2 ry(double angle) { return rotation({0, 1, 0}, angle); }
  static Unitary2 rz(double angle) { return rotation({0, 0, 1}, angle); }
  static Unitary2 pauli_x() { return rx(kPi); }
  static Unitary2 pauli_y() { return ry(kPi); }
  static Unitary2 pauli_z() { return rz(kPi); }
  static Unitary2 h();
  static Unitary2 t() { return rz(kPi / 4); }
  static Unitary2 tdg() { return rz(-kPi / 4); }
  static Unitary2 s() { return rz(kPi / 2); }
  static Unitary2 sdg() { return rz(-kPi / 2); }

  const std::array<double, 4>& quat() const { return q_; }
  Eigen::Matrix2cd matrix() const;

  Unitary2 dagger() const;
  Unitary2 operator*(const Unitary2& rhs) const;  // this applied after rhs

  /// Max-entry deviation of U*U^dag from the identity.
  double unitarity_defect() const;

  bool approx_equal(const Unitary2& other, double tol = 1e-12) const;

 private:
  Unitary2(const std::array<double, 4>& q, unsigned gen) : q_(q), gen_(gen) {}
  void canonicalize();

  std::array<double, 4> q_;
  unsigned gen_;  // compositions since last renormalization
};

inline Unitary2 multiply(const Unitary2& a, const Unitary2& b) {
  return a * b;
}
inline Unitary2 dagger(const Unitary2& u) { return u.dagger(); }

/// Projective operator-norm distance on PSU(2):
/// min over global phase of ||A - e^{i phi} B||_op. Equals the Euclidean
/// quaternion distance min(|qa - qb|, |qa + qb|).
double op_distance(const Unitary2& a, const Unitary2& b);

/// Operator-norm distance of the canonical (phase-fixed) representatives.
double op_distance_raw(const Unitary2& a, const Unitary2& b);

/// Raw Frobenius distance ||A - B||_F of the canonical representatives.
/// For SU(2), equals sqrt(2) * op_distance_raw.
double frob_distance(const Unitary2& a, const Unitary2& b);

/// Unit axis and rotation angle. At angle 0 the axis is (0, 0, 1) by
/// convention. The canonical sign fix keeps the angle in [0, pi].
struct AxisAngle {
  Vec3 axis;
  double angle;
};

AxisAngle to_axis_angle(const Unitary2& u);
Unitary2 from_axis_angle(const AxisAngle& aa);

/// Lie-algebra coordinates: v = angle * axis, so that
/// exp_map(v) = exp(-i/2 * v.sigma). Principal branch: |v| <= pi; at the
/// cut locus (angle pi) the axis follows the canonical sign choice.
struct LieVector {
  Vec3 v{0, 0, 0};
  double norm() const { return scs::norm(v); }
};

LieVector log_map(const Unitary2& u);
Unitary2 exp_map(const LieVector& v);

}  // namespace scs

#endif  // SCSYNTH_SU2_HPP
