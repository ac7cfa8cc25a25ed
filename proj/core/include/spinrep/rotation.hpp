#pragma once

#include <Eigen/Dense>
#include <utility>

#include "spinrep/quaternion.hpp"

namespace spinrep {

using RotationMatrix3 = Eigen::Matrix3d;

/// Rotation given by a unit axis and an unrestricted angle in radians.
struct AxisAngle {
    Eigen::Vector3d axis;
    double angle = 0.0;

    AxisAngle(const Eigen::Vector3d& axis_, double angle_);
};

/// Frobenius-style validity check: R^T R = I and det R = 1 within tol.
bool is_rotation(const RotationMatrix3& r, double tolerance = 1e-9);

/// Conjugation action of a unit quaternion on the pure subspace, expressed
/// in the (i, j, k) basis: columns are the images of i, j, k under
/// x -> u x u^{-1}. A group homomorphism onto SO(3) with kernel {+-1}.
RotationMatrix3 psi_prime(const UnitQuaternion& u);

/// Axis-angle rotation, computed as psi_prime(exp_pure(angle/2 * axis)).
RotationMatrix3 rodrigues(const AxisAngle& p);

/// Axis-angle of the product rotation, via the quaternion product of the
/// half-angle exponentials. The returned angle is principal in [0, 2*pi);
/// a degenerate product (identity rotation) reports (0, e1).
AxisAngle compose(const AxisAngle& p, const AxisAngle& q);

/// The two unit-quaternion preimages {u, -u} of a rotation matrix.
/// The representative with nonnegative w is listed first; a w = 0 tie is
/// broken by making the first nonzero vector coordinate positive.
/// Throws NotARotation when the orthogonality/determinant invariants are
/// violated beyond `tolerance` (default 1e-6).
std::pair<UnitQuaternion, UnitQuaternion> lift(const RotationMatrix3& r,
                                               double tolerance = 1e-6);

/// Principal axis-angle (angle in [0, pi]) with rodrigues(result) = R.
/// The identity rotation reports (0, e1); at angle pi the axis sign makes
/// the first nonzero coordinate positive.
AxisAngle axis_angle_of(const RotationMatrix3& r);

inline Eigen::Vector3d rotate_vector(const RotationMatrix3& r, const Eigen::Vector3d& v) {
    return r * v;
}

}  // namespace spinrep
