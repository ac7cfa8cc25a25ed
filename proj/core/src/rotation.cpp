#include "spinrep/rotation.hpp"

#include <cmath>

namespace spinrep {

namespace {

constexpr double kPi = 3.14159265358979323846;

PureQuaternion pure_of(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

Eigen::Vector3d vec_of(const Quaternion& q) { return {q.x, q.y, q.z}; }

// Sign convention shared by lift and axis_angle_of: nonnegative w first,
// w = 0 ties broken by the first nonzero vector coordinate being positive.
Quaternion canonical_sign(const Quaternion& q) {
    if (q.w > tol::unit) return q;
    if (q.w < -tol::unit) return -q;
    for (double c : {q.x, q.y, q.z}) {
        if (std::abs(c) > tol::unit) return c > 0 ? q : -q;
    }
    return q;
}

}  // namespace

AxisAngle::AxisAngle(const Eigen::Vector3d& axis_, double angle_) : axis(axis_), angle(angle_) {
    const double n = axis.norm();
    if (n <= tol::singular) {
        throw NearZeroQuaternion("AxisAngle: axis has near-zero length");
    }
    axis /= n;
}

bool is_rotation(const RotationMatrix3& r, double tolerance) {
    const double ortho = (r.transpose() * r - RotationMatrix3::Identity()).cwiseAbs().maxCoeff();
    return ortho <= tolerance && std::abs(r.determinant() - 1.0) <= tolerance;
}

RotationMatrix3 psi_prime(const UnitQuaternion& u) {
    const Quaternion& q = u.value();
    const Quaternion qi = inverse(q);
    RotationMatrix3 m;
    const Quaternion basis[3] = {Quaternion::unit_i(), Quaternion::unit_j(), Quaternion::unit_k()};
    for (int col = 0; col < 3; ++col) {
        m.col(col) = vec_of(q * basis[col] * qi);
    }
    return m;
}

RotationMatrix3 rodrigues(const AxisAngle& p) {
    return psi_prime(exp_pure(pure_of(p.axis) * (0.5 * p.angle)));
}

AxisAngle compose(const AxisAngle& p, const AxisAngle& q) {
    const Quaternion a = exp_pure(pure_of(p.axis) * (0.5 * p.angle)).value();
    const Quaternion b = exp_pure(pure_of(q.axis) * (0.5 * q.angle)).value();
    const Quaternion c = a * b;
    const Eigen::Vector3d v = vec_of(c);
    const double s = v.norm();
    if (s <= tol::singular) {
        // c = +-1: the product is the identity rotation (angle 0 or 2*pi,
        // which is principal 0). Axis is arbitrary; report e1.
        return AxisAngle(Eigen::Vector3d::UnitX(), 0.0);
    }
    double angle = 2.0 * std::atan2(s, c.w);  // in [0, 2*pi], sin(angle/2) >= 0
    if (angle >= 2.0 * kPi) angle -= 2.0 * kPi;
    return AxisAngle(v / s, angle);
}

std::pair<UnitQuaternion, UnitQuaternion> lift(const RotationMatrix3& r, double tolerance) {
    if (!is_rotation(r, tolerance)) {
        throw NotARotation("lift: matrix is not in SO(3) within tolerance");
    }
    // Shepperd extraction: branch on the largest of the four squared
    // coordinates to avoid cancellation.
    Quaternion q;
    const double t = r.trace();
    if (t > r(0, 0) && t > r(1, 1) && t > r(2, 2)) {
        double s = std::sqrt(t + 1.0) * 2.0;  // 4w
        q = {0.25 * s, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s, (r(1, 0) - r(0, 1)) / s};
    } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
        double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;  // 4x
        q = {(r(2, 1) - r(1, 2)) / s, 0.25 * s, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s};
    } else if (r(1, 1) >= r(2, 2)) {
        double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;  // 4y
        q = {(r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, 0.25 * s, (r(1, 2) + r(2, 1)) / s};
    } else {
        double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;  // 4z
        q = {(r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, 0.25 * s};
    }
    // the extraction inherits the matrix's off-manifold error; renormalize
    // before imposing the unit-type invariant
    const double n = norm(q);
    const Quaternion first = canonical_sign({q.w / n, q.x / n, q.y / n, q.z / n});
    UnitQuaternion u(first);
    return {u, -u};
}

AxisAngle axis_angle_of(const RotationMatrix3& r) {
    const Quaternion q = lift(r).first.value();  // w >= 0 up to the tie rule
    const Eigen::Vector3d v = vec_of(q);
    const double s = v.norm();
    if (s <= tol::singular) {
        return AxisAngle(Eigen::Vector3d::UnitX(), 0.0);
    }
    const double angle = 2.0 * std::atan2(s, std::abs(q.w));  // in [0, pi]
    return AxisAngle(v / s, angle);
}

}  // namespace spinrep
