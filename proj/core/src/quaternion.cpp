#include "spinrep/quaternion.hpp"

#include <cmath>

namespace spinrep {

Quaternion inverse(const Quaternion& q) {
    const double n = norm(q);
    if (n <= tol::singular) {
        throw NearZeroQuaternion("inverse: |q| <= 1e-12");
    }
    const double n2 = n * n;
    const Quaternion c = conjugate(q);
    return {c.w / n2, c.x / n2, c.y / n2, c.z / n2};
}

UnitQuaternion::UnitQuaternion(const Quaternion& q) : q_(q) {
    const double n = norm(q);
    if (std::abs(n - 1.0) > tol::unit) {
        throw NotUnitQuaternion("UnitQuaternion: |q| deviates from 1 by more than 1e-9");
    }
    q_.w /= n;
    q_.x /= n;
    q_.y /= n;
    q_.z /= n;
}

UnitQuaternion exp_pure(const PureQuaternion& v) {
    const double phi = v.norm();
    // sin(phi)/phi with a series guard against cancellation near 0.
    double sinc;
    if (phi < 1e-6) {
        const double p2 = phi * phi;
        sinc = 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
    } else {
        sinc = std::sin(phi) / phi;
    }
    return UnitQuaternion({std::cos(phi), sinc * v.x, sinc * v.y, sinc * v.z});
}

bool is_pure_unit(const Quaternion& q) {
    return std::abs(norm(q) - 1.0) <= tol::unit && std::abs(q.w) <= tol::unit;
}

}  // namespace spinrep
