#pragma once

#include <cmath>

#include "spinrep/errors.hpp"

namespace spinrep {

/// Quaternion w + x*i + y*j + z*k with real double coordinates.
///
/// Values are plain coordinates; every operation is a pure function and the
/// algebra follows the fundamental formula i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
    static Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
};

/// Element of the pure (trace-free) subspace; embeds with w = 0 exactly.
struct PureQuaternion {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Quaternion embed() const { return {0.0, x, y, z}; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    PureQuaternion operator*(double s) const { return {x * s, y * s, z * s}; }
    PureQuaternion operator+(const PureQuaternion& o) const { return {x + o.x, y + o.y, z + o.z}; }
};

inline Quaternion multiply(const Quaternion& a, const Quaternion& b) {
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return multiply(a, b); }

inline Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm(const Quaternion& q) {
    return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

/// Multiplicative inverse conj(q)/|q|^2; rejects inputs with |q| <= 1e-12.
Quaternion inverse(const Quaternion& q);

/// Unit-norm quaternion. Construction accepts |q| = 1 within 1e-9 and
/// renormalizes, so stored values drift from the sphere by at most ~1e-16.
class UnitQuaternion {
public:
    explicit UnitQuaternion(const Quaternion& q);

    const Quaternion& value() const { return q_; }
    UnitQuaternion operator-() const { return UnitQuaternion(-q_, unchecked_tag{}); }

private:
    struct unchecked_tag {};
    UnitQuaternion(const Quaternion& q, unchecked_tag) : q_(q) {}
    Quaternion q_;
};

/// Closed-form exponential of a pure quaternion:
/// exp(phi*w) = cos(phi) + sin(phi)*w with phi = |v|, w = v/|v|.
/// v = 0 maps to 1 (the continuous limit); the sin(phi)/phi factor uses a
/// Taylor guard below |v| < 1e-6.
UnitQuaternion exp_pure(const PureQuaternion& v);

/// True iff q is a pure unit quaternion (|q| = 1 and w = 0 within 1e-9),
/// equivalently q^2 = -1 within tolerance.
bool is_pure_unit(const Quaternion& q);

namespace tol {
inline constexpr double unit = 1e-9;       // membership tests
inline constexpr double algebraic = 1e-12; // algebraic identities
inline constexpr double singular = 1e-12;  // inversion guard
}  // namespace tol

}  // namespace spinrep
