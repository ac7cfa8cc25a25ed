#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "spinrep/quaternion.hpp"
#include "spinrep/rotation.hpp"

namespace spinrep {

using ComplexMatrix2 = Eigen::Matrix2cd;
using complexd = std::complex<double>;

/// Element of SU(2): u u* = I and det u = 1, both within 1e-9 at construction.
class SU2Element {
public:
    explicit SU2Element(const ComplexMatrix2& u);

    const ComplexMatrix2& value() const { return u_; }
    SU2Element operator-() const { return SU2Element(-u_, unchecked_tag{}); }

private:
    struct unchecked_tag {};
    SU2Element(const ComplexMatrix2& u, unchecked_tag) : u_(u) {}
    ComplexMatrix2 u_;
};

/// Pauli matrices sigma_1..sigma_3, plus sigma_4 = identity.
ComplexMatrix2 pauli(int j);

/// su(2) basis B_j = -i*sigma_j, j in {1,2,3}; [B_j, B_k] = 2 B_l cyclically.
/// The sign makes the one-parameter subgroups exp(theta B_j) cover the
/// right-handed rotations g_j with a uniform orientation.
ComplexMatrix2 su2_generator(int j);

/// Traceless Hermitian matrix X = sum_j x_j sigma_j; det X = -|x|^2.
ComplexMatrix2 hermitian_of_vector(const Eigen::Vector3d& x);

/// Embedding of the quaternions into M(2, C):
/// w + x i + y j + z k  ->  w E_2 - i (x sigma_1 + y sigma_2 + z sigma_3).
/// Multiplicative; unit quaternions land in SU(2); the induced conjugation
/// action on the sigma basis coincides with psi_prime.
ComplexMatrix2 quaternion_to_matrix(const Quaternion& q);

/// Covering homomorphism SU(2) -> SO(3): the matrix of x -> x' where
/// X(x') = u X(x) u*, expressed in the sigma basis. Kernel {+-I}.
RotationMatrix3 covering_map(const SU2Element& u);

/// One-parameter subgroups exp(theta B_j) of SU(2), closed form.
SU2Element one_param_su2(int j, double theta);

/// One-parameter rotation subgroups g_j(phi), closed form; satisfies
/// covering_map(one_param_su2(j, theta)) = one_param_so3(j, 2*theta).
RotationMatrix3 one_param_so3(int j, double phi);

/// so(3) basis A_j = d/dphi g_j(phi) at phi = 0; antisymmetric, and
/// [A_j, A_k] = A_l cyclically. The covering differential maps B_j/2 -> A_j.
Eigen::Matrix3d so3_generator(int j);

/// Both SU(2) preimages of a rotation under covering_map, ordered
/// consistently with rotation lift (first element maps from the lift
/// representative with nonnegative w). Throws NotARotation as lift does.
std::pair<SU2Element, SU2Element> spin_lift(const RotationMatrix3& r,
                                            double tolerance = 1e-6);

/// Weight multiset of a representation, read off the image M of the torus
/// generator B_3 (the derivative of theta -> pi(exp(theta B_3))).
/// Eigenvalues must be 2*i*k with k on the half-integer grid within 1e-6;
/// otherwise NotTorusGenerator.
struct WeightList {
    std::vector<double> weights;  // half-integers, sorted descending
    double highest() const { return weights.front(); }
};

WeightList weights_from_torus_generator(const Eigen::MatrixXcd& m);

/// Torus generator of the k-fold tensor power of the defining representation
/// of SU(2) (Kronecker sum of B_3 with itself, k factors; dimension 2^k).
Eigen::MatrixXcd pi2_tensor_power_generator(int k);

}  // namespace spinrep
