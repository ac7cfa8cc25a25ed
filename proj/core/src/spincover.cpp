#include "spinrep/spincover.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>

namespace spinrep {

namespace {
const complexd kI(0.0, 1.0);
}

SU2Element::SU2Element(const ComplexMatrix2& u) : u_(u) {
    const double unitary = (u * u.adjoint() - ComplexMatrix2::Identity()).cwiseAbs().maxCoeff();
    const double det_dev = std::abs(u.determinant() - complexd(1.0, 0.0));
    if (unitary > tol::unit || det_dev > tol::unit) {
        throw NotUnitQuaternion("SU2Element: u u* = I or det u = 1 violated beyond 1e-9");
    }
}

ComplexMatrix2 pauli(int j) {
    ComplexMatrix2 s;
    switch (j) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -kI, kI, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        case 4: s << 1, 0, 0, 1; break;
        default: throw BadIndex("pauli: index must be in 1..4");
    }
    return s;
}

ComplexMatrix2 su2_generator(int j) {
    if (j < 1 || j > 3) throw BadIndex("su2_generator: index must be in 1..3");
    return -kI * pauli(j);
}

ComplexMatrix2 hermitian_of_vector(const Eigen::Vector3d& x) {
    ComplexMatrix2 m;
    m << x(2), complexd(x(0), -x(1)), complexd(x(0), x(1)), -x(2);
    return m;
}

ComplexMatrix2 quaternion_to_matrix(const Quaternion& q) {
    ComplexMatrix2 m;
    m << complexd(q.w, -q.z), complexd(-q.y, -q.x),
         complexd(q.y, -q.x), complexd(q.w, q.z);
    return m;
}

RotationMatrix3 covering_map(const SU2Element& u) {
    const ComplexMatrix2& m = u.value();
    RotationMatrix3 r;
    for (int col = 1; col <= 3; ++col) {
        const ComplexMatrix2 image = m * pauli(col) * m.adjoint();
        for (int row = 1; row <= 3; ++row) {
            r(row - 1, col - 1) = 0.5 * (pauli(row) * image).trace().real();
        }
    }
    return r;
}

SU2Element one_param_su2(int j, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    ComplexMatrix2 m;
    switch (j) {
        case 1: m << c, -kI * s, -kI * s, c; break;
        case 2: m << c, -s, s, c; break;
        case 3: m << std::exp(-kI * theta), 0, 0, std::exp(kI * theta); break;
        default: throw BadIndex("one_param_su2: index must be in 1..3");
    }
    return SU2Element(m);
}

RotationMatrix3 one_param_so3(int j, double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    RotationMatrix3 g;
    switch (j) {
        case 1:
            g << 1, 0, 0,
                 0, c, -s,
                 0, s, c;
            break;
        case 2:
            g << c, 0, s,
                 0, 1, 0,
                 -s, 0, c;
            break;
        case 3:
            g << c, -s, 0,
                 s, c, 0,
                 0, 0, 1;
            break;
        default: throw BadIndex("one_param_so3: index must be in 1..3");
    }
    return g;
}

Eigen::Matrix3d so3_generator(int j) {
    if (j < 1 || j > 3) throw BadIndex("so3_generator: index must be in 1..3");
    Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
    switch (j) {
        case 1: a(2, 1) = 1.0; a(1, 2) = -1.0; break;
        case 2: a(0, 2) = 1.0; a(2, 0) = -1.0; break;
        case 3: a(1, 0) = 1.0; a(0, 1) = -1.0; break;
    }
    return a;
}

std::pair<SU2Element, SU2Element> spin_lift(const RotationMatrix3& r, double tolerance) {
    const auto pre = lift(r, tolerance);
    SU2Element first{quaternion_to_matrix(pre.first.value())};
    return {first, -first};
}

WeightList weights_from_torus_generator(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw NotTorusGenerator("weights: generator image must be square and nonempty");
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw NotTorusGenerator("weights: eigensolver failed");
    }
    WeightList out;
    out.weights.reserve(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const complexd ev = solver.eigenvalues()(i);
        // eigenvalue = 2 i k with k in (1/2) Z
        if (std::abs(ev.real()) > 1e-6) {
            throw NotTorusGenerator("weights: eigenvalue has a real part beyond 1e-6");
        }
        const double k = ev.imag() / 2.0;
        const double snapped = std::round(k * 2.0) / 2.0;
        if (std::abs(k - snapped) > 1e-6) {
            throw NotTorusGenerator("weights: eigenvalue is off the half-integer grid");
        }
        out.weights.push_back(snapped);
    }
    std::sort(out.weights.begin(), out.weights.end(), std::greater<double>());
    return out;
}

Eigen::MatrixXcd pi2_tensor_power_generator(int k) {
    if (k < 1) throw BadIndex("pi2_tensor_power_generator: k must be >= 1");
    const Eigen::MatrixXcd b3 = su2_generator(3);
    Eigen::MatrixXcd acc = b3;
    for (int factor = 2; factor <= k; ++factor) {
        const Eigen::Index d = acc.rows();
        Eigen::MatrixXcd next =
            Eigen::kroneckerProduct(acc, Eigen::MatrixXcd::Identity(2, 2)).eval() +
            Eigen::kroneckerProduct(Eigen::MatrixXcd::Identity(d, d), b3).eval();
        acc = std::move(next);
    }
    return acc;
}

}  // namespace spinrep
