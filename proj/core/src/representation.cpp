#include "spinrep/representation.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "spinrep/spincover.hpp"

namespace spinrep {

namespace {
constexpr double kRankTol = 1e-8;
}

void MatrixRep::validate() const {
    for (size_t g = 0; g < images.size(); ++g) {
        const auto& m = images[g];
        if (m.rows() != dim || m.cols() != dim) {
            throw NotProjective("MatrixRep: image dimension mismatch at element " +
                                std::to_string(g));
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        if (svd.singularValues().minCoeff() <= 1e-9) {
            throw NotProjective("MatrixRep: image at element " + std::to_string(g) +
                                " is numerically singular");
        }
    }
}

FactorSet factor_set_of(const FiniteGroup& g, const MatrixRep& rep, double tolerance) {
    if (static_cast<int>(rep.images.size()) != g.order()) {
        throw NotProjective("factor_set_of: image count does not match the group order");
    }
    rep.validate();
    const int n = g.order();
    const int d = rep.dim;
    FactorSet r;
    r.n = n;
    r.values.assign(static_cast<size_t>(n) * n, {0.0, 0.0});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const Eigen::MatrixXcd defect =
                rep.at(a) * rep.at(b) * rep.at(g.mul(a, b)).inverse();
            const std::complex<double> scalar = defect.trace() / static_cast<double>(d);
            const double dev =
                (defect - scalar * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
            if (dev > tolerance || std::abs(scalar) < kRankTol) {
                std::ostringstream os;
                os << "factor_set_of: pi(g)pi(h)pi(gh)^{-1} is not scalar at pair (" << a << ", "
                   << b << "), deviation " << dev;
                throw NotProjective(os.str());
            }
            r.at(a, b) = scalar;
        }
    }
    return r;
}

double factor_set_cocycle_residual(const FiniteGroup& g, const FactorSet& r) {
    const int n = g.order();
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const std::complex<double> lhs = r.at(k, g.mul(a, b)) * r.at(a, b);
                const std::complex<double> rhs = r.at(k, a) * r.at(g.mul(k, a), b);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    return worst;
}

int commutant_dimension(const MatrixRep& rep) {
    const int d = rep.dim;
    const int n = static_cast<int>(rep.images.size());
    // X pi(g) - pi(g) X = 0 for all g, on vec(X) (column-major):
    // (pi(g)^T (x) I - I (x) pi(g)) vec(X) = 0
    Eigen::MatrixXcd sys(static_cast<Eigen::Index>(n) * d * d, d * d);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    for (int g = 0; g < n; ++g) {
        Eigen::MatrixXcd block(d * d, d * d);
        const Eigen::MatrixXcd& p = rep.at(g);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                block.block(i * d, j * d, d, d) = p.transpose()(i, j) * id;
            }
        }
        for (int i = 0; i < d; ++i) {
            block.block(i * d, i * d, d, d) -= p;
        }
        sys.middleRows(static_cast<Eigen::Index>(g) * d * d, d * d) = block;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys);
    const auto& sv = svd.singularValues();
    const double scale = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > kRankTol * std::max(1.0, scale)) ++rank;
    }
    return d * d - rank;
}

bool is_irreducible(const FiniteGroup& g, const MatrixRep& rep) {
    if (static_cast<int>(rep.images.size()) != g.order()) {
        throw NotProjective("is_irreducible: image count does not match the group order");
    }
    return commutant_dimension(rep) == 1;
}

std::vector<std::complex<double>> spin_type(const CentralExtension& ext, const MatrixRep& rep,
                                            double tolerance) {
    if (!is_irreducible(ext.group(), rep)) {
        throw NotIrreducible("spin_type: representation is reducible");
    }
    const int m = ext.fiber_modulus();
    const int d = rep.dim;
    std::vector<std::complex<double>> chi(m);
    for (int z = 0; z < m; ++z) {
        const Eigen::MatrixXcd& img = rep.at(ext.fiber_element(z));
        const std::complex<double> scalar = img.trace() / static_cast<double>(d);
        const double dev =
            (img - scalar * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
        if (dev > tolerance) {
            throw NotCentralScalar("spin_type: fiber image is not scalar at z = " +
                                   std::to_string(z));
        }
        chi[z] = scalar;
    }
    return chi;
}

namespace {

MatrixRep d4_2dim() {
    // tau(r^a s^b) = R^a S^b with R = rotation by pi/2, S = diag(1, -1)
    Eigen::Matrix2cd rot, flip;
    rot << 0, -1, 1, 0;
    flip << 1, 0, 0, -1;
    MatrixRep rep;
    rep.dim = 2;
    rep.images.resize(8);
    for (int g = 0; g < 8; ++g) {
        const int a = g & 3, b = g >> 2;
        Eigen::Matrix2cd img = Eigen::Matrix2cd::Identity();
        for (int k = 0; k < a; ++k) img = img * rot;
        if (b) img = img * flip;
        rep.images[g] = img;
    }
    return rep;
}

MatrixRep q8_2dim() {
    static const Quaternion units[8] = {
        Quaternion::identity(),  -Quaternion::identity(),
        Quaternion::unit_i(),    -Quaternion::unit_i(),
        Quaternion::unit_j(),    -Quaternion::unit_j(),
        Quaternion::unit_k(),    -Quaternion::unit_k(),
    };
    MatrixRep rep;
    rep.dim = 2;
    rep.images.resize(8);
    for (int g = 0; g < 8; ++g) rep.images[g] = quaternion_to_matrix(units[g]);
    return rep;
}

MatrixRep z2xz2_pauli() {
    MatrixRep rep;
    rep.dim = 2;
    rep.images.resize(4);
    // index = 2*a + b for (a, b); image sigma1^a sigma3^b
    for (int g = 0; g < 4; ++g) {
        const int a = g >> 1, b = g & 1;
        Eigen::Matrix2cd img = Eigen::Matrix2cd::Identity();
        if (a) img = img * pauli(1);
        if (b) img = img * pauli(3);
        rep.images[g] = img;
    }
    return rep;
}

}  // namespace

MatrixRep builtin_representation(const std::string& name) {
    if (name == "D4-2dim") return d4_2dim();
    if (name == "Q8-2dim") return q8_2dim();
    if (name == "Z2xZ2-pauli") return z2xz2_pauli();
    throw UnknownGroup("unknown builtin representation: " + name);
}

MatrixRep restrict_to_subgroup(const MatrixRep& rep, const std::vector<int>& elements) {
    MatrixRep out;
    out.dim = rep.dim;
    out.images.reserve(elements.size());
    for (int e : elements) out.images.push_back(rep.at(e));
    return out;
}

}  // namespace spinrep
