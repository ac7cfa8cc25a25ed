#include "spinrep/clifford.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <random>

namespace spinrep {

namespace {

constexpr double kRankTol = 1e-8;

// Orthonormal kernel basis (columns) of a complex system via full SVD.
Eigen::MatrixXcd kernel_basis(const Eigen::MatrixXcd& sys) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = sv.size() > 0 ? std::max(1.0, sv(0)) : 1.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > kRankTol * scale) ++rank;
    }
    const Eigen::Index dim = sys.cols();
    return svd.matrixV().rightCols(dim - rank);
}

Eigen::MatrixXcd unvec(const Eigen::VectorXcd& v, int rows, int cols) {
    return Eigen::Map<const Eigen::MatrixXcd>(v.data(), rows, cols);
}

// System whose kernel is {T : a(g) T = T b(g) for all g}, T rows x cols.
Eigen::MatrixXcd intertwiner_system(const std::vector<Eigen::MatrixXcd>& a,
                                    const std::vector<Eigen::MatrixXcd>& b) {
    const int rows = static_cast<int>(a.front().rows());
    const int cols = static_cast<int>(b.front().rows());
    const int unknowns = rows * cols;
    Eigen::MatrixXcd sys(static_cast<Eigen::Index>(a.size()) * unknowns, unknowns);
    const Eigen::MatrixXcd id_rows = Eigen::MatrixXcd::Identity(rows, rows);
    const Eigen::MatrixXcd id_cols = Eigen::MatrixXcd::Identity(cols, cols);
    for (size_t g = 0; g < a.size(); ++g) {
        // vec(a T) = (I (x) a) vec(T); vec(T b) = (b^T (x) I) vec(T)
        const Eigen::MatrixXcd block = Eigen::kroneckerProduct(id_cols, a[g]).eval() -
                                       Eigen::kroneckerProduct(b[g].transpose(), id_rows).eval();
        sys.middleRows(static_cast<Eigen::Index>(g) * unknowns, unknowns) = block;
    }
    return sys;
}

// Subgroup table over the given (ascending) element list.
FiniteGroup subgroup_table(const FiniteGroup& g, const std::vector<int>& elements,
                           std::vector<int>& pos_of) {
    const int k = static_cast<int>(elements.size());
    pos_of.assign(g.order(), -1);
    for (int i = 0; i < k; ++i) pos_of[elements[i]] = i;
    std::vector<int> table(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const int prod = g.mul(elements[i], elements[j]);
            table[static_cast<size_t>(i) * k + j] = pos_of[prod];
        }
    }
    return FiniteGroup(k, std::move(table), pos_of[g.identity()]);
}

// Splits sigma (a representation family on a subgroup) into an irreducible
// constituent by cutting along eigenspaces of random Hermitian commutant
// elements. Returns the images of the constituent.
std::vector<Eigen::MatrixXcd> irreducible_constituent(std::vector<Eigen::MatrixXcd> images,
                                                      std::mt19937& rng) {
    for (int guard = 0; guard < 64; ++guard) {
        const int d = static_cast<int>(images.front().rows());
        const Eigen::MatrixXcd sys = intertwiner_system(images, images);
        const Eigen::MatrixXcd null_basis = kernel_basis(sys);
        if (null_basis.cols() == 1) return images;

        std::normal_distribution<double> dist(0.0, 1.0);
        Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
        for (Eigen::Index c = 0; c < null_basis.cols(); ++c) {
            x += std::complex<double>(dist(rng), dist(rng)) * unvec(null_basis.col(c), d, d);
        }
        const Eigen::MatrixXcd herm = x + x.adjoint();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
        if (eig.info() != Eigen::Success) {
            throw DecompositionFailed("constituent search: eigensolver failed");
        }

        // cluster eigenvalues and take the smallest eigenspace
        const Eigen::VectorXd vals = eig.eigenvalues();
        std::vector<std::pair<int, int>> clusters;  // [begin, end)
        int begin = 0;
        for (int i = 1; i <= d; ++i) {
            if (i == d || vals(i) - vals(i - 1) > 1e-6) {
                clusters.push_back({begin, i});
                begin = i;
            }
        }
        if (clusters.size() < 2) continue;  // unlucky draw; retry
        auto smallest = *std::min_element(
            clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return a.second - a.first < b.second - b.first; });
        const Eigen::MatrixXcd q =
            eig.eigenvectors().middleCols(smallest.first, smallest.second - smallest.first);
        for (auto& img : images) img = (q.adjoint() * img * q).eval();
    }
    throw DecompositionFailed("constituent search: did not converge");
}

}  // namespace

IsotypicRestriction restrict_isotypic(const FiniteGroup& h, const std::vector<int>& normal_elements,
                                      const MatrixRep& tau) {
    if (!is_normal(h, normal_elements)) {
        throw SubgroupError("restrict_isotypic: subgroup is not normal");
    }
    if (!is_irreducible(h, tau)) {
        throw NotIrreducible("restrict_isotypic: tau is reducible");
    }
    std::vector<int> elements = normal_elements;
    std::sort(elements.begin(), elements.end());

    std::vector<Eigen::MatrixXcd> sigma;
    sigma.reserve(elements.size());
    for (int u : elements) sigma.push_back(tau.at(u));

    std::mt19937 rng(0x5eed);
    IsotypicRestriction out;
    out.elements = elements;
    out.rho.images = irreducible_constituent(sigma, rng);
    out.rho.dim = static_cast<int>(out.rho.images.front().rows());

    const Eigen::MatrixXcd hom = kernel_basis(intertwiner_system(sigma, out.rho.images));
    out.multiplicity = static_cast<int>(hom.cols());
    out.isotypic = out.multiplicity * out.rho.dim == tau.dim;
    return out;
}

CliffordDecomposition clifford_decompose(const FiniteGroup& h,
                                         const std::vector<int>& normal_elements,
                                         const MatrixRep& tau, const MatrixRep& rho,
                                         int multiplicity) {
    const int d = tau.dim;
    const int p = rho.dim;
    const int ell = multiplicity;
    if (ell * p != d) {
        throw DecompositionFailed("clifford_decompose: ell * dim(rho) != dim(tau)");
    }

    std::vector<int> elements = normal_elements;
    std::sort(elements.begin(), elements.end());
    std::vector<int> pos_of;
    const FiniteGroup n_group = subgroup_table(h, elements, pos_of);

    QuotientGroup quotient = quotient_group(h, elements);

    // C on coset representatives: in N take rho itself; elsewhere solve the
    // Schur intertwiner rho(u) C = C rho(r^{-1} u r) and normalize.
    std::vector<Eigen::MatrixXcd> c_images(h.order());
    for (int rep : quotient.section) {
        if (pos_of[rep] >= 0) {
            c_images[rep] = rho.at(pos_of[rep]);
            continue;
        }
        std::vector<Eigen::MatrixXcd> lhs, rhs;
        lhs.reserve(elements.size());
        rhs.reserve(elements.size());
        for (int u : elements) {
            lhs.push_back(rho.at(pos_of[u]));
            const int conj = h.mul(h.mul(h.inv(rep), u), rep);
            rhs.push_back(rho.at(pos_of[conj]));
        }
        const Eigen::MatrixXcd null_basis = kernel_basis(intertwiner_system(lhs, rhs));
        if (null_basis.cols() != 1) {
            throw DecompositionFailed(
                "clifford_decompose: intertwiner space is not one-dimensional at coset rep " +
                std::to_string(rep));
        }
        Eigen::MatrixXcd c = unvec(null_basis.col(0), p, p);
        const double det_mag = std::abs(c.determinant());
        if (det_mag < kRankTol) {
            throw DecompositionFailed("clifford_decompose: singular intertwiner at coset rep " +
                                      std::to_string(rep));
        }
        c /= std::pow(det_mag, 1.0 / p);
        for (int i = 0; i < p; ++i) {
            bool fixed = false;
            for (int j = 0; j < p; ++j) {
                const std::complex<double> entry = c(i, j);
                if (std::abs(entry) > kRankTol) {
                    c *= std::conj(entry) / std::abs(entry);
                    fixed = true;
                    break;
                }
            }
            if (fixed) break;
        }
        c_images[rep] = c;
    }
    // extend by C(r u) = C(r) rho(u)
    for (int x = 0; x < h.order(); ++x) {
        const int rep = quotient.section[quotient.coset_of[x]];
        if (x == rep) continue;
        const int u = h.mul(h.inv(rep), x);
        c_images[x] = c_images[rep] * rho.at(pos_of[u]);
    }

    // basis of Hom_N(rho, tau|_N)
    std::vector<Eigen::MatrixXcd> sigma;
    sigma.reserve(elements.size());
    for (int u : elements) sigma.push_back(tau.at(u));
    const Eigen::MatrixXcd hom = kernel_basis(intertwiner_system(sigma, rho.images));
    if (static_cast<int>(hom.cols()) != ell) {
        throw DecompositionFailed("clifford_decompose: Hom_N(rho, tau|_N) dimension " +
                                  std::to_string(hom.cols()) + " != multiplicity " +
                                  std::to_string(ell));
    }
    std::vector<Eigen::MatrixXcd> t_basis(ell);
    for (int j = 0; j < ell; ++j) t_basis[j] = unvec(hom.col(j), d, p);

    Eigen::MatrixXcd s(d, d);
    for (int j = 0; j < ell; ++j) s.middleCols(j * p, p) = t_basis[j];
    Eigen::FullPivLU<Eigen::MatrixXcd> s_lu(s);
    if (!s_lu.isInvertible()) {
        throw DecompositionFailed("clifford_decompose: change of basis is singular");
    }
    const Eigen::MatrixXcd s_inv = s_lu.inverse();

    // Gamma(h) from the action T -> tau(h) T C(h)^{-1} on the Hom basis
    std::vector<Eigen::MatrixXcd> gamma_images(h.order());
    for (int x = 0; x < h.order(); ++x) {
        const Eigen::MatrixXcd c_inv = c_images[x].inverse();
        Eigen::MatrixXcd gamma(ell, ell);
        for (int j = 0; j < ell; ++j) {
            const Eigen::MatrixXcd moved = tau.at(x) * t_basis[j] * c_inv;
            for (int i = 0; i < ell; ++i) {
                gamma(i, j) = (t_basis[i].conjugate().cwiseProduct(moved)).sum();
            }
        }
        gamma_images[x] = gamma;
    }

    CliffordDecomposition out{
        MatrixRep{ell, std::move(gamma_images)},
        MatrixRep{p, std::move(c_images)},
        s,
        FactorSet{},
        FactorSet{},
        0.0,
        0.0,
        0.0,
        std::move(quotient),
    };

    for (int x = 0; x < h.order(); ++x) {
        const Eigen::MatrixXcd rebuilt =
            s * Eigen::kroneckerProduct(out.gamma.at(x), out.c.at(x)).eval() * s_inv;
        out.reconstruction_residual =
            std::max(out.reconstruction_residual, (rebuilt - tau.at(x)).cwiseAbs().maxCoeff());
    }

    out.gamma_factor_set = factor_set_of(h, out.gamma);
    out.c_factor_set = factor_set_of(h, out.c);
    for (int a = 0; a < h.order(); ++a) {
        for (int b = 0; b < h.order(); ++b) {
            out.factor_product_residual =
                std::max(out.factor_product_residual,
                         std::abs(out.gamma_factor_set.at(a, b) * out.c_factor_set.at(a, b) - 1.0));
        }
    }

    for (int x = 0; x < h.order(); ++x) {
        for (int u : elements) {
            const int xu = h.mul(x, u);
            out.coset_constancy_residual =
                std::max(out.coset_constancy_residual,
                         (out.gamma.at(xu) - out.gamma.at(x)).cwiseAbs().maxCoeff());
        }
    }

    return out;
}

FactorSet descend_factor_set(const FactorSet& r, const QuotientGroup& q) {
    const int nq = q.group.order();
    FactorSet out;
    out.n = nq;
    out.values.assign(static_cast<size_t>(nq) * nq, {0.0, 0.0});
    for (int a = 0; a < nq; ++a) {
        for (int b = 0; b < nq; ++b) {
            out.at(a, b) = r.at(q.section[a], q.section[b]);
        }
    }
    return out;
}

bool factor_set_class_trivial_abelian(const FiniteGroup& g, const FactorSet& r,
                                      double tolerance) {
    if (!g.is_abelian()) {
        throw SubgroupError("factor_set_class_trivial_abelian: group is not abelian");
    }
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
            if (std::abs(r.at(a, b) / r.at(b, a) - 1.0) > tolerance) return false;
        }
    }
    return true;
}

}  // namespace spinrep
