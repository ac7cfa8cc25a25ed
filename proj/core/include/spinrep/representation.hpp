#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "spinrep/extension.hpp"
#include "spinrep/group.hpp"

namespace spinrep {

/// Family of invertible complex matrices indexed by group elements.
/// May be a genuine representation or a projective one; factor_set_of tells.
struct MatrixRep {
    int dim = 0;
    std::vector<Eigen::MatrixXcd> images;

    const Eigen::MatrixXcd& at(int g) const { return images[g]; }

    /// Smallest singular value across images must exceed 1e-9.
    void validate() const;
};

/// Scalar table r with pi(g) pi(h) = r(g,h) pi(gh).
struct FactorSet {
    int n = 0;
    std::vector<std::complex<double>> values;

    std::complex<double> at(int g, int h) const { return values[static_cast<size_t>(g) * n + h]; }
    std::complex<double>& at(int g, int h) { return values[static_cast<size_t>(g) * n + h]; }
};

/// Extracts the factor set; NotProjective (with witness pair and deviation)
/// when some pi(g) pi(h) pi(gh)^{-1} fails to be scalar within `tolerance`.
FactorSet factor_set_of(const FiniteGroup& g, const MatrixRep& rep, double tolerance = 1e-8);

/// Largest violation of the multiplicative cocycle identity
/// r(k, gh) r(g, h) = r(k, g) r(kg, h) over all triples.
double factor_set_cocycle_residual(const FiniteGroup& g, const FactorSet& r);

/// Commutant dimension: the space of X with X pi(g) = pi(g) X for all g,
/// computed by SVD of the stacked Sylvester system (rank tolerance 1e-8).
int commutant_dimension(const MatrixRep& rep);

/// Irreducible iff the commutant is one-dimensional. Works for projective
/// families as well (only the image set matters).
bool is_irreducible(const FiniteGroup& g, const MatrixRep& rep);

/// Central character of an irreducible representation of the extension
/// group: Pi(z, e) must be chi(z) * I (NotCentralScalar otherwise; the
/// representation must be irreducible, else NotIrreducible). Returns the
/// values chi(0..m-1) on the fiber.
std::vector<std::complex<double>> spin_type(const CentralExtension& ext, const MatrixRep& rep,
                                            double tolerance = 1e-8);

/// Named representations bound to the builtin group element orders:
///   "D4-2dim": r -> rotation by pi/2, s -> diag(1, -1)
///   "Q8-2dim": the quaternion units via their 2x2 complex embedding
///   "Z2xZ2-pauli": e, a, b, ab -> E, sigma1, sigma3, sigma1 sigma3
///     (projective, with r(a,b)/r(b,a) = -1)
MatrixRep builtin_representation(const std::string& name);

/// Restriction of a representation of G to the elements of a subgroup,
/// reindexed by the subgroup's own 0..k-1 order.
MatrixRep restrict_to_subgroup(const MatrixRep& rep, const std::vector<int>& elements);

}  // namespace spinrep
