#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spinrep/representation.hpp"

namespace spinrep {

/// Outcome of decomposing tau|_N. NotIsotypic is a legitimate result (the
/// tensor-decomposition hypothesis is unmet), not an error: `isotypic` is
/// false and rho holds the witnessing irreducible constituent found.
struct IsotypicRestriction {
    bool isotypic = false;
    MatrixRep rho;        // irreducible constituent, indexed by `elements`
    int multiplicity = 0; // mu = dim Hom(rho, tau|_N); equals ell iff isotypic
    std::vector<int> elements;  // the subgroup elements, ascending
};

/// Restricts the irreducible tau to the normal subgroup N (given by its
/// element list) and tests whether all irreducible constituents agree.
/// Throws SubgroupError (not a normal subgroup) / NotIrreducible (tau).
IsotypicRestriction restrict_isotypic(const FiniteGroup& h, const std::vector<int>& normal_elements,
                                      const MatrixRep& tau);

/// tau(h) = S (Gamma(h) (x) C(h)) S^{-1} with mutually inverse factor sets;
/// C restricted to N equals rho, Gamma is constant on N-cosets and descends
/// to a projective representation of H/N.
struct CliffordDecomposition {
    MatrixRep gamma;  // ell x ell, indexed by H
    MatrixRep c;      // dim(rho) x dim(rho), indexed by H
    Eigen::MatrixXcd change_of_basis;
    FactorSet gamma_factor_set;
    FactorSet c_factor_set;
    double reconstruction_residual = 0.0;   // max over h
    double factor_product_residual = 0.0;   // max |rGamma(g,h) * rC(g,h) - 1|
    double coset_constancy_residual = 0.0;  // max |Gamma(hu) - Gamma(h)|
    QuotientGroup quotient;
};

/// Normalization: C(u) = rho(u) on N and C(hu) = C(h) rho(u); intertwiners
/// on coset representatives are scaled to |det| = 1 with the first entry of
/// magnitude > 1e-8 (row-major scan) made positive real; the section picks
/// the least element index per coset. Throws DecompositionFailed on rank or
/// residual trouble.
CliffordDecomposition clifford_decompose(const FiniteGroup& h,
                                         const std::vector<int>& normal_elements,
                                         const MatrixRep& tau, const MatrixRep& rho,
                                         int multiplicity);

/// Factor set of the descended family a -> Gamma(section[a]) on H/N.
FactorSet descend_factor_set(const FactorSet& r, const QuotientGroup& q);

/// For abelian groups: a factor-set class is trivial iff the commutator
/// pairing r(a,b)/r(b,a) is identically 1. Throws SubgroupError when the
/// group is not abelian.
bool factor_set_class_trivial_abelian(const FiniteGroup& g, const FactorSet& r,
                                      double tolerance = 1e-8);

}  // namespace spinrep
