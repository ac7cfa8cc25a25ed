#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <map>
#include <string>

#include "spinrep/errors.hpp"
#include "spinrep/rotation.hpp"

namespace spinrep {

using Event4 = Eigen::Vector4d;            // (x1, x2, x3, x4 = ct)
using LorentzMatrix4 = Eigen::Matrix4d;
using ComplexMatrix4 = Eigen::Matrix4cd;

/// Metric J = diag(1, 1, 1, -1).
Eigen::Matrix4d minkowski_metric();

/// <x, y> = x1 y1 + x2 y2 + x3 y3 - x4 y4.
double minkowski_inner(const Event4& x, const Event4& y);

/// Proper (orthochronous, det 1) Lorentz group membership:
/// g^T J g = J and det g = 1 within 1e-9, and g_44 >= 1 - 1e-9.
bool is_proper_lorentz(const Eigen::Matrix4d& g, double tolerance = 1e-9);

/// Boost in the (x_axis, x4) coordinate plane with rapidity chi; axis in 1..3.
LorentzMatrix4 boost(int axis, double chi);

/// Spatial rotation embedded as block-diag(R, 1).
LorentzMatrix4 embed_rotation(const RotationMatrix3& r);

/// Gamma matrices: gamma_j = [[0, -i sigma_j], [i sigma_j, 0]] for j in 1..3
/// and gamma_4 = diag(-i, -i, i, i). Entries are exact in {0, +-1, +-i}.
ComplexMatrix4 gamma(int j);

/// A quadruple of candidate gamma matrices.
struct GammaSystem {
    std::array<ComplexMatrix4, 4> g;
    static GammaSystem standard();
};

/// Result of checking the Clifford relations
/// gamma_j gamma_k + gamma_k gamma_j = 2 J[j,k] E_4 over all 16 pairs.
struct CliffordReport {
    bool pass = false;
    double max_deviation = 0.0;
    int worst_j = 0, worst_k = 0;  // 1-based pair attaining max_deviation
};

CliffordReport clifford_check(const GammaSystem& gs);

/// Polynomial in the four commuting derivative symbols d1..d4 with 4x4
/// complex matrix coefficients. Multiplication composes coefficients by
/// matrix product and adds exponents; comparisons are exact.
class DiracSymbol {
public:
    using Exponent = std::array<int, 4>;

    DiracSymbol() = default;

    static DiracSymbol zero() { return {}; }
    static DiracSymbol constant(const ComplexMatrix4& m);
    /// Single term m * d1^e1 d2^e2 d3^e3 d4^e4.
    static DiracSymbol term(const Exponent& e, const ComplexMatrix4& m);

    void add_term(const Exponent& e, const ComplexMatrix4& m);

    int degree() const;
    const std::map<Exponent, ComplexMatrix4>& terms() const { return terms_; }
    /// Coefficient of the given exponent (zero matrix when absent).
    ComplexMatrix4 coefficient(const Exponent& e) const;

    DiracSymbol operator+(const DiracSymbol& o) const;
    DiracSymbol operator-(const DiracSymbol& o) const;
    DiracSymbol operator*(const DiracSymbol& o) const;

    bool operator==(const DiracSymbol& o) const;
    /// Largest entrywise magnitude of the coefficient difference.
    double max_difference(const DiracSymbol& o) const;

private:
    void prune();
    std::map<Exponent, ComplexMatrix4> terms_;
};

inline DiracSymbol multiply_symbols(const DiracSymbol& a, const DiracSymbol& b) { return a * b; }

/// D +- kappa with D = sum_j gamma_j d_j; kappa must be positive.
DiracSymbol dirac_symbol(double kappa, int sign, const GammaSystem& gs = GammaSystem::standard());

/// Checks (D - kappa)(D + kappa) == (d1^2 + d2^2 + d3^2 - d4^2 - kappa^2) E_4
/// as symbols, exactly. On failure reports the worst offending term.
struct FactorizationReport {
    bool pass = false;
    double max_deviation = 0.0;
    std::array<int, 4> worst_exponent{0, 0, 0, 0};
};

FactorizationReport kg_factorization_check(double kappa,
                                           const GammaSystem& gs = GammaSystem::standard());

/// Substitutes d_j -> i p_j into the symbol; the matrix acting on a plane
/// wave amplitude. For D + kappa the determinant is (<p,p> + kappa^2)^2,
/// so a nonzero kernel exists exactly on the mass shell <p,p> = -kappa^2.
ComplexMatrix4 plane_wave_matrix(const DiracSymbol& s, const Event4& p);

}  // namespace spinrep
