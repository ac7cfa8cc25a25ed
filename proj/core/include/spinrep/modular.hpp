#pragma once

#include <utility>
#include <vector>

#include "spinrep/errors.hpp"

namespace spinrep::modular {

using i64 = long long;

/// Dense matrix over Z/N with entries kept canonical in [0, N).
struct Mat {
    int rows = 0;
    int cols = 0;
    i64 n = 1;
    std::vector<i64> a;

    static Mat zero(int r, int c, i64 n);
    static Mat identity(int m, i64 n);

    i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

i64 mod_reduce(i64 v, i64 n);

/// Extended gcd: returns g = gcd(a, b) and x, y with x*a + y*b = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);

/// A unit u (gcd(u, n) = 1) with u*value = gcd(value, n) (mod n).
/// Exists for every value; found by scan (moduli here are <= 64).
i64 unit_scaling_to_gcd(i64 value, i64 n);

/// Inverse of a unit mod n.
i64 unit_inverse(i64 u, i64 n);

/// Description of the solution set of A x = 0 over (Z/N)^m:
/// the kernel is generated by (N / orders[i]) * basis.col(i), and the
/// coefficient of generator i is determined modulo orders[i].
/// basis is unimodular mod N with basis_inv its inverse.
struct KernelBasis {
    i64 modulus = 1;
    std::vector<i64> orders;
    Mat basis;
    Mat basis_inv;

    /// Coordinates of a kernel vector w.r.t. the generators: solves
    /// v = sum_i c_i * (N/orders[i]) * basis.col(i) with c_i in [0, orders[i]).
    /// Throws BadCocycle when v is not in the kernel lattice.
    std::vector<i64> coordinates(const std::vector<i64>& v) const;
};

/// Accumulates sparse linear constraints over (Z/N)^m and solves for the
/// kernel. Constraint rows are reduced incrementally into an echelon set
/// (one stored row per pivot column, pivot values dividing N); the final
/// call diagonalizes the stored rows with tracked column transforms.
/// Deterministic: insertion and reduction order are fixed.
class ConstraintSolver {
public:
    ConstraintSolver(int unknowns, i64 modulus);

    /// sum of coeff * x_col = 0 (mod N); terms may repeat columns.
    void add_constraint(const std::vector<std::pair<int, i64>>& terms);

    KernelBasis solve() const;

private:
    void insert(std::vector<i64> row);

    int m_;
    i64 n_;
    std::vector<int> pivot_row_of_col_;   // column -> index into rows_, or -1
    std::vector<std::vector<i64>> rows_;  // stored reduced rows
    std::vector<int> pivot_col_;          // pivot column of rows_[i]
};

/// Invariant factors of the cokernel of a relation matrix over an ambient
/// group of exponent N. `relations` columns are relations among the columns
/// of `generators`; row transforms applied to `relations` are mirrored
/// contragradiently on `generators`, so that on return generator column i
/// has order diagonal[i] in the quotient.
struct CokernelResult {
    std::vector<i64> diagonal;           // size = #generators, each divides N
    std::vector<i64> invariant_factors;  // the entries > 1, divisibility chain
};

CokernelResult cokernel_invariants(Mat& relations, Mat& generators);

}  // namespace spinrep::modular
