#include "spinrep/modular.hpp"

#include <algorithm>
#include <numeric>

namespace spinrep::modular {

Mat Mat::zero(int r, int c, i64 n) {
    Mat m;
    m.rows = r;
    m.cols = c;
    m.n = n;
    m.a.assign(static_cast<size_t>(r) * c, 0);
    return m;
}

Mat Mat::identity(int m_, i64 n) {
    Mat m = zero(m_, m_, n);
    for (int i = 0; i < m_; ++i) m.at(i, i) = mod_reduce(1, n);
    return m;
}

i64 mod_reduce(i64 v, i64 n) {
    v %= n;
    return v < 0 ? v + n : v;
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    i64 x1, y1;
    const i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

i64 unit_scaling_to_gcd(i64 value, i64 n) {
    if (n == 1) return 0;
    value = mod_reduce(value, n);
    const i64 g = std::gcd(value, n);  // gcd(0, n) = n, i.e. 0 mod n
    for (i64 u = 1; u < n; ++u) {
        if (std::gcd(u, n) == 1 && mod_reduce(u * value, n) == mod_reduce(g, n)) return u;
    }
    return 1;  // unreachable for n > 1
}

i64 unit_inverse(i64 u, i64 n) {
    if (n == 1) return 0;
    i64 x, y;
    ext_gcd(mod_reduce(u, n), n, x, y);
    return mod_reduce(x, n);
}

std::vector<i64> KernelBasis::coordinates(const std::vector<i64>& v) const {
    const int m = basis.rows;
    std::vector<i64> y(m, 0);
    for (int i = 0; i < m; ++i) {
        i64 acc = 0;
        for (int j = 0; j < m; ++j) acc += basis_inv.at(i, j) * mod_reduce(v[j], modulus);
        y[i] = mod_reduce(acc, modulus);
    }
    std::vector<i64> c(m, 0);
    for (int i = 0; i < m; ++i) {
        const i64 step = modulus / orders[i];
        if (y[i] % step != 0) {
            throw BadCocycle("coordinates: vector does not lie in the kernel lattice");
        }
        c[i] = y[i] / step;  // in [0, orders[i])
    }
    return c;
}

ConstraintSolver::ConstraintSolver(int unknowns, i64 modulus)
    : m_(unknowns), n_(modulus), pivot_row_of_col_(unknowns, -1) {}

void ConstraintSolver::add_constraint(const std::vector<std::pair<int, i64>>& terms) {
    if (n_ == 1 || m_ == 0) return;
    std::vector<i64> row(m_, 0);
    bool nonzero = false;
    for (const auto& [col, coeff] : terms) {
        row[col] = mod_reduce(row[col] + coeff, n_);
    }
    for (i64 v : row) nonzero |= (v != 0);
    if (nonzero) insert(std::move(row));
}

void ConstraintSolver::insert(std::vector<i64> row) {
    for (int c = 0; c < m_; ++c) {
        const i64 v = row[c];
        if (v == 0) continue;
        const int pr = pivot_row_of_col_[c];
        if (pr < 0) {
            // new pivot: scale by a unit so the pivot divides the modulus
            const i64 u = unit_scaling_to_gcd(v, n_);
            if (u != 1) {
                for (i64& e : row) e = mod_reduce(e * u, n_);
            }
            if (row[c] == 0) return;  // v was 0 mod n after scaling (cannot happen)
            pivot_row_of_col_[c] = static_cast<int>(rows_.size());
            pivot_col_.push_back(c);
            rows_.push_back(std::move(row));
            return;
        }
        std::vector<i64>& pivot = rows_[pr];
        const i64 p = pivot[c];
        if (v % p == 0) {
            const i64 q = v / p;
            for (int j = c; j < m_; ++j) row[j] = mod_reduce(row[j] - q * pivot[j], n_);
        } else {
            i64 x, y;
            const i64 g = ext_gcd(p, v, x, y);
            const i64 pg = p / g, vg = v / g;
            for (int j = c; j < m_; ++j) {
                const i64 a = pivot[j], b = row[j];
                pivot[j] = mod_reduce(x * a + y * b, n_);
                row[j] = mod_reduce(-vg * a + pg * b, n_);
            }
        }
    }
}

namespace {

// In-place SNF helpers over a dense working matrix W (rows x cols, mod n).
// Column transforms are mirrored on V (columns) and VInv (inverse rows);
// either may be null. Row transforms are mirrored contragradiently on the
// columns of G when non-null (used by the cokernel path).
struct Worker {
    Mat& w;
    Mat* v = nullptr;
    Mat* vinv = nullptr;
    Mat* gen = nullptr;
    i64 n;

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < w.cols; ++c) std::swap(w.at(i, c), w.at(j, c));
        if (gen) {
            for (int r = 0; r < gen->rows; ++r) std::swap(gen->at(r, i), gen->at(r, j));
        }
    }

    void row_scale_unit(int i, i64 u) {
        if (mod_reduce(u, n) == 1) return;
        for (int c = 0; c < w.cols; ++c) w.at(i, c) = mod_reduce(w.at(i, c) * u, n);
        if (gen) {
            const i64 ui = unit_inverse(u, n);
            for (int r = 0; r < gen->rows; ++r) gen->at(r, i) = mod_reduce(gen->at(r, i) * ui, n);
        }
    }

    // rows (i, j) <- (x*ri + y*rj, z*ri + w*rj), integer det(x w - y z) = 1
    void row_combine(int i, int j, i64 x, i64 y, i64 z, i64 ww) {
        for (int c = 0; c < w.cols; ++c) {
            const i64 a = w.at(i, c), b = w.at(j, c);
            w.at(i, c) = mod_reduce(x * a + y * b, n);
            w.at(j, c) = mod_reduce(z * a + ww * b, n);
        }
        if (gen) {
            // G <- G * T^{-1}, T^{-1} = [[ww, -y], [-z, x]]
            for (int r = 0; r < gen->rows; ++r) {
                const i64 a = gen->at(r, i), b = gen->at(r, j);
                gen->at(r, i) = mod_reduce(ww * a - z * b, n);
                gen->at(r, j) = mod_reduce(-y * a + x * b, n);
            }
        }
    }

    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < w.rows; ++r) std::swap(w.at(r, i), w.at(r, j));
        if (v) {
            for (int r = 0; r < v->rows; ++r) std::swap(v->at(r, i), v->at(r, j));
        }
        if (vinv) {
            for (int c = 0; c < vinv->cols; ++c) std::swap(vinv->at(i, c), vinv->at(j, c));
        }
    }

    void col_scale_unit(int j, i64 u) {
        if (mod_reduce(u, n) == 1) return;
        for (int r = 0; r < w.rows; ++r) w.at(r, j) = mod_reduce(w.at(r, j) * u, n);
        if (v) {
            for (int r = 0; r < v->rows; ++r) v->at(r, j) = mod_reduce(v->at(r, j) * u, n);
        }
        if (vinv) {
            const i64 ui = unit_inverse(u, n);
            for (int c = 0; c < vinv->cols; ++c) vinv->at(j, c) = mod_reduce(vinv->at(j, c) * ui, n);
        }
    }

    // cols (i, j) <- (x*ci + y*cj, z*ci + w*cj), integer det = 1
    void col_combine(int i, int j, i64 x, i64 y, i64 z, i64 ww) {
        for (int r = 0; r < w.rows; ++r) {
            const i64 a = w.at(r, i), b = w.at(r, j);
            w.at(r, i) = mod_reduce(x * a + y * b, n);
            w.at(r, j) = mod_reduce(z * a + ww * b, n);
        }
        if (v) {
            for (int r = 0; r < v->rows; ++r) {
                const i64 a = v->at(r, i), b = v->at(r, j);
                v->at(r, i) = mod_reduce(x * a + y * b, n);
                v->at(r, j) = mod_reduce(z * a + ww * b, n);
            }
        }
        if (vinv) {
            // T maps cols (i, j) to (x ci + y cj, z ci + w cj), i.e. the
            // (i, j) block of T is [[x, z], [y, w]]; apply its inverse
            // [[w, -z], [-y, x]] to the rows of VInv.
            for (int c = 0; c < vinv->cols; ++c) {
                const i64 a = vinv->at(i, c), b = vinv->at(j, c);
                vinv->at(i, c) = mod_reduce(ww * a - z * b, n);
                vinv->at(j, c) = mod_reduce(-y * a + x * b, n);
            }
        }
    }

    // Diagonalize; returns the number of pivots placed. Pivots end up on the
    // diagonal, each a divisor of n (possibly 0, meaning n).
    int diagonalize() {
        const int lim = std::min(w.rows, w.cols);
        int t = 0;
        for (; t < lim; ++t) {
            // locate a nonzero pivot in the trailing submatrix
            int pi = -1, pj = -1;
            for (int i = t; i < w.rows && pi < 0; ++i) {
                for (int j = t; j < w.cols; ++j) {
                    if (w.at(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pi < 0) break;
            row_swap(t, pi);
            col_swap(t, pj);

            bool dirty = true;
            while (dirty) {
                dirty = false;
                // make the pivot a divisor of n
                i64 p = w.at(t, t);
                if (n % p != 0) {
                    row_scale_unit(t, unit_scaling_to_gcd(p, n));
                    p = w.at(t, t);
                }
                // clear column t
                for (int i = t + 1; i < w.rows; ++i) {
                    const i64 x = w.at(i, t);
                    if (x == 0) continue;
                    if (x % p == 0) {
                        row_combine(t, i, 1, 0, -(x / p), 1);
                    } else {
                        i64 a, b;
                        const i64 g = ext_gcd(p, x, a, b);
                        row_combine(t, i, a, b, -(x / g), p / g);
                        p = w.at(t, t);
                    }
                }
                // clear row t
                for (int j = t + 1; j < w.cols; ++j) {
                    const i64 x = w.at(t, j);
                    if (x == 0) continue;
                    if (x % p == 0) {
                        col_combine(t, j, 1, 0, -(x / p), 1);
                    } else {
                        i64 a, b;
                        const i64 g = ext_gcd(p, x, a, b);
                        col_combine(t, j, a, b, -(x / g), p / g);
                        p = w.at(t, t);
                        dirty = true;  // column ops can refill column t
                        break;
                    }
                }
                if (!dirty) {
                    for (int i = t + 1; i < w.rows && !dirty; ++i) dirty = w.at(i, t) != 0;
                    for (int j = t + 1; j < w.cols && !dirty; ++j) dirty = w.at(t, j) != 0;
                }
            }
        }
        return t;
    }

    // Enforce d_i | d_{i+1} along the diagonal (0 means n), with matrix ops
    // so that tracked transforms stay aligned.
    void enforce_chain(int pivots) {
        auto effective = [&](i64 d) { return d == 0 ? n : d; };
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < pivots; ++i) {
                const i64 a = w.at(i, i), b = w.at(i + 1, i + 1);
                if (effective(b) % effective(a) == 0) continue;
                changed = true;
                // move b next to a, then split into gcd and lcm
                col_combine(i, i + 1, 1, 1, 0, 1);  // col_i += col_{i+1}
                i64 x, y;
                const i64 ae = effective(a), be = effective(b);
                const i64 g = ext_gcd(ae, be, x, y);
                row_combine(i, i + 1, x, y, -(be / g), ae / g);
                // clear the remaining (i, i+1) entry
                const i64 rem = w.at(i, i + 1);
                const i64 piv = w.at(i, i);
                if (rem != 0) {
                    col_combine(i, i + 1, 1, 0, -(rem / piv), 1);
                }
            }
        }
    }
};

}  // namespace

KernelBasis ConstraintSolver::solve() const {
    KernelBasis kb;
    kb.modulus = n_;
    kb.orders.assign(m_, n_);
    kb.basis = Mat::identity(m_, n_);
    kb.basis_inv = Mat::identity(m_, n_);
    if (n_ == 1 || m_ == 0) return kb;

    const int r = static_cast<int>(rows_.size());
    Mat w = Mat::zero(r, m_, n_);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < m_; ++j) w.at(i, j) = rows_[i][j];
    }
    Worker worker{w, &kb.basis, &kb.basis_inv, nullptr, n_};
    const int pivots = worker.diagonalize();
    for (int i = 0; i < pivots; ++i) {
        const i64 d = w.at(i, i);
        kb.orders[i] = (d == 0) ? n_ : std::gcd(d, n_);
    }
    return kb;
}

CokernelResult cokernel_invariants(Mat& relations, Mat& generators) {
    const i64 n = relations.n;
    CokernelResult out;
    const int m = relations.rows;
    out.diagonal.assign(m, n);
    if (n == 1) {
        out.diagonal.assign(m, 1);
        return out;
    }
    Worker worker{relations, nullptr, nullptr, &generators, n};
    const int pivots = worker.diagonalize();
    worker.enforce_chain(pivots);
    for (int i = 0; i < pivots; ++i) {
        const i64 d = relations.at(i, i);
        out.diagonal[i] = (d == 0) ? n : std::gcd(d, n);
    }
    // columns without a relation pivot keep ambient order n (already set)
    for (i64 d : out.diagonal) {
        if (d > 1) out.invariant_factors.push_back(d);
    }
    return out;
}

}  // namespace spinrep::modular
