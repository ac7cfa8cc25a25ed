#include "spinrep/cohomology.hpp"

#include <algorithm>

namespace spinrep {

namespace {

using modular::i64;
using modular::Mat;
using modular::mod_reduce;

constexpr int kMaxOrder = 64;

// Indexing of the normalized cocycle unknowns: one unknown per ordered pair
// of non-identity elements. unknown_of[g*n + h] is the unknown index or -1.
struct UnknownMap {
    int count = 0;
    std::vector<int> of;       // n*n -> unknown index or -1
    std::vector<int> nonid;    // unknown-free list of non-identity elements

    UnknownMap(const FiniteGroup& g) {
        const int n = g.order();
        of.assign(static_cast<size_t>(n) * n, -1);
        for (int a = 0; a < n; ++a) {
            if (a != g.identity()) nonid.push_back(a);
        }
        for (int a : nonid) {
            for (int b : nonid) {
                of[static_cast<size_t>(a) * n + b] = count++;
            }
        }
    }
};

// Full cocycle table from an unknown vector (normalized entries filled in).
CocycleZN table_from_unknowns(const FiniteGroup& g, const UnknownMap& um,
                              const std::vector<i64>& x, int modulus) {
    const int n = g.order();
    CocycleZN c;
    c.modulus = modulus;
    c.values.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int u = um.of[static_cast<size_t>(a) * n + b];
            if (u >= 0) c.values[static_cast<size_t>(a) * n + b] = mod_reduce(x[u], modulus);
        }
    }
    return c;
}

std::vector<i64> unknowns_from_table(const FiniteGroup& g, const UnknownMap& um,
                                     const CocycleZN& c) {
    const int n = g.order();
    std::vector<i64> x(um.count, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int u = um.of[static_cast<size_t>(a) * n + b];
            if (u >= 0) x[u] = c.at(a, b, n);
        }
    }
    return x;
}

// Kernel of the cocycle-identity constraints over the normalized unknowns.
modular::KernelBasis cocycle_kernel(const FiniteGroup& g, const UnknownMap& um, int modulus) {
    const int n = g.order();
    modular::ConstraintSolver solver(um.count, modulus);
    std::vector<std::pair<int, i64>> terms;
    for (int k : um.nonid) {
        for (int a : um.nonid) {
            const int ka = g.mul(k, a);
            for (int b : um.nonid) {
                // c(k, ab) + c(a, b) - c(k, a) - c(ka, b) = 0; terms with an
                // identity argument are normalized away.
                terms.clear();
                const int ab = g.mul(a, b);
                if (int u = um.of[static_cast<size_t>(k) * n + ab]; u >= 0) terms.push_back({u, 1});
                terms.push_back({um.of[static_cast<size_t>(a) * n + b], 1});
                terms.push_back({um.of[static_cast<size_t>(k) * n + a], -1});
                if (int u = um.of[static_cast<size_t>(ka) * n + b]; u >= 0) terms.push_back({u, -1});
                solver.add_constraint(terms);
            }
        }
    }
    return solver.solve();
}

// Columns expressing the coboundary generators in kernel coordinates.
void append_relation_columns(const modular::KernelBasis& kb,
                             const std::vector<std::vector<i64>>& vectors, Mat& relations,
                             int first_col) {
    for (size_t j = 0; j < vectors.size(); ++j) {
        const std::vector<i64> coords = kb.coordinates(vectors[j]);
        for (int i = 0; i < static_cast<int>(coords.size()); ++i) {
            relations.at(i, first_col + static_cast<int>(j)) = coords[i];
        }
    }
}

struct Presentation {
    modular::KernelBasis kernel;
    Mat generators;  // columns: kernel generators as unknown-vectors mod N
};

Presentation cocycle_presentation(const FiniteGroup& g, const UnknownMap& um, int modulus) {
    Presentation p{cocycle_kernel(g, um, modulus), Mat()};
    const int m = um.count;
    p.generators = Mat::zero(m, m, modulus);
    for (int i = 0; i < m; ++i) {
        const i64 scale = modulus / p.kernel.orders[i];
        for (int r = 0; r < m; ++r) {
            p.generators.at(r, i) = mod_reduce(scale * p.kernel.basis.at(r, i), modulus);
        }
    }
    return p;
}

std::vector<std::vector<i64>> coboundary_vectors(const FiniteGroup& g, const UnknownMap& um,
                                                 int modulus) {
    std::vector<std::vector<i64>> out;
    for (int lam : um.nonid) {
        std::vector<long long> lambda(g.order(), 0);
        lambda[lam] = 1;
        const CocycleZN b = coboundary_of(g, lambda, modulus);
        out.push_back(unknowns_from_table(g, um, b));
    }
    return out;
}

}  // namespace

std::optional<CocycleWitness> cocycle_check(const FiniteGroup& g, const CocycleZN& c) {
    const int n = g.order();
    if (c.values.size() != static_cast<size_t>(n) * n) {
        throw BadCocycle("cocycle_check: table size does not match the group order");
    }
    const int m = c.modulus;
    for (int k = 0; k < n; ++k) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const i64 lhs = c.at(k, g.mul(a, b), n) + c.at(a, b, n);
                const i64 rhs = c.at(k, a, n) + c.at(g.mul(k, a), b, n);
                if (mod_reduce(lhs - rhs, m) != 0) return CocycleWitness{k, a, b};
            }
        }
    }
    return std::nullopt;
}

CocycleZN coboundary_of(const FiniteGroup& g, const std::vector<long long>& lambda, int modulus) {
    const int n = g.order();
    if (static_cast<int>(lambda.size()) != n) {
        throw BadCocycle("coboundary_of: lambda size does not match the group order");
    }
    if (mod_reduce(lambda[g.identity()], modulus) != 0) {
        throw BadCocycle("coboundary_of: lambda(e) must be 0");
    }
    CocycleZN c;
    c.modulus = modulus;
    c.values.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            c.values[static_cast<size_t>(a) * n + b] =
                mod_reduce(lambda[a] + lambda[b] - lambda[g.mul(a, b)], modulus);
        }
    }
    return c;
}

H2Result cohomology_H2_mod(const FiniteGroup& g, int modulus) {
    if (g.order() > kMaxOrder) throw TooLarge("cohomology_H2_mod: |G| > 64");
    if (modulus < 1) throw BadCocycle("cohomology_H2_mod: modulus must be >= 1");

    H2Result out;
    const UnknownMap um(g);
    if (modulus == 1 || um.count == 0) return out;

    Presentation pres = cocycle_presentation(g, um, modulus);
    const int m = um.count;
    const auto cob = coboundary_vectors(g, um, modulus);

    Mat relations = Mat::zero(m, m + static_cast<int>(cob.size()), modulus);
    for (int i = 0; i < m; ++i) relations.at(i, i) = mod_reduce(pres.kernel.orders[i], modulus);
    append_relation_columns(pres.kernel, cob, relations, m);

    const auto cok = modular::cokernel_invariants(relations, pres.generators);
    out.invariants = cok.invariant_factors;
    for (int i = 0; i < m; ++i) {
        if (cok.diagonal[i] > 1) {
            std::vector<i64> x(m);
            for (int r = 0; r < m; ++r) x[r] = pres.generators.at(r, i);
            out.basis.push_back(table_from_unknowns(g, um, x, modulus));
        }
    }
    return out;
}

std::vector<std::vector<long long>> hom_to_cyclic_generators(const FiniteGroup& g, int modulus) {
    const int n = g.order();
    std::vector<int> nonid;
    for (int a = 0; a < n; ++a) {
        if (a != g.identity()) nonid.push_back(a);
    }
    std::vector<int> unknown_of(n, -1);
    for (size_t i = 0; i < nonid.size(); ++i) unknown_of[nonid[i]] = static_cast<int>(i);

    modular::ConstraintSolver solver(static_cast<int>(nonid.size()), modulus);
    std::vector<std::pair<int, i64>> terms;
    for (int a : nonid) {
        for (int b : nonid) {
            terms.clear();
            terms.push_back({unknown_of[a], 1});
            terms.push_back({unknown_of[b], 1});
            if (int u = unknown_of[g.mul(a, b)]; u >= 0) terms.push_back({u, -1});
            solver.add_constraint(terms);
        }
    }
    const auto kb = solver.solve();

    std::vector<std::vector<long long>> gens;
    for (size_t i = 0; i < nonid.size(); ++i) {
        if (kb.orders[i] <= 1) continue;
        const i64 scale = modulus / kb.orders[i];
        std::vector<long long> f(n, 0);
        bool nonzero = false;
        for (size_t r = 0; r < nonid.size(); ++r) {
            f[nonid[r]] = mod_reduce(scale * kb.basis.at(static_cast<int>(r), static_cast<int>(i)),
                                     modulus);
            nonzero |= f[nonid[r]] != 0;
        }
        if (nonzero) gens.push_back(std::move(f));
    }
    return gens;
}

AbelianInvariants schur_multiplier(const FiniteGroup& g) {
    if (g.order() > kMaxOrder) throw TooLarge("schur_multiplier: |G| > 64");
    const int modulus = g.order();
    const UnknownMap um(g);
    if (modulus == 1 || um.count == 0) return {};

    Presentation pres = cocycle_presentation(g, um, modulus);
    const int m = um.count;
    const auto cob = coboundary_vectors(g, um, modulus);

    // Connecting-map image: for a character f: G -> Z/N, lift values to Z
    // and record the carry (f(a) + f(b) - f(ab)) / N as a mod-N cocycle.
    const auto homs = hom_to_cyclic_generators(g, modulus);
    std::vector<std::vector<i64>> carries;
    const int n = g.order();
    for (const auto& f : homs) {
        CocycleZN carry;
        carry.modulus = modulus;
        carry.values.assign(static_cast<size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const i64 t = f[a] + f[b] - f[g.mul(a, b)];
                if (t % modulus != 0) {
                    throw BadCocycle("schur_multiplier: hom generator is not a homomorphism");
                }
                carry.values[static_cast<size_t>(a) * n + b] = mod_reduce(t / modulus, modulus);
            }
        }
        carries.push_back(unknowns_from_table(g, um, carry));
    }

    Mat relations =
        Mat::zero(m, m + static_cast<int>(cob.size()) + static_cast<int>(carries.size()), modulus);
    for (int i = 0; i < m; ++i) relations.at(i, i) = mod_reduce(pres.kernel.orders[i], modulus);
    append_relation_columns(pres.kernel, cob, relations, m);
    append_relation_columns(pres.kernel, carries, relations,
                            m + static_cast<int>(cob.size()));

    const auto cok = modular::cokernel_invariants(relations, pres.generators);
    return cok.invariant_factors;
}

}  // namespace spinrep
