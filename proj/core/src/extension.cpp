#include "spinrep/extension.hpp"

#include <algorithm>

namespace spinrep {

namespace {

FiniteGroup build_pair_group(const FiniteGroup& base, const CocycleZN& c) {
    const int n = base.order();
    const int m = c.modulus;
    if (c.values.size() != static_cast<size_t>(n) * n) {
        throw BadCocycle("central_extension: cocycle table size mismatch");
    }
    for (int g = 0; g < n; ++g) {
        if (c.at(base.identity(), g, n) != 0 || c.at(g, base.identity(), n) != 0) {
            throw BadCocycle("central_extension: cocycle is not normalized");
        }
    }
    const int order = m * n;
    std::vector<int> table(static_cast<size_t>(order) * order);
    for (int z1 = 0; z1 < m; ++z1) {
        for (int g1 = 0; g1 < n; ++g1) {
            const int a = z1 * n + g1;
            for (int z2 = 0; z2 < m; ++z2) {
                for (int g2 = 0; g2 < n; ++g2) {
                    const int b = z2 * n + g2;
                    const int z = static_cast<int>((z1 + z2 + c.at(g1, g2, n)) % m);
                    table[static_cast<size_t>(a) * order + b] = z * n + base.mul(g1, g2);
                }
            }
        }
    }
    // FiniteGroup validation includes associativity over all triples, which
    // is exactly the cocycle identity for this table.
    return FiniteGroup(order, std::move(table), base.identity());
}

}  // namespace

CentralExtension::CentralExtension(FiniteGroup base, CocycleZN cocycle)
    : base_(std::move(base)), cocycle_(std::move(cocycle)),
      extended_(build_pair_group(base_, cocycle_)) {}

CentralExtension central_extension(const FiniteGroup& g, const CocycleZN& c) {
    if (auto witness = cocycle_check(g, c)) {
        throw BadCocycle("central_extension: cocycle identity fails");
    }
    return CentralExtension(g, c);
}

ExtensionView extension_from_central_subgroup(const FiniteGroup& g, const std::vector<int>& z) {
    const auto zc = center(g);
    for (int u : z) {
        if (std::find(zc.begin(), zc.end(), u) == zc.end()) {
            throw SubgroupError("extension_from_central_subgroup: subgroup is not central");
        }
    }
    const int m = static_cast<int>(z.size());
    // find a generator of Z and the discrete log table Z -> Z/m
    std::vector<int> log_of(g.order(), -1);
    int generator = -1;
    for (int cand : z) {
        int acc = g.identity();
        int k = 0;
        std::fill(log_of.begin(), log_of.end(), -1);
        bool covers = true;
        do {
            log_of[acc] = k;
            acc = g.mul(acc, cand);
            ++k;
        } while (acc != g.identity() && k <= m);
        if (k == m) {
            for (int u : z) covers &= log_of[u] >= 0;
            if (covers) {
                generator = cand;
                break;
            }
        }
    }
    if (generator < 0) throw NotCyclicFiber("extension_from_central_subgroup: fiber is not cyclic");

    QuotientGroup q = quotient_group(g, z);
    const int nq = q.group.order();
    // a normalized defect cocycle needs s(identity coset) = e
    q.section[q.coset_of[g.identity()]] = g.identity();

    CocycleZN c;
    c.modulus = m;
    c.values.assign(static_cast<size_t>(nq) * nq, 0);
    for (int a = 0; a < nq; ++a) {
        for (int b = 0; b < nq; ++b) {
            // s(a) s(b) = z_{a,b} s(ab) with the least-index section
            const int prod = g.mul(q.section[a], q.section[b]);
            const int rep = q.section[q.group.mul(a, b)];
            const int defect = g.mul(prod, g.inv(rep));
            c.values[static_cast<size_t>(a) * nq + b] = log_of[defect];
        }
    }

    CentralExtension ext(q.group, c);
    std::vector<int> iso(static_cast<size_t>(m) * nq);
    for (int zz = 0; zz < m; ++zz) {
        int zelt = g.identity();
        for (int k = 0; k < zz; ++k) zelt = g.mul(zelt, generator);
        for (int a = 0; a < nq; ++a) {
            iso[static_cast<size_t>(ext.pair_index(zz, a))] = g.mul(zelt, q.section[a]);
        }
    }
    return {std::move(ext), std::move(iso)};
}

}  // namespace spinrep
