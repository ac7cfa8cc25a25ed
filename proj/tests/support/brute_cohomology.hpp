#pragma once

// Exhaustive second-cohomology oracle for tiny groups: enumerates every
// normalized cocycle table and every coboundary, forms the quotient on
// explicit cosets, and reads invariant factors off the order-counting
// profile. Deliberately shares no machinery with the Smith-form path it
// cross-checks.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "spinrep/cohomology.hpp"
#include "spinrep/group.hpp"

namespace brute {

using Table = std::vector<long long>;

inline std::vector<Table> all_cocycles(const spinrep::FiniteGroup& g, int n_mod) {
    const int n = g.order();
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != g.identity() && b != g.identity()) slots.push_back({a, b});
        }
    }
    std::vector<Table> out;
    Table values(static_cast<size_t>(n) * n, 0);
    std::vector<int> odo(slots.size(), 0);
    while (true) {
        for (size_t i = 0; i < slots.size(); ++i) {
            values[static_cast<size_t>(slots[i].first) * n + slots[i].second] = odo[i];
        }
        spinrep::CocycleZN c{n_mod, values};
        if (!spinrep::cocycle_check(g, c)) out.push_back(values);
        size_t pos = 0;
        while (pos < odo.size() && ++odo[pos] == n_mod) odo[pos++] = 0;
        if (pos == odo.size()) break;
    }
    return out;
}

inline std::set<Table> all_coboundaries(const spinrep::FiniteGroup& g, int n_mod) {
    const int n = g.order();
    std::vector<int> free_elts;
    for (int a = 0; a < n; ++a) {
        if (a != g.identity()) free_elts.push_back(a);
    }
    std::set<Table> out;
    std::vector<int> odo(free_elts.size(), 0);
    while (true) {
        std::vector<long long> lambda(n, 0);
        for (size_t i = 0; i < free_elts.size(); ++i) lambda[free_elts[i]] = odo[i];
        out.insert(spinrep::coboundary_of(g, lambda, n_mod).values);
        size_t pos = 0;
        while (pos < odo.size() && ++odo[pos] == n_mod) odo[pos++] = 0;
        if (pos == odo.size()) break;
    }
    return out;
}

inline Table add_tables(const Table& a, const Table& b, int n_mod) {
    Table out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % n_mod;
    return out;
}

inline Table scale_table(const Table& a, long long k, int n_mod) {
    Table out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] * k) % n_mod;
    return out;
}

struct Quotient {
    int n_mod = 1;
    std::set<Table> coboundaries;
    std::vector<Table> reps;

    Table canonical(const Table& z) const {
        Table best;
        bool first = true;
        for (const Table& b : coboundaries) {
            Table cand = add_tables(z, b, n_mod);
            if (first || cand < best) {
                best = std::move(cand);
                first = false;
            }
        }
        return best;
    }
};

inline Quotient quotient(const spinrep::FiniteGroup& g, int n_mod) {
    Quotient q;
    q.n_mod = n_mod;
    q.coboundaries = all_coboundaries(g, n_mod);
    std::set<Table> seen;
    for (const Table& z : all_cocycles(g, n_mod)) {
        Table c = q.canonical(z);
        if (seen.insert(c).second) q.reps.push_back(std::move(c));
    }
    return q;
}

inline std::vector<long long> invariants_from_counts(const Quotient& q) {
    std::map<long long, std::vector<int>> exponents_by_prime;
    for (long long p = 2; p <= q.n_mod; ++p) {
        if (q.n_mod % p != 0) continue;
        bool prime = true;
        for (long long d = 2; d * d <= p; ++d) prime &= (p % d != 0);
        if (!prime) continue;
        std::vector<int> s{0};  // s[k] = log_p #{x : p^k x = 0}
        long long pk = p;
        const size_t table_size = q.reps.empty() ? 0 : q.reps.front().size();
        const Table zero_canon = q.canonical(Table(table_size, 0));
        while (true) {
            int count = 0;
            for (const Table& r : q.reps) {
                if (q.canonical(scale_table(r, pk, q.n_mod)) == zero_canon) ++count;
            }
            int log = 0;
            long long acc = 1;
            while (acc < count) {
                acc *= p;
                ++log;
            }
            if (acc != count) throw std::runtime_error("oracle: kill-count is not a prime power");
            if (log == s.back()) break;
            s.push_back(log);
            pk *= p;
        }
        std::vector<int> exps;
        for (size_t k = 1; k < s.size(); ++k) {
            const int with_val_ge_k = s[k] - s[k - 1];
            while (static_cast<int>(exps.size()) < with_val_ge_k) exps.push_back(0);
            for (int i = 0; i < with_val_ge_k; ++i) ++exps[i];
        }
        std::sort(exps.begin(), exps.end());
        exponents_by_prime[p] = exps;
    }
    size_t factors = 0;
    for (const auto& [p, exps] : exponents_by_prime) factors = std::max(factors, exps.size());
    std::vector<long long> inv(factors, 1);
    for (const auto& [p, exps] : exponents_by_prime) {
        for (size_t i = 0; i < exps.size(); ++i) {
            long long power = 1;
            for (int k = 0; k < exps[exps.size() - 1 - i]; ++k) power *= p;
            inv[inv.size() - 1 - i] *= power;
        }
    }
    std::erase_if(inv, [](long long d) { return d <= 1; });
    return inv;
}

}  // namespace brute
