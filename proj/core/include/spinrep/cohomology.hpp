#pragma once

#include <optional>
#include <vector>

#include "spinrep/group.hpp"
#include "spinrep/modular.hpp"

namespace spinrep {

/// Z/N-valued 2-cochain on G x G, stored as additive exponents:
/// the multiplicative cocycle is (g, h) -> zeta_N ^ values[g*n + h].
/// Normalized means values[e][.] = values[.][e] = 0.
struct CocycleZN {
    int modulus = 1;
    std::vector<long long> values;  // n*n, residues in [0, modulus)

    long long at(int g, int h, int n) const { return values[static_cast<size_t>(g) * n + h]; }
};

/// Witness for a failed cocycle identity: the triple (k, g, h).
struct CocycleWitness {
    int k = 0, g = 0, h = 0;
};

/// Verifies values[k][gh] + values[g][h] = values[k][g] + values[kg][h]
/// (mod N) over all |G|^3 triples; returns the first failing triple if any.
std::optional<CocycleWitness> cocycle_check(const FiniteGroup& g, const CocycleZN& c);

/// Coboundary b(g, h) = lambda(g) + lambda(h) - lambda(gh) mod N, from
/// element-indexed residues with lambda(e) = 0 (enforced).
CocycleZN coboundary_of(const FiniteGroup& g, const std::vector<long long>& lambda, int modulus);

/// Invariant factors d1 | d2 | ... of a finite abelian group (each > 1;
/// empty list = trivial group).
using AbelianInvariants = std::vector<long long>;

/// H^2(G, Z/N): cocycles modulo coboundaries, by exact mod-N linear algebra
/// (echelonized cocycle constraints, Smith normal form of the relation
/// presentation). Also returns one representative cocycle per invariant
/// factor, in the same order. Throws TooLarge for |G| > 64.
struct H2Result {
    AbelianInvariants invariants;
    std::vector<CocycleZN> basis;
};

H2Result cohomology_H2_mod(const FiniteGroup& g, int modulus);

/// Schur multiplier H^2(G, C^x): computed as H^2(G, Z/N) with N = |G|,
/// quotiented by the image of the connecting map from Hom(G, Z/N) for
/// 0 -> Z/N -> Z/N^2 -> Z/N -> 0 (the carry cocycles of lifted characters).
AbelianInvariants schur_multiplier(const FiniteGroup& g);

/// All homomorphisms G -> Z/N as a generating set (values on each element,
/// identity -> 0). Used by the multiplier computation and its tests.
std::vector<std::vector<long long>> hom_to_cyclic_generators(const FiniteGroup& g, int modulus);

}  // namespace spinrep
