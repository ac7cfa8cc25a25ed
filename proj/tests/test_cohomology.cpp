#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "spinrep/cohomology.hpp"
#include "spinrep/extension.hpp"
#include "spinrep/group.hpp"
#include "support/brute_cohomology.hpp"

using Table = brute::Table;

using namespace spinrep;

TEST_CASE("cocycle_check") {
    const FiniteGroup v = builtin_group("Z2xZ2");
    CocycleZN zero{2, Table(16, 0)};
    CHECK_FALSE(cocycle_check(v, zero).has_value());

    SUBCASE("coboundaries are cocycles") {
        std::mt19937_64 rng(51);
        std::uniform_int_distribution<int> d(0, 3);
        for (const char* name : {"Z4", "S3", "D4"}) {
            const FiniteGroup g = builtin_group(name);
            for (int t = 0; t < 20; ++t) {
                std::vector<long long> lambda(g.order(), 0);
                for (int a = 0; a < g.order(); ++a) {
                    if (a != g.identity()) lambda[a] = d(rng);
                }
                CHECK_FALSE(cocycle_check(g, coboundary_of(g, lambda, 4)).has_value());
            }
        }
    }

    SUBCASE("the bilinear Klein-four cocycle c((a,b),(a',b')) = b a'") {
        // element index = 2*a + b
        CocycleZN c{2, Table(16, 0)};
        for (int g1 = 0; g1 < 4; ++g1) {
            for (int g2 = 0; g2 < 4; ++g2) {
                c.values[static_cast<size_t>(g1) * 4 + g2] = (g1 & 1) * (g2 >> 1);
            }
        }
        CHECK_FALSE(cocycle_check(v, c).has_value());
    }

    SUBCASE("a broken table yields a witness") {
        CocycleZN c{2, Table(16, 0)};
        c.values[1 * 4 + 1] = 1;
        c.values[1 * 4 + 2] = 0;
        const auto witness = cocycle_check(v, c);
        // not every single-entry bump is a cocycle; this one is not
        REQUIRE(witness.has_value());
        const auto [k, a, b] = *witness;
        const int n = 4;
        const long long lhs = c.values[k * n + v.mul(a, b)] + c.values[a * n + b];
        const long long rhs = c.values[k * n + a] + c.values[v.mul(k, a) * n + b];
        CHECK((lhs - rhs) % 2 != 0);
    }
}

TEST_CASE("coboundary_of") {
    const FiniteGroup z2 = builtin_group("Z2");
    CHECK(coboundary_of(z2, {0, 0}, 2).values == Table{0, 0, 0, 0});
    // any lambda on Z2 mod 2 gives the zero cocycle (2*lambda = 0)
    CHECK(coboundary_of(z2, {0, 1}, 2).values == Table{0, 0, 0, 0});
    CHECK_THROWS_AS(coboundary_of(z2, {1, 0}, 2), BadCocycle);  // lambda(e) != 0
}

TEST_CASE("H2 agrees with exhaustive enumeration at small order") {
    struct Case {
        const char* name;
        int modulus;
        std::vector<long long> expected;  // textbook values, cross-checked by the oracle
    };
    const Case cases[] = {
        {"Z1", 2, {}},
        {"Z2", 2, {2}},
        {"Z2", 4, {2}},
        {"Z3", 3, {3}},
        {"Z4", 2, {2}},
        {"Z4", 4, {4}},
        {"Z2xZ2", 2, {2, 2, 2}},
        {"Z2xZ2", 4, {2, 2, 2}},
    };
    for (const Case& c : cases) {
        CAPTURE(c.name);
        CAPTURE(c.modulus);
        const FiniteGroup g = builtin_group(c.name);
        const H2Result computed = cohomology_H2_mod(g, c.modulus);
        const brute::Quotient oracle = brute::quotient(g, c.modulus);
        CHECK(computed.invariants == brute::invariants_from_counts(oracle));
        CHECK(computed.invariants == c.expected);

        // representatives: genuine cocycles, and their classes have the
        // stated orders in the brute-force quotient
        REQUIRE(computed.basis.size() == computed.invariants.size());
        const Table zero_canon = oracle.canonical(Table(computed.basis.empty()
                                                           ? 0
                                                           : computed.basis[0].values.size(),
                                                       0));
        for (size_t i = 0; i < computed.basis.size(); ++i) {
            CHECK_FALSE(cocycle_check(g, computed.basis[i]).has_value());
            long long order = 1;
            Table acc = computed.basis[i].values;
            while (oracle.canonical(acc) != zero_canon) {
                acc = brute::add_tables(acc, computed.basis[i].values, c.modulus);
                ++order;
                REQUIRE(order <= c.modulus);
            }
            CHECK(order == computed.invariants[i]);
        }
    }
}

TEST_CASE("H2 at larger orders matches the universal-coefficient values") {
    // H^2(G, Z/m) = Ext(H1(G), Z/m) + Hom(H2(G), Z/m) for trivial action;
    // expected values computed by hand from the known H1, H2 of each group.
    struct Case {
        const char* name;
        int modulus;
        std::vector<long long> expected;
    };
    const Case cases[] = {
        {"Q8", 2, {2, 2}},       // H1 = (Z/2)^2, H2 = 0
        {"Q8", 8, {2, 2}},
        {"D4", 2, {2, 2, 2}},    // H1 = (Z/2)^2, H2 = Z/2
        {"D4", 8, {2, 2, 2}},
        {"S3", 3, {}},           // H1 = Z/2, H2 = 0
        {"S3", 6, {2}},
        {"S4", 2, {2, 2}},       // H1 = Z/2, H2 = Z/2
        {"Z6", 6, {6}},          // cyclic
        {"Z2xZ2", 8, {2, 2, 2}},
    };
    for (const Case& c : cases) {
        CAPTURE(c.name);
        CAPTURE(c.modulus);
        const H2Result r = cohomology_H2_mod(builtin_group(c.name), c.modulus);
        CHECK(r.invariants == c.expected);
        for (const CocycleZN& rep : r.basis) {
            CHECK_FALSE(cocycle_check(builtin_group(c.name), rep).has_value());
        }
    }
}

TEST_CASE("H2 guards") {
    CHECK_THROWS_AS(cohomology_H2_mod(builtin_group("Z2"), 0), BadCocycle);
    CHECK(cohomology_H2_mod(builtin_group("Z2"), 1).invariants.empty());
    CHECK(cohomology_H2_mod(builtin_group("Z1"), 12).invariants.empty());

    SUBCASE("orders above 64 hit the complexity guard") {
        const int n = 65;
        std::vector<int> table(static_cast<size_t>(n) * n);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
        }
        const FiniteGroup big(n, std::move(table), 0);
        CHECK_THROWS_AS(cohomology_H2_mod(big, 2), TooLarge);
        CHECK_THROWS_AS(schur_multiplier(big), TooLarge);
    }
}

TEST_CASE("hom generators really are homomorphisms") {
    for (const char* name : {"Z2", "Z4", "Z2xZ2", "S3", "D4", "S4"}) {
        const FiniteGroup g = builtin_group(name);
        const auto gens = hom_to_cyclic_generators(g, g.order());
        for (const auto& f : gens) {
            CHECK(f[g.identity()] == 0);
            bool nonzero = false;
            for (int a = 0; a < g.order(); ++a) {
                nonzero |= f[a] != 0;
                for (int b = 0; b < g.order(); ++b) {
                    CHECK((f[a] + f[b] - f[g.mul(a, b)]) % g.order() == 0);
                }
            }
            CHECK(nonzero);
        }
    }
    // |Hom(S3, Z/6)| = 2 (through the sign); one nontrivial generator
    CHECK(hom_to_cyclic_generators(builtin_group("S3"), 6).size() == 1);
}

TEST_CASE("schur multipliers of the builtin groups") {
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(schur_multiplier(builtin_group("Z" + std::to_string(n))).empty());
    }
    CHECK(schur_multiplier(builtin_group("S3")).empty());
    CHECK(schur_multiplier(builtin_group("Q8")).empty());
    CHECK(schur_multiplier(builtin_group("Z2xZ2")) == AbelianInvariants{2});
    CHECK(schur_multiplier(builtin_group("D4")) == AbelianInvariants{2});
    CHECK(schur_multiplier(builtin_group("S4")) == AbelianInvariants{2});
}

TEST_CASE("schur multiplier is invariant under relabeling") {
    std::mt19937_64 rng(52);
    std::vector<std::string> names = {"Z2xZ2", "S3", "D4", "Q8", "S4"};
    for (int n = 1; n <= 12; ++n) names.push_back("Z" + std::to_string(n));
    for (const std::string& name : names) {
        const FiniteGroup g = builtin_group(name);
        const AbelianInvariants expected = schur_multiplier(g);
        for (int t = 0; t < 5; ++t) {
            std::vector<int> perm(g.order());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(schur_multiplier(relabel(g, perm)) == expected);
        }
    }
}

TEST_CASE("central extensions") {
    const FiniteGroup v = builtin_group("Z2xZ2");

    SUBCASE("zero cocycle gives the direct product") {
        CocycleZN zero{2, Table(16, 0)};
        const CentralExtension ext = central_extension(v, zero);
        CHECK(ext.group().order() == 8);
        CHECK(ext.group().is_abelian());
        // no element of order 4: Z2 x Z2 x Z2
        for (int g = 0; g < 8; ++g) CHECK(ext.group().element_order(g) <= 2);
    }

    SUBCASE("the bilinear cocycle gives a nonabelian group of order 8") {
        CocycleZN c{2, Table(16, 0)};
        for (int g1 = 0; g1 < 4; ++g1) {
            for (int g2 = 0; g2 < 4; ++g2) {
                c.values[static_cast<size_t>(g1) * 4 + g2] = (g1 & 1) * (g2 >> 1);
            }
        }
        const CentralExtension ext = central_extension(v, c);
        CHECK(ext.group().order() == 8);
        CHECK_FALSE(ext.group().is_abelian());
        // order profile: 5 elements of order 2 -> dihedral, not quaternion
        int order2 = 0, order4 = 0;
        for (int g = 0; g < 8; ++g) {
            const int o = ext.group().element_order(g);
            if (o == 2) ++order2;
            if (o == 4) ++order4;
        }
        CHECK(order2 == 5);
        CHECK(order4 == 2);

        // the fiber is central and the projection is a homomorphism
        for (int z = 0; z < 2; ++z) {
            const int f = ext.fiber_element(z);
            for (int x = 0; x < 8; ++x) {
                CHECK(ext.group().mul(f, x) == ext.group().mul(x, f));
            }
        }
        for (int x = 0; x < 8; ++x) {
            for (int y = 0; y < 8; ++y) {
                CHECK(ext.project(ext.group().mul(x, y)) ==
                      v.mul(ext.project(x), ext.project(y)));
            }
        }
        // s(g) s(h) = (c(g,h), gh)
        for (int g1 = 0; g1 < 4; ++g1) {
            for (int g2 = 0; g2 < 4; ++g2) {
                CHECK(ext.group().mul(ext.section(g1), ext.section(g2)) ==
                      ext.pair_index(ext.section_defect(g1, g2), v.mul(g1, g2)));
            }
        }
    }

    SUBCASE("invalid cocycles are rejected") {
        CocycleZN broken{2, Table(16, 0)};
        broken.values[0 * 4 + 1] = 1;  // violates normalization
        CHECK_THROWS_AS(central_extension(v, broken), BadCocycle);
    }

    SUBCASE("H2 representatives of D4's quotient build valid order-8 extensions") {
        const H2Result h2 = cohomology_H2_mod(v, 2);
        for (const CocycleZN& rep : h2.basis) {
            const CentralExtension ext = central_extension(v, rep);
            CHECK(ext.group().order() == 8);  // construction validates associativity
        }
    }
}

TEST_CASE("extension view of a group with a central subgroup") {
    const FiniteGroup d4 = builtin_group("D4");
    const ExtensionView view = extension_from_central_subgroup(d4, center(d4));
    CHECK(view.extension.base().order() == 4);
    CHECK(view.extension.fiber_modulus() == 2);
    CHECK(view.extension.group().order() == 8);
    // iso transports the pair product to the original product
    const FiniteGroup& e = view.extension.group();
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            CHECK(view.iso[e.mul(x, y)] == d4.mul(view.iso[x], view.iso[y]));
        }
    }
    CHECK_THROWS_AS(extension_from_central_subgroup(builtin_group("S3"), {0, 1}), SubgroupError);
}
