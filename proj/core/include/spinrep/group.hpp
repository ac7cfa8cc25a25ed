#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinrep/errors.hpp"

namespace spinrep {

/// Finite group given by its multiplication table. Elements are indices
/// 0..n-1; table[g*n + h] is the product g*h. Validation checks, in order:
/// identity behavior, Latin-square rows/columns (which also yields inverses),
/// and associativity over all triples. The first failing axiom is reported
/// with a witness. Orders above 64 are rejected by the cohomology layer,
/// not here.
class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<int> table, int identity);

    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    const std::vector<int>& table() const { return table_; }

    /// Order of the cyclic subgroup generated by g.
    int element_order(int g) const;

    bool is_abelian() const;

private:
    int n_;
    int e_;
    std::vector<int> table_;
    std::vector<int> inverse_;
};

/// Parses the group table document: line 1 "order n", optional line 2
/// "identity i" (default 0), then n rows of n whitespace-separated 0-based
/// indices. '#' starts a comment. Throws ParseError / NotAGroup.
FiniteGroup load_group(std::istream& in);
FiniteGroup load_group_from_string(const std::string& text);
FiniteGroup load_group_from_file(const std::string& path);

/// Built-in tables: Z1..Z12, Z2xZ2, S3, D4, Q8, S4. Throws UnknownGroup.
FiniteGroup builtin_group(const std::string& name);

/// Verifies that `subset` is a subgroup (closure + inverses; SubgroupError
/// otherwise), then tests normality g N g^{-1} = N for all g.
bool is_normal(const FiniteGroup& g, const std::vector<int>& subset);

/// The center {z : zg = gz for all g}.
std::vector<int> center(const FiniteGroup& g);

/// Quotient of g by the normal subgroup n, with the coset bookkeeping needed
/// to form sections: coset_of maps an element of g to its coset index, and
/// section lists the least-index representative of each coset.
struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> coset_of;
    std::vector<int> section;
};

QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup);

/// Relabels the group by the permutation perm (new index of old element i is
/// perm[i]). Used to probe invariance of computed invariants.
FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm);

// Element index conventions of the built-in groups that carry named
// representations (see representation.hpp):
//   D4: index = b*4 + a for r^a s^b (e=0, r=1, r^2=2, r^3=3, s=4, ...).
//   Q8: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
//   Z2xZ2: index = 2*a + b for (a, b).

}  // namespace spinrep
