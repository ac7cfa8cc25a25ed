#pragma once

#include "spinrep/cohomology.hpp"
#include "spinrep/group.hpp"

namespace spinrep {

/// Central extension 1 -> Z/m -> G' -> G -> 1 built from a normalized
/// cocycle: G' lives on pairs (z, g) with product
/// (z1, g1)(z2, g2) = (z1 + z2 + c(g1, g2), g1 g2), indexed as z*|G| + g.
/// The defining section is s(g) = (0, g); associativity of the pair table is
/// equivalent to the cocycle identity and is revalidated on construction.
class CentralExtension {
public:
    CentralExtension(FiniteGroup base, CocycleZN cocycle);

    const FiniteGroup& base() const { return base_; }
    const FiniteGroup& group() const { return extended_; }
    const CocycleZN& cocycle() const { return cocycle_; }
    int fiber_modulus() const { return cocycle_.modulus; }

    int pair_index(int z, int g) const { return z * base_.order() + g; }
    int fiber_element(int z) const { return pair_index(z, base_.identity()); }
    int section(int g) const { return pair_index(0, g); }
    int project(int idx) const { return idx % base_.order(); }
    int fiber_part(int idx) const { return idx / base_.order(); }

    /// The fiber value z_{g,h} with s(g) s(h) = z_{g,h} s(gh).
    int section_defect(int g, int h) const {
        return static_cast<int>(cocycle_.at(g, h, base_.order()));
    }

private:
    FiniteGroup base_;
    CocycleZN cocycle_;
    FiniteGroup extended_;
};

CentralExtension central_extension(const FiniteGroup& g, const CocycleZN& c);

/// Rewrites a group with a chosen central cyclic subgroup Z in canonical
/// pair form: picks a generator of Z, the least-index section of G/Z, and
/// the section-defect cocycle. iso[pair_index] gives the element of the
/// original group corresponding to each pair. Throws NotCyclicFiber when Z
/// is not cyclic, SubgroupError when Z is not central.
struct ExtensionView {
    CentralExtension extension;
    std::vector<int> iso;  // extension index -> original element
};

ExtensionView extension_from_central_subgroup(const FiniteGroup& g, const std::vector<int>& z);

}  // namespace spinrep
