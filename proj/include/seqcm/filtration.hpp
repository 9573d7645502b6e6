#ifndef SEQCM_FILTRATION_HPP
#define SEQCM_FILTRATION_HPP

#include <vector>

#include "seqcm/cech.hpp"
#include "seqcm/ideal.hpp"

// Dimension filtration of S/I relative to a torsion set T: minimal primes are
// grouped by cd(T, S/p) = q_1 < ... < q_r, and the i-th submodule is
// D_i = J_i / I with J_i the intersection of the primes whose value exceeds
// q_i.  So J_0 = I, J_r = (1), and D_(r-1) is the relative unmixed part.

namespace seqcm {

struct FiltrationResult {
    VarSet torsion;
    SquarefreeIdeal base;                            // I
    int r = 0;
    std::vector<int> q;                              // ascending cd values, size r
    std::vector<std::vector<MonomialPrime>> groups;  // primes with cd == q[i]
    std::vector<SquarefreeIdeal> ideals;             // J_0..J_r

    /// D_i as a subquotient of the ring, 1 <= i <= r.
    [[nodiscard]] QuotientModule layer(int i) const {
        if (i < 1 || i > r) throw InputError("filtration layer index out of range");
        return QuotientModule::pair(ideals[std::size_t(i)], base);
    }
    /// Primes of the layers up to i (ascending cd, then prime bitmask).
    [[nodiscard]] std::vector<MonomialPrime> accumulated_primes(int i) const;
};

/// Requires a proper nonzero squarefree ideal.
[[nodiscard]] FiltrationResult dimension_filtration(const SquarefreeIdeal& ideal, VarSet torsion);

/// J_(r-1): intersection of the minimal primes of top cd value.  For
/// relatively unmixed input (r = 1) this is I itself, i.e. the zero submodule.
[[nodiscard]] SquarefreeIdeal unmixed_component(const SquarefreeIdeal& ideal, VarSet torsion);

} // namespace seqcm

#endif
