#include "seqcm/enumerate.hpp"

#include <algorithm>

namespace seqcm {

namespace {

bool comparable(VarSet a, VarSet b) { return a.subset_of(b) || b.subset_of(a); }

// Antichains as sorted independent lists over the candidate supports.
bool extend(const RingSpec& ring, const std::vector<VarSet>& candidates,
            std::vector<VarSet>& chosen, std::size_t from,
            const std::function<bool(const SquarefreeIdeal&)>& visit) {
    for (std::size_t i = from; i < candidates.size(); ++i) {
        bool independent = true;
        for (VarSet c : chosen)
            if (comparable(c, candidates[i])) { independent = false; break; }
        if (!independent) continue;
        chosen.push_back(candidates[i]);
        if (!visit(SquarefreeIdeal(ring, chosen))) return false;
        if (!extend(ring, candidates, chosen, i + 1, visit)) return false;
        chosen.pop_back();
    }
    return true;
}

} // namespace

void enumerate_squarefree_ideals(const RingSpec& ring,
                                 const std::function<bool(const SquarefreeIdeal&)>& visit) {
    std::vector<VarSet> candidates;
    for (std::uint32_t bits = 1; bits <= ring.all_vars().bits; ++bits)
        candidates.push_back(VarSet(bits));
    std::sort(candidates.begin(), candidates.end(), [](VarSet a, VarSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
    });
    std::vector<VarSet> chosen;
    extend(ring, candidates, chosen, 0, visit);
}

std::uint64_t count_squarefree_ideals(int nvars) {
    // antichain counts minus the zero and unit ideals
    static const std::uint64_t table[] = {0, 1, 4, 18, 166, 7579, 7828352};
    if (nvars >= 1 && nvars <= 6) return table[nvars];
    return UINT64_MAX;
}

SquarefreeIdeal random_squarefree_ideal(const RingSpec& ring, std::mt19937_64& rng) {
    std::uint32_t all = ring.all_vars().bits;
    std::size_t count = 1 + std::size_t(rng() % std::uint64_t(2 * ring.var_count()));
    std::vector<VarSet> gens;
    gens.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        gens.push_back(VarSet(1 + std::uint32_t(rng() % std::uint64_t(all))));
    return {ring, std::move(gens)};
}

} // namespace seqcm
