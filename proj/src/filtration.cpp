#include "seqcm/filtration.hpp"

#include <algorithm>

namespace seqcm {

std::vector<MonomialPrime> FiltrationResult::accumulated_primes(int i) const {
    if (i < 1 || i > r) throw InputError("filtration layer index out of range");
    std::vector<MonomialPrime> out;
    for (int j = 0; j < i; ++j)
        out.insert(out.end(), groups[std::size_t(j)].begin(), groups[std::size_t(j)].end());
    return out;
}

FiltrationResult dimension_filtration(const SquarefreeIdeal& ideal, VarSet torsion) {
    if (!torsion.subset_of(ideal.ring().all_vars()))
        throw InputError("torsion set contains variables outside the ring");
    std::vector<MonomialPrime> primes = minimal_primes(ideal);

    FiltrationResult out;
    out.torsion = torsion;
    out.base = ideal;

    std::vector<int> vals;
    vals.reserve(primes.size());
    for (const MonomialPrime& p : primes) vals.push_back((torsion - p.vars).size());

    out.q = vals;
    std::sort(out.q.begin(), out.q.end());
    out.q.erase(std::unique(out.q.begin(), out.q.end()), out.q.end());
    out.r = int(out.q.size());

    out.groups.assign(out.q.size(), {});
    for (std::size_t j = 0; j < primes.size(); ++j) {
        std::size_t g = std::size_t(std::lower_bound(out.q.begin(), out.q.end(), vals[j]) -
                                    out.q.begin());
        out.groups[g].push_back(primes[j]);
    }

    out.ideals.push_back(ideal);
    for (int i = 1; i <= out.r; ++i) {
        std::vector<MonomialPrime> above;
        for (std::size_t j = 0; j < primes.size(); ++j)
            if (vals[j] > out.q[std::size_t(i - 1)]) above.push_back(primes[j]);
        out.ideals.push_back(intersect(ideal.ring(), above));
    }

    for (int i = 1; i <= out.r; ++i) {
        const SquarefreeIdeal& prev = out.ideals[std::size_t(i - 1)];
        const SquarefreeIdeal& next = out.ideals[std::size_t(i)];
        if (!next.contains(prev) || next == prev)
            throw InternalError("dimension filtration chain is not strictly increasing");
    }
    return out;
}

SquarefreeIdeal unmixed_component(const SquarefreeIdeal& ideal, VarSet torsion) {
    FiltrationResult f = dimension_filtration(ideal, torsion);
    return f.ideals[std::size_t(f.r - 1)];
}

} // namespace seqcm
