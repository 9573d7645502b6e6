#ifndef SEQCM_ENUMERATE_HPP
#define SEQCM_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <random>

#include "seqcm/ideal.hpp"

// Enumeration and sampling of proper nonzero squarefree ideals, i.e. nonempty
// antichains of nonempty variable subsets.

namespace seqcm {

/// Visits every proper nonzero squarefree ideal of the ring exactly once, in a
/// deterministic order.  Return false from the visitor to stop early.
void enumerate_squarefree_ideals(const RingSpec& ring,
                                 const std::function<bool(const SquarefreeIdeal&)>& visit);

/// Number of proper nonzero squarefree ideals in n variables; UINT64_MAX for
/// n > 6 where the count is astronomically large.
[[nodiscard]] std::uint64_t count_squarefree_ideals(int nvars);

/// Deterministic random proper nonzero squarefree ideal.
[[nodiscard]] SquarefreeIdeal random_squarefree_ideal(const RingSpec& ring, std::mt19937_64& rng);

} // namespace seqcm

#endif
