#ifndef SEQCM_HOMOLOGY_HPP
#define SEQCM_HOMOLOGY_HPP

#include <vector>

#include "seqcm/ideal.hpp"
#include "seqcm/linalg.hpp"

// Simplicial-complex route to depth and dimension of squarefree quotients,
// independent of the degreewise torsion-cohomology engine: reduced homology
// of face links feeds the classical depth formula.

namespace seqcm {

/// Simplicial complex on a fixed ground set, stored by its facets.
/// facets == {} is the void complex; facets == {{}} is the empty complex,
/// whose only face is the empty face.
class SimplicialComplex {
public:
    SimplicialComplex(int ground_size, std::vector<VarSet> facets);

    [[nodiscard]] int ground_size() const { return ground_size_; }
    [[nodiscard]] const std::vector<VarSet>& facets() const { return facets_; }
    [[nodiscard]] bool is_void() const { return facets_.empty(); }
    /// All faces (including the empty face), sorted by (size, bitmask).
    [[nodiscard]] std::vector<VarSet> faces() const;
    /// link(face) = { g - face : face <= g in the complex }.
    [[nodiscard]] SimplicialComplex link(VarSet face) const;

private:
    int ground_size_ = 0;
    std::vector<VarSet> facets_;
};

/// Complex whose faces are the variable sets containing no generator support
/// (facets = complements of the minimal primes).
[[nodiscard]] SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal);

/// Reduced homology dimensions, index i = -1 .. ground_size-1 stored at
/// entry i+1.  The void complex has no homology at all (all zero).
[[nodiscard]] std::vector<int> reduced_homology_dims(const SimplicialComplex& complex,
                                                     const FieldSpec& field);

struct DepthDim {
    int depth = 0;
    int dim = 0;
};

/// depth = min { i : some face F has reduced H_(i-|F|-1) of its link nonzero },
/// dim = max facet size.  Requires a proper ideal; the zero ideal gives the
/// full simplex (depth = dim = number of variables).
[[nodiscard]] DepthDim depth_dim_oracle(const SquarefreeIdeal& ideal, const FieldSpec& field);

} // namespace seqcm

#endif
