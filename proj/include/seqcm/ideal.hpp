#ifndef SEQCM_IDEAL_HPP
#define SEQCM_IDEAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqcm/ring.hpp"

// Monomial ideals in canonical form: generator lists are antichains under
// divisibility, sorted, with the unit ideal represented by the single
// generator 1 and the zero ideal by an empty list.

namespace seqcm {

/// Exponent vector of a monomial; entries beyond the ring's variables stay 0.
struct ExpVec {
    std::array<std::int8_t, kMaxVars> e{};

    [[nodiscard]] VarSet support() const {
        VarSet s;
        for (int v = 0; v < kMaxVars; ++v)
            if (e[v] > 0) s.add(v);
        return s;
    }
    [[nodiscard]] bool divides(const ExpVec& o) const {
        for (int v = 0; v < kMaxVars; ++v)
            if (e[v] > o.e[v]) return false;
        return true;
    }
    [[nodiscard]] bool is_unit() const { return support().empty(); }
    [[nodiscard]] int max_exponent() const {
        int d = 0;
        for (int v = 0; v < kMaxVars; ++v)
            if (e[v] > d) d = e[v];
        return d;
    }
    friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.e == b.e; }
    friend bool operator<(const ExpVec& a, const ExpVec& b) { return a.e < b.e; }
};

[[nodiscard]] ExpVec squarefree_exps(VarSet support);

/// Monomial prime ideal: generated by the variables in `vars`.
struct MonomialPrime {
    RingSpec ring;
    VarSet vars;

    MonomialPrime(const RingSpec& r, VarSet v) : ring(r), vars(v) {}
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
        return a.ring == b.ring && a.vars == b.vars;
    }
};

/// Squarefree monomial ideal; generators are supports.
class SquarefreeIdeal {
public:
    SquarefreeIdeal() = default;
    /// Minimalizes, dedupes and sorts the generator list.
    SquarefreeIdeal(const RingSpec& ring, std::vector<VarSet> gens);

    [[nodiscard]] const RingSpec& ring() const { return ring_; }
    [[nodiscard]] const std::vector<VarSet>& gens() const { return gens_; }
    [[nodiscard]] bool is_zero() const { return gens_.empty(); }
    [[nodiscard]] bool is_unit() const { return gens_.size() == 1 && gens_[0].empty(); }
    [[nodiscard]] bool is_proper() const { return !is_unit(); }

    /// Divisibility membership of the squarefree monomial with this support.
    [[nodiscard]] bool contains_monomial(VarSet support) const;
    /// Ideal containment: every generator of `other` lies in *this.
    [[nodiscard]] bool contains(const SquarefreeIdeal& other) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const SquarefreeIdeal& a, const SquarefreeIdeal& b) { return !(a == b); }

private:
    RingSpec ring_{1, 0};
    std::vector<VarSet> gens_;
};

/// Monomial ideal with arbitrary exponents (canonical antichain form).
class GeneralMonomialIdeal {
public:
    GeneralMonomialIdeal() = default;
    GeneralMonomialIdeal(const RingSpec& ring, std::vector<ExpVec> gens);

    [[nodiscard]] static GeneralMonomialIdeal from_squarefree(const SquarefreeIdeal& ideal);

    [[nodiscard]] const RingSpec& ring() const { return ring_; }
    [[nodiscard]] const std::vector<ExpVec>& gens() const { return gens_; }
    [[nodiscard]] bool is_zero() const { return gens_.empty(); }
    [[nodiscard]] bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    [[nodiscard]] bool is_squarefree() const;
    [[nodiscard]] int max_exponent() const;
    /// Exact squarefree view; empty when some generator has an exponent >= 2.
    [[nodiscard]] std::optional<SquarefreeIdeal> as_squarefree() const;

    [[nodiscard]] bool contains_monomial(const ExpVec& mono) const;
    [[nodiscard]] bool contains(const GeneralMonomialIdeal& other) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const GeneralMonomialIdeal& a, const GeneralMonomialIdeal& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const GeneralMonomialIdeal& a, const GeneralMonomialIdeal& b) {
        return !(a == b);
    }

private:
    RingSpec ring_{1, 0};
    std::vector<ExpVec> gens_;
};

[[nodiscard]] std::string monomial_to_string(const RingSpec& ring, VarSet support);
[[nodiscard]] std::string monomial_to_string(const RingSpec& ring, const ExpVec& mono);

// ==== squarefree ideal operations ====

/// All minimal primes, i.e. inclusion-minimal transversals of the generator
/// supports, sorted by (cardinality, bitmask).  Errors on unit/zero input.
[[nodiscard]] std::vector<MonomialPrime> minimal_primes(const SquarefreeIdeal& ideal);

/// Intersection of a list of ideals; the list form rejects an empty list (no
/// ring to tag the unit ideal with), the prime form returns the unit ideal.
[[nodiscard]] SquarefreeIdeal intersect(const std::vector<SquarefreeIdeal>& ideals);
[[nodiscard]] SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b);
[[nodiscard]] SquarefreeIdeal intersect(const RingSpec& ring, const std::vector<MonomialPrime>& primes);

[[nodiscard]] SquarefreeIdeal sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

/// Colon ideal (a : b).
[[nodiscard]] SquarefreeIdeal colon(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

/// Facets of the associated simplicial complex: maximal variable sets that
/// contain no generator support.  Zero ideal -> the single facet of all vars.
[[nodiscard]] std::vector<VarSet> complex_facets(const SquarefreeIdeal& ideal);

/// Krull dimension of the quotient by a proper ideal (= max facet size).
[[nodiscard]] int dim_of_quotient(const SquarefreeIdeal& ideal);

[[nodiscard]] SquarefreeIdeal unit_ideal(const RingSpec& ring);
[[nodiscard]] SquarefreeIdeal zero_ideal(const RingSpec& ring);

} // namespace seqcm

#endif
