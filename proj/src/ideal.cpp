#include "seqcm/ideal.hpp"

#include <algorithm>
#include <set>

namespace seqcm {

ExpVec squarefree_exps(VarSet support) {
    ExpVec e;
    for (int v : support.members()) e.e[v] = 1;
    return e;
}

std::string monomial_to_string(const RingSpec& ring, VarSet support) {
    if (support.empty()) return "1";
    std::string out;
    for (int v : support.members()) {
        if (!out.empty()) out += "*";
        out += ring.var_name(v);
    }
    return out;
}

std::string monomial_to_string(const RingSpec& ring, const ExpVec& mono) {
    std::string out;
    for (int v = 0; v < ring.var_count(); ++v) {
        if (mono.e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.var_name(v);
        if (mono.e[v] != 1) out += "^" + std::to_string(int(mono.e[v]));
    }
    return out.empty() ? "1" : out;
}

std::string MonomialPrime::to_string() const {
    std::string out = "(";
    bool first = true;
    for (int v : vars.members()) {
        if (!first) out += ",";
        out += ring.var_name(v);
        first = false;
    }
    return out + ")";
}

// ==== canonical forms ====

namespace {

// Keeps only divisibility-minimal supports, sorted by (size, bitmask).
std::vector<VarSet> minimalize(std::vector<VarSet> gens) {
    std::sort(gens.begin(), gens.end(), [](VarSet a, VarSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
    });
    std::vector<VarSet> out;
    for (VarSet g : gens) {
        bool redundant = false;
        for (VarSet h : out)
            if (h.subset_of(g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

std::vector<ExpVec> minimalize(std::vector<ExpVec> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExpVec> out;
    for (const ExpVec& g : gens) {
        bool redundant = false;
        for (const ExpVec& h : gens)
            if (!(h == g) && h.divides(g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

} // namespace

SquarefreeIdeal::SquarefreeIdeal(const RingSpec& ring, std::vector<VarSet> gens) : ring_(ring) {
    for (VarSet g : gens)
        if (!g.subset_of(ring.all_vars()))
            throw InputError("generator uses a variable outside the ring");
    gens_ = minimalize(std::move(gens));
}

bool SquarefreeIdeal::contains_monomial(VarSet support) const {
    for (VarSet g : gens_)
        if (g.subset_of(support)) return true;
    return false;
}

bool SquarefreeIdeal::contains(const SquarefreeIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    for (VarSet g : other.gens_)
        if (!contains_monomial(g)) return false;
    return true;
}

std::string SquarefreeIdeal::to_string() const {
    if (is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += monomial_to_string(ring_, gens_[i]);
    }
    return out + ")";
}

GeneralMonomialIdeal::GeneralMonomialIdeal(const RingSpec& ring, std::vector<ExpVec> gens)
    : ring_(ring) {
    for (const ExpVec& g : gens) {
        if (!g.support().subset_of(ring.all_vars()))
            throw InputError("generator uses a variable outside the ring");
        for (int v = 0; v < kMaxVars; ++v)
            if (g.e[v] < 0) throw InputError("generator exponents must be nonnegative");
    }
    gens_ = minimalize(std::move(gens));
}

GeneralMonomialIdeal GeneralMonomialIdeal::from_squarefree(const SquarefreeIdeal& ideal) {
    std::vector<ExpVec> gens;
    gens.reserve(ideal.gens().size());
    for (VarSet g : ideal.gens()) gens.push_back(squarefree_exps(g));
    return {ideal.ring(), std::move(gens)};
}

bool GeneralMonomialIdeal::is_squarefree() const { return max_exponent() <= 1; }

int GeneralMonomialIdeal::max_exponent() const {
    int d = 0;
    for (const ExpVec& g : gens_) d = std::max(d, g.max_exponent());
    return d;
}

std::optional<SquarefreeIdeal> GeneralMonomialIdeal::as_squarefree() const {
    if (!is_squarefree()) return std::nullopt;
    std::vector<VarSet> gens;
    gens.reserve(gens_.size());
    for (const ExpVec& g : gens_) gens.push_back(g.support());
    return SquarefreeIdeal(ring_, std::move(gens));
}

bool GeneralMonomialIdeal::contains_monomial(const ExpVec& mono) const {
    for (const ExpVec& g : gens_)
        if (g.divides(mono)) return true;
    return false;
}

bool GeneralMonomialIdeal::contains(const GeneralMonomialIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    for (const ExpVec& g : other.gens_)
        if (!contains_monomial(g)) return false;
    return true;
}

std::string GeneralMonomialIdeal::to_string() const {
    if (is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += monomial_to_string(ring_, gens_[i]);
    }
    return out + ")";
}

SquarefreeIdeal unit_ideal(const RingSpec& ring) { return {ring, {VarSet()}}; }
SquarefreeIdeal zero_ideal(const RingSpec& ring) { return {ring, {}}; }

// ==== minimal primes ====

namespace {

// Depth-first enumeration of transversals: each minimal transversal hits the
// first uncovered generator, so branching over its variables is exhaustive.
// Non-minimal hits are filtered afterwards.
void transversals(const std::vector<VarSet>& gens, VarSet current, std::size_t from,
                  std::set<std::uint32_t>& found) {
    std::size_t next = from;
    while (next < gens.size() && gens[next].intersects(current)) ++next;
    if (next == gens.size()) {
        found.insert(current.bits);
        return;
    }
    for (int v : gens[next].members())
        transversals(gens, VarSet(current.bits | (1u << v)), next + 1, found);
}

} // namespace

std::vector<MonomialPrime> minimal_primes(const SquarefreeIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw InputError("minimal primes are defined only for proper nonzero ideals");
    std::set<std::uint32_t> found;
    transversals(ideal.gens(), VarSet(), 0, found);
    std::vector<VarSet> sets(found.begin(), found.end());
    std::vector<VarSet> minimal = minimalize(std::move(sets));
    std::vector<MonomialPrime> out;
    out.reserve(minimal.size());
    for (VarSet v : minimal) out.emplace_back(ideal.ring(), v);
    return out;
}

SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.is_zero() || b.is_zero()) return zero_ideal(a.ring());
    std::vector<VarSet> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (VarSet g : a.gens())
        for (VarSet h : b.gens()) gens.push_back(g | h);
    return {a.ring(), std::move(gens)};
}

SquarefreeIdeal intersect(const std::vector<SquarefreeIdeal>& ideals) {
    if (ideals.empty()) throw InputError("intersection of an empty list needs a ring; none given");
    SquarefreeIdeal acc = unit_ideal(ideals.front().ring());
    for (const SquarefreeIdeal& ideal : ideals) acc = intersect(acc, ideal);
    return acc;
}

SquarefreeIdeal intersect(const RingSpec& ring, const std::vector<MonomialPrime>& primes) {
    SquarefreeIdeal acc = unit_ideal(ring);
    for (const MonomialPrime& p : primes) {
        require_same_ring(ring, p.ring);
        std::vector<VarSet> gens;
        for (int v : p.vars.members()) gens.push_back(VarSet().add(v));
        acc = intersect(acc, SquarefreeIdeal(ring, std::move(gens)));
    }
    return acc;
}

SquarefreeIdeal sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<VarSet> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return {a.ring(), std::move(gens)};
}

SquarefreeIdeal colon(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) return unit_ideal(a.ring());
    SquarefreeIdeal acc = unit_ideal(a.ring());
    for (VarSet f : b.gens()) {
        std::vector<VarSet> gens;
        gens.reserve(a.gens().size());
        for (VarSet g : a.gens()) gens.push_back(g - f);
        acc = intersect(acc, SquarefreeIdeal(a.ring(), std::move(gens)));
    }
    return acc;
}

std::vector<VarSet> complex_facets(const SquarefreeIdeal& ideal) {
    if (ideal.is_unit()) throw InputError("the unit ideal has no associated complex");
    if (ideal.is_zero()) return {ideal.ring().all_vars()};
    VarSet all = ideal.ring().all_vars();
    std::vector<VarSet> facets;
    for (const MonomialPrime& p : minimal_primes(ideal)) facets.push_back(all - p.vars);
    std::sort(facets.begin(), facets.end(), [](VarSet a, VarSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a.bits < b.bits;
    });
    return facets;
}

int dim_of_quotient(const SquarefreeIdeal& ideal) {
    int best = 0;
    for (VarSet f : complex_facets(ideal)) best = std::max(best, f.size());
    return best;
}

} // namespace seqcm
