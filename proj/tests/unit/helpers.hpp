#ifndef SEQCM_TEST_HELPERS_HPP
#define SEQCM_TEST_HELPERS_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "seqcm/builtins.hpp"
#include "seqcm/ideal.hpp"

namespace seqcm::test {

inline VarSet vs(const RingSpec& ring, std::initializer_list<const char*> names) {
    VarSet out;
    for (const char* name : names) {
        int v = ring.var_index(name);
        if (v < 0) throw std::runtime_error(std::string("bad test variable ") + name);
        out.add(v);
    }
    return out;
}

inline SquarefreeIdeal sq(const RingSpec& ring,
                          std::initializer_list<std::initializer_list<const char*>> gens) {
    std::vector<VarSet> supports;
    for (auto g : gens) supports.push_back(vs(ring, g));
    return SquarefreeIdeal(ring, supports);
}

inline MonomialPrime prime(const RingSpec& ring, std::initializer_list<const char*> names) {
    return MonomialPrime{ring, vs(ring, names)};
}

inline SquarefreeIdeal builtin_sq(const std::string& name) {
    return *find_builtin(name)->document.ideal.as_squarefree();
}

inline std::vector<MonomialPrime> rp2_primes(const RingSpec& ring) {
    return {prime(ring, {"x3", "y1", "y3"}), prime(ring, {"x1", "y1", "y3"}),
            prime(ring, {"x2", "y1", "y2"}), prime(ring, {"x3", "y1", "y2"}),
            prime(ring, {"x1", "y2", "y3"}), prime(ring, {"x2", "y2", "y3"}),
            prime(ring, {"x2", "x3", "y3"}), prime(ring, {"x1", "x2", "y1"}),
            prime(ring, {"x1", "x3", "y2"}), prime(ring, {"x1", "x2", "x3"})};
}

inline std::vector<MonomialPrime> moebius_primes(const RingSpec& ring) {
    return {prime(ring, {"x2", "x3", "y2"}), prime(ring, {"x1", "x2", "y2"}),
            prime(ring, {"x1", "x2", "y1"}), prime(ring, {"x1", "x3", "y3"}),
            prime(ring, {"x1", "y1", "y3"}), prime(ring, {"x3", "y2", "y3"})};
}

} // namespace seqcm::test

#endif
