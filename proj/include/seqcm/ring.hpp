#ifndef SEQCM_RING_HPP
#define SEQCM_RING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Bigraded polynomial ring K[x1..xm, y1..yn] with the three torsion sets
// P = (x-block), Q = (y-block), m = P + Q.  Variable sets are bitmasks over
// the m+n variables: bits 0..m-1 are x1..xm, bits m..m+n-1 are y1..yn.

namespace seqcm {

// User-facing input problems: bad documents, bad flags, out-of-contract calls.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal invariants and theorem-level postconditions.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

constexpr int kMaxVars = 24;

/// Set of ring variables as a bitmask.
struct VarSet {
    std::uint32_t bits = 0;

    constexpr VarSet() = default;
    constexpr explicit VarSet(std::uint32_t b) : bits(b) {}

    [[nodiscard]] bool contains(int v) const { return (bits >> v) & 1u; }
    [[nodiscard]] bool subset_of(VarSet o) const { return (bits & ~o.bits) == 0; }
    [[nodiscard]] bool intersects(VarSet o) const { return (bits & o.bits) != 0; }
    [[nodiscard]] bool empty() const { return bits == 0; }
    [[nodiscard]] int size() const { return __builtin_popcount(bits); }

    VarSet& add(int v) { bits |= (1u << v); return *this; }
    VarSet& remove(int v) { bits &= ~(1u << v); return *this; }

    friend VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits | b.bits); }
    friend VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits & b.bits); }
    friend VarSet operator-(VarSet a, VarSet b) { return VarSet(a.bits & ~b.bits); }
    friend bool operator==(VarSet a, VarSet b) { return a.bits == b.bits; }
    friend bool operator!=(VarSet a, VarSet b) { return a.bits != b.bits; }
    friend bool operator<(VarSet a, VarSet b) { return a.bits < b.bits; }

    /// Members in ascending variable order.
    [[nodiscard]] std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint32_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctz(b));
        return out;
    }
};

/// Ring shape: m x-variables and n y-variables, m+n >= 1.
struct RingSpec {
    int m = 0;
    int n = 0;

    RingSpec() = default;
    RingSpec(int xs, int ys) : m(xs), n(ys) {
        if (m < 0 || n < 0 || m + n < 1 || m + n > kMaxVars)
            throw InputError("ring must have between 1 and " + std::to_string(kMaxVars) +
                             " variables (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    }

    [[nodiscard]] int var_count() const { return m + n; }
    [[nodiscard]] VarSet all_vars() const { return VarSet((std::uint32_t(1) << (m + n)) - 1); }
    [[nodiscard]] VarSet p_vars() const { return VarSet((std::uint32_t(1) << m) - 1); }
    [[nodiscard]] VarSet q_vars() const { return all_vars() - p_vars(); }
    [[nodiscard]] bool is_x(int v) const { return v < m; }

    [[nodiscard]] std::string var_name(int v) const {
        if (v < 0 || v >= m + n) throw InternalError("variable index out of range");
        return v < m ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - m + 1);
    }

    /// Parses "x3"/"y2" into a variable index; returns -1 if not a variable name.
    [[nodiscard]] int var_index(const std::string& name) const {
        if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) return -1;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (name[i] < '0' || name[i] > '9') return -1;
        if (name[1] == '0') return -1;
        long k = std::stol(name.substr(1));
        if (name[0] == 'x') return (k >= 1 && k <= m) ? int(k - 1) : -1;
        return (k >= 1 && k <= n) ? int(m + k - 1) : -1;
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.m == b.m && a.n == b.n; }
    friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }
};

inline void require_same_ring(const RingSpec& a, const RingSpec& b) {
    if (a != b) throw InputError("operands live in different rings");
}

/// Coefficient field: characteristic 0 (exact rationals) or a prime p <= 2^16.
struct FieldSpec {
    int characteristic = 0;

    FieldSpec() = default;
    explicit FieldSpec(int p) : characteristic(p) {
        if (p == 0) return;
        if (p < 2 || p > 65536 || !is_prime(p))
            throw InputError("characteristic must be 0 or a prime at most 65536 (got " +
                             std::to_string(p) + ")");
    }

    [[nodiscard]] bool is_rational() const { return characteristic == 0; }

    static bool is_prime(int p) {
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    friend bool operator==(FieldSpec a, FieldSpec b) { return a.characteristic == b.characteristic; }
};

} // namespace seqcm

#endif
