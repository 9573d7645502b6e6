#include "seqcm/cech.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>
#include <unordered_map>

namespace seqcm {

QuotientModule::QuotientModule(GeneralMonomialIdeal a, GeneralMonomialIdeal b)
    : a_(std::move(a)), b_(std::move(b)) {
    require_same_ring(a_.ring(), b_.ring());
    if (!a_.contains(b_))
        throw InputError("subquotient needs the bottom ideal inside the top ideal");
}

QuotientModule QuotientModule::cyclic(const SquarefreeIdeal& ideal) {
    return cyclic(GeneralMonomialIdeal::from_squarefree(ideal));
}

QuotientModule QuotientModule::cyclic(const GeneralMonomialIdeal& ideal) {
    return {GeneralMonomialIdeal(ideal.ring(), {ExpVec{}}), ideal};
}

QuotientModule QuotientModule::pair(const SquarefreeIdeal& top, const SquarefreeIdeal& bottom) {
    return {GeneralMonomialIdeal::from_squarefree(top),
            GeneralMonomialIdeal::from_squarefree(bottom)};
}

bool QuotientModule::is_squarefree() const { return a_.is_squarefree() && b_.is_squarefree(); }

int QuotientModule::max_exponent() const { return std::max(a_.max_exponent(), b_.max_exponent()); }

std::string QuotientModule::to_string() const { return a_.to_string() + "/" + b_.to_string(); }

std::string DegreePattern::to_string(const RingSpec& ring) const {
    std::string out;
    for (int v = 0; v < ring.var_count(); ++v) {
        if (exps[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.var_name(v);
        if (exps[v] != 1) out += "^" + std::to_string(int(exps[v]));
    }
    return out.empty() ? "1" : out;
}

bool localized_membership(const GeneralMonomialIdeal& ideal, const DegreePattern& degree,
                          VarSet inverted) {
    if (!degree.neg().subset_of(inverted))
        throw InputError("degree has a negative exponent outside the inverted set");
    VarSet avail = degree.pos() | inverted;
    for (const ExpVec& g : ideal.gens()) {
        if (!g.support().subset_of(avail)) continue;
        bool ok = true;
        for (int v : (g.support() - inverted).members())
            if (g.e[v] > degree.exps[v]) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

// ==== strand construction (reference route) ====

StrandComplex strand(const QuotientModule& module, VarSet torsion, const DegreePattern& degree) {
    VarSet neg = degree.neg();
    if (!neg.subset_of(torsion))
        throw InputError("degree has a negative exponent outside the torsion set");
    StrandComplex out;
    out.torsion = torsion;
    out.degree = degree;

    std::vector<int> free_vars = (torsion - neg).members();
    for (std::uint32_t idx = 0; idx < (std::uint32_t(1) << free_vars.size()); ++idx) {
        VarSet w = neg;
        for (std::size_t b = 0; b < free_vars.size(); ++b)
            if ((idx >> b) & 1u) w.add(free_vars[b]);
        out.subsets.push_back(w);
    }
    std::sort(out.subsets.begin(), out.subsets.end(), [](VarSet a, VarSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
    });
    out.nonzero.reserve(out.subsets.size());
    for (VarSet w : out.subsets)
        out.nonzero.push_back(localized_membership(module.top(), degree, w) &&
                              !localized_membership(module.bottom(), degree, w));
    return out;
}

ChainComplex StrandComplex::chain() const {
    int len = torsion.size() + 1;
    std::vector<std::vector<VarSet>> level(len);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (nonzero[i]) level[subsets[i].size()].push_back(subsets[i]);

    std::vector<int> dims(len);
    for (int i = 0; i < len; ++i) dims[i] = int(level[i].size());

    std::vector<SignMatrix> diffs;
    for (int i = 0; i + 1 < len; ++i) {
        SignMatrix d(dims[i + 1], dims[i]);
        for (int c = 0; c < dims[i]; ++c) {
            VarSet w = level[i][c];
            for (int v : (torsion - w).members()) {
                VarSet t = w;
                t.add(v);
                auto it = std::find(level[i + 1].begin(), level[i + 1].end(), t);
                if (it == level[i + 1].end()) continue;
                int below = (w & VarSet((std::uint32_t(1) << v) - 1)).size();
                d.set(int(it - level[i + 1].begin()), c, below % 2 == 0 ? 1 : -1);
            }
        }
        diffs.push_back(std::move(d));
    }
    return {dims, std::move(diffs)};
}

std::vector<int> strand_cohomology(const QuotientModule& module, VarSet torsion,
                                   const DegreePattern& degree, const FieldSpec& field) {
    return cohomology_dims(strand(module, torsion, degree).chain(), field);
}

// ==== profile scan (fused fast route) ====

namespace {

// Monotone table over variable sets: does the ideal contain a squarefree
// monomial whose support lies inside U?  Upward closure of the generators.
class SubsetTable {
public:
    SubsetTable(const std::vector<VarSet>& gens, int nvars) : bits_(words(nvars), 0) {
        for (VarSet g : gens) set(g.bits);
        for (int v = 0; v < nvars; ++v)
            for (std::uint32_t u = 0; u < (std::uint32_t(1) << nvars); ++u)
                if (!((u >> v) & 1u) && get(u)) set(u | (std::uint32_t(1) << v));
    }
    [[nodiscard]] bool get(std::uint32_t u) const {
        return (bits_[u >> 6] >> (u & 63)) & 1u;
    }

private:
    static std::size_t words(int nvars) {
        return (std::size_t(1) << std::max(0, nvars - 6)) + 1;
    }
    void set(std::uint32_t u) { bits_[u >> 6] |= std::uint64_t(1) << (u & 63); }
    std::vector<std::uint64_t> bits_;
};

struct MembershipOracle {
    const QuotientModule* module = nullptr;
    bool table_path = false;
    std::optional<SubsetTable> top_table, bottom_table;
    std::vector<VarSet> top_supports, bottom_supports;

    MembershipOracle(const QuotientModule& m, int box_pad) : module(&m) {
        int nvars = m.ring().var_count();
        table_path = box_pad == 0 && m.is_squarefree() && nvars <= 20;
        for (const ExpVec& g : m.top().gens()) top_supports.push_back(g.support());
        for (const ExpVec& g : m.bottom().gens()) bottom_supports.push_back(g.support());
        if (table_path) {
            top_table.emplace(top_supports, nvars);
            bottom_table.emplace(bottom_supports, nvars);
        }
    }

    // Component of the degree strand at the localization W (assumes neg <= W).
    [[nodiscard]] bool component(const DegreePattern& degree, VarSet pos, VarSet w) const {
        if (table_path) {
            std::uint32_t u = (pos | w).bits;
            return top_table->get(u) && !bottom_table->get(u);
        }
        return member(module->top().gens(), top_supports, degree, pos, w) &&
               !member(module->bottom().gens(), bottom_supports, degree, pos, w);
    }

private:
    static bool member(const std::vector<ExpVec>& gens, const std::vector<VarSet>& supports,
                       const DegreePattern& degree, VarSet pos, VarSet w) {
        VarSet avail = pos | w;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (!supports[i].subset_of(avail)) continue;
            bool ok = true;
            for (int v : (supports[i] - w).members())
                if (gens[i].e[v] > degree.exps[v]) { ok = false; break; }
            if (ok) return true;
        }
        return false;
    }
};

// Lexicographic odometer over the representative box.
struct DegreeBox {
    int nvars = 0;
    std::array<std::int8_t, kMaxVars> lo{}, hi{};
    std::array<std::uint64_t, kMaxVars + 1> suffix{};

    DegreeBox(const QuotientModule& module, VarSet torsion, int box_pad) {
        nvars = module.ring().var_count();
        int dmax = module.max_exponent() + box_pad;
        for (int v = 0; v < nvars; ++v) {
            lo[v] = std::int8_t(torsion.contains(v) ? -1 - box_pad : 0);
            hi[v] = std::int8_t(dmax);
        }
        suffix[nvars] = 1;
        for (int v = nvars - 1; v >= 0; --v)
            suffix[v] = suffix[v + 1] * std::uint64_t(hi[v] - lo[v] + 1);
    }

    [[nodiscard]] std::uint64_t total() const { return suffix[0]; }

    [[nodiscard]] DegreePattern decode(std::uint64_t t) const {
        DegreePattern d;
        for (int v = 0; v < nvars; ++v) {
            d.exps[v] = std::int8_t(lo[v] + std::int8_t(t / suffix[v + 1]));
            t %= suffix[v + 1];
        }
        return d;
    }

    // Advance in lex order; returns false past the end.
    bool advance(DegreePattern& d) const {
        for (int v = nvars - 1; v >= 0; --v) {
            if (d.exps[v] < hi[v]) {
                ++d.exps[v];
                for (int u = v + 1; u < nvars; ++u) d.exps[u] = lo[u];
                return true;
            }
        }
        return false;
    }
};

// Nonvanishing levels of a cube complex given by component flags in
// bit-compressed indexing.  Signs from compressed positions are a diagonal
// rescaling of the true covering signs, so cohomology is unchanged.
class CubeCohomology {
public:
    std::uint32_t nonvanishing(int k, const std::vector<char>& comps, const FieldSpec& field) {
        if (k <= 6) {
            std::uint64_t mask = 0;
            for (int i = 0; i < (1 << k); ++i)
                if (comps[i]) mask |= std::uint64_t(1) << i;
            if (mask == 0) return 0;
            auto& memo = memo_[field.characteristic][k];
            auto it = memo.find(mask);
            if (it != memo.end()) return it->second;
            std::uint32_t nv = compute(k, comps, field);
            memo.emplace(mask, nv);
            return nv;
        }
        return compute(k, comps, field);
    }

private:
    std::uint32_t compute(int k, const std::vector<char>& comps, const FieldSpec& field) {
        levels_.assign(std::size_t(k) + 1, {});
        ord_.assign(std::size_t(1) << k, 0);
        for (std::uint32_t idx = 0; idx < (std::uint32_t(1) << k); ++idx)
            if (comps[idx]) {
                int lv = __builtin_popcount(idx);
                ord_[idx] = int(levels_[lv].size());
                levels_[lv].push_back(idx);
            }

        std::vector<int> ranks(std::size_t(k) + 1, 0);
        for (int j = 0; j < k; ++j) {
            if (levels_[j].empty() || levels_[j + 1].empty()) continue;
            SignMatrix d(int(levels_[j + 1].size()), int(levels_[j].size()));
            for (std::size_t c = 0; c < levels_[j].size(); ++c) {
                std::uint32_t idx = levels_[j][c];
                for (int u = 0; u < k; ++u) {
                    if ((idx >> u) & 1u) continue;
                    std::uint32_t t = idx | (std::uint32_t(1) << u);
                    if (!comps[t]) continue;
                    int below = __builtin_popcount(idx & ((std::uint32_t(1) << u) - 1));
                    d.set(ord_[t], int(c), below % 2 == 0 ? 1 : -1);
                }
            }
            ranks[std::size_t(j) + 1] = rank(d, field);
        }

        std::uint32_t nv = 0;
        for (int j = 0; j <= k; ++j) {
            int h = int(levels_[j].size()) - ranks[j] - (j < k ? ranks[std::size_t(j) + 1] : 0);
            if (h < 0) throw InternalError("negative strand cohomology dimension");
            if (h > 0) nv |= std::uint32_t(1) << j;
        }
        return nv;
    }

    // memo key: characteristic -> cube dimension -> component mask
    std::map<int, std::array<std::unordered_map<std::uint64_t, std::uint32_t>, 7>> memo_;
    std::vector<std::vector<std::uint32_t>> levels_;
    std::vector<int> ord_;
};

struct ScanResult {
    std::vector<char> flags;
    std::vector<std::optional<DegreePattern>> witnesses;
};

void scan_range(const QuotientModule& module, VarSet torsion, const FieldSpec& field,
                const MembershipOracle& oracle, const DegreeBox& box, std::uint64_t begin,
                std::uint64_t end, bool fast, ScanResult& out) {
    const int tsize = torsion.size();
    out.flags.assign(std::size_t(tsize) + 1, 0);
    out.witnesses.assign(std::size_t(tsize) + 1, std::nullopt);
    if (begin >= end) return;

    CubeCohomology cube;
    std::vector<char> comps(std::size_t(1) << tsize, 0);
    DegreePattern deg = box.decode(begin);

    for (std::uint64_t t = begin; t < end; ++t, box.advance(deg)) {
        VarSet pos = deg.pos(), neg = deg.neg();
        std::vector<int> free_vars = (torsion - neg).members();
        int k = int(free_vars.size());
        int base = neg.size();

        if (fast) {
            bool all_done = true;
            for (int i = base; i <= base + k; ++i)
                if (!out.flags[i]) { all_done = false; break; }
            if (all_done) continue;
        }

        bool any = false;
        for (std::uint32_t idx = 0; idx < (std::uint32_t(1) << k); ++idx) {
            VarSet w = neg;
            for (std::uint32_t b = idx; b; b &= b - 1) w.add(free_vars[__builtin_ctz(b)]);
            bool flag = oracle.component(deg, pos, w);
            comps[idx] = flag;
            any |= flag;
        }
        if (!any) continue;

        std::uint32_t nv = cube.nonvanishing(k, comps, field);
        for (int j = 0; j <= k; ++j) {
            if (!((nv >> j) & 1u)) continue;
            int i = base + j;
            out.flags[i] = 1;
            if (!out.witnesses[i] || deg < *out.witnesses[i]) out.witnesses[i] = deg;
        }
    }
}

int resolve_threads(const EngineOptions& options) {
    if (options.threads > 0) return options.threads;
    if (const char* env = std::getenv("SEQCM_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

} // namespace

std::optional<int> CohomologyProfile::grade() const {
    for (std::size_t i = 0; i < nonvanishing.size(); ++i)
        if (nonvanishing[i]) return int(i);
    return std::nullopt;
}

std::optional<int> CohomologyProfile::cd() const {
    for (std::size_t i = nonvanishing.size(); i > 0; --i)
        if (nonvanishing[i - 1]) return int(i - 1);
    return std::nullopt;
}

CohomologyProfile cohomology_profile(const QuotientModule& module, VarSet torsion,
                                     const FieldSpec& field, const EngineOptions& options) {
    if (!torsion.subset_of(module.ring().all_vars()))
        throw InputError("torsion set uses a variable outside the ring");
    if (options.box_pad < 0 || options.box_pad > 8)
        throw InputError("box padding must lie in [0, 8]");

    CohomologyProfile profile;
    profile.torsion = torsion;
    profile.field = field;
    profile.nonvanishing.assign(std::size_t(torsion.size()) + 1, 0);
    profile.witnesses.assign(std::size_t(torsion.size()) + 1, std::nullopt);
    if (module.is_zero()) {
        profile.zero_module = true;
        return profile;
    }

    MembershipOracle oracle(module, options.box_pad);
    DegreeBox box(module, torsion, options.box_pad);
    std::uint64_t total = box.total();

    int threads = resolve_threads(options);
    std::uint64_t min_chunk = 4096;
    int used = int(std::min<std::uint64_t>(std::uint64_t(std::max(threads, 1)),
                                           std::max<std::uint64_t>(1, total / min_chunk)));

    std::vector<ScanResult> results(std::size_t(std::max(used, 1)));
    if (used <= 1) {
        scan_range(module, torsion, field, oracle, box, 0, total, options.fast, results[0]);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < used; ++i) {
            std::uint64_t begin = total * std::uint64_t(i) / std::uint64_t(used);
            std::uint64_t end = total * std::uint64_t(i + 1) / std::uint64_t(used);
            pool.emplace_back([&, i, begin, end] {
                scan_range(module, torsion, field, oracle, box, begin, end, options.fast,
                           results[std::size_t(i)]);
            });
        }
        for (std::thread& th : pool) th.join();
    }

    // deterministic merge: union of flags, least witness per index
    for (const ScanResult& r : results)
        for (std::size_t i = 0; i < profile.nonvanishing.size(); ++i) {
            if (!r.flags[i]) continue;
            profile.nonvanishing[i] = 1;
            if (!profile.witnesses[i] || *r.witnesses[i] < *profile.witnesses[i])
                profile.witnesses[i] = r.witnesses[i];
        }

    if (!profile.grade())
        throw InternalError("nonzero module with vanishing torsion cohomology at every index");
    return profile;
}

EngineDepthDim depth_dim_via_engine(const QuotientModule& module, const FieldSpec& field,
                                    const EngineOptions& options) {
    CohomologyProfile p = cohomology_profile(module, module.ring().all_vars(), field, options);
    if (p.zero_module) throw InputError("depth/dim of the zero module is undefined");
    return {*p.grade(), *p.cd()};
}

int cd_via_primes(const SquarefreeIdeal& ideal, VarSet torsion) {
    int best = -1;
    for (const MonomialPrime& p : minimal_primes(ideal))
        best = std::max(best, (torsion - p.vars).size());
    return best;
}

} // namespace seqcm
