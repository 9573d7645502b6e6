// End-to-end acceptance checks.  Each criterion prints exactly one PASS/FAIL
// line; the binary exits nonzero when any criterion fails.  Criteria 5, 6 and
// 8 share one corpus sweep (all proper nonzero squarefree ideals in rings with
// m+n <= 5 plus a fixed 200-ideal sample at m+n = 6) with per-criterion
// stopwatches, so each line reports the time attributable to its own checks.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "seqcm/builtins.hpp"
#include "seqcm/cech.hpp"
#include "seqcm/classify.hpp"
#include "seqcm/enumerate.hpp"
#include "seqcm/filtration.hpp"
#include "seqcm/homology.hpp"

#include "../unit/helpers.hpp"

using namespace seqcm;
using seqcm::test::builtin_sq;
using seqcm::test::moebius_primes;
using seqcm::test::rp2_primes;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class... Args>
std::string fmt(const char* pattern, Args... args) {
    char buf[240];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (condition) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    void note(const std::string& what) {
        if (!ok) return;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

int g_failures = 0;

void run(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail += std::string(out.detail.empty() ? "" : "; ") + "exception: " + e.what();
    }
    std::printf("criterion %d [%s]: %s (%.1f s)%s%s\n", id, name.c_str(),
                out.ok ? "PASS" : "FAIL", seconds_since(t0), out.detail.empty() ? "" : " -- ",
                out.detail.c_str());
    std::fflush(stdout);
    if (!out.ok) ++g_failures;
}

std::set<std::uint32_t> prime_keys(const std::vector<MonomialPrime>& primes) {
    std::set<std::uint32_t> out;
    for (const MonomialPrime& p : primes) out.insert(p.vars.bits);
    return out;
}

// ==== criteria 1-4: fixed regression targets ====

void criterion_rp2_char0(Outcome& out) {
    auto t0 = Clock::now();
    SquarefreeIdeal rp2 = builtin_sq("rp2");
    const RingSpec& ring = rp2.ring();
    QuotientModule mod = QuotientModule::cyclic(rp2);
    FieldSpec field(0);

    CohomologyProfile p = cohomology_profile(mod, ring.p_vars(), field);
    CohomologyProfile q = cohomology_profile(mod, ring.q_vars(), field);
    CohomologyProfile all = cohomology_profile(mod, ring.all_vars(), field);
    out.expect(*p.grade() == 0 && *p.cd() == 2,
               fmt("x-block profile (%d,%d) != (0,2)", *p.grade(), *p.cd()));
    out.expect(*q.grade() == 1 && *q.cd() == 3,
               fmt("y-block profile (%d,%d) != (1,3)", *q.grade(), *q.cd()));
    out.expect(*all.grade() == 3 && *all.cd() == 3,
               fmt("depth/dim (%d,%d) != (3,3)", *all.grade(), *all.cd()));

    // groups and intermediate ideals of both filtrations against the known
    // ten minimal primes (p1..p6 one x + two y's, p7..p9 two x's + one y,
    // p10 = the whole x-block)
    std::vector<MonomialPrime> primes = rp2_primes(ring);
    auto slice = [&](int lo, int hi) {
        return std::vector<MonomialPrime>(primes.begin() + lo, primes.begin() + hi);
    };

    FiltrationResult fp = dimension_filtration(rp2, ring.p_vars());
    out.expect(fp.r == 3 && fp.q == std::vector<int>{0, 1, 2}, "x-block cd values != (0,1,2)");
    out.expect(prime_keys(fp.groups[0]) == prime_keys(slice(9, 10)), "x-block group 1 != {p10}");
    out.expect(prime_keys(fp.groups[1]) == prime_keys(slice(6, 9)), "x-block group 2 != {p7,p8,p9}");
    out.expect(prime_keys(fp.groups[2]) == prime_keys(slice(0, 6)), "x-block group 3 != {p1..p6}");
    out.expect(fp.ideals[1] == intersect(ring, slice(0, 9)), "x-block J1 != p1 cap .. cap p9");
    out.expect(fp.ideals[2] == intersect(ring, slice(0, 6)), "x-block J2 != p1 cap .. cap p6");

    FiltrationResult fq = dimension_filtration(rp2, ring.q_vars());
    out.expect(fq.r == 3 && fq.q == std::vector<int>{1, 2, 3}, "y-block cd values != (1,2,3)");
    out.expect(prime_keys(fq.groups[0]) == prime_keys(slice(0, 6)), "y-block group 1 != {p1..p6}");
    out.expect(prime_keys(fq.groups[1]) == prime_keys(slice(6, 9)), "y-block group 2 != {p7,p8,p9}");
    out.expect(prime_keys(fq.groups[2]) == prime_keys(slice(9, 10)), "y-block group 3 != {p10}");
    out.expect(fq.ideals[1] == intersect(ring, slice(6, 10)), "y-block J1 != p7 cap .. cap p10");
    out.expect(fq.ideals[2] == intersect(ring, slice(9, 10)), "y-block J2 != p10");

    auto grades = [](const ClassificationCore& core) {
        std::vector<int> gs;
        for (const SeqStep& step : core.steps) gs.push_back(*step.profile.grade());
        return gs;
    };
    ClassificationCore cp = classify_core(rp2, ring.p_vars(), field);
    ClassificationCore cq = classify_core(rp2, ring.q_vars(), field);
    out.expect(cp.seq_cm, "not sequentially CM wrt the x-block");
    out.expect(cq.seq_cm, "not sequentially CM wrt the y-block");
    out.expect(grades(cp) == std::vector<int>{0, 1, 2}, "x-block grade certificates != (0,1,2)");
    out.expect(grades(cq) == std::vector<int>{1, 2, 3}, "y-block grade certificates != (1,2,3)");

    out.expect(seconds_since(t0) < 10.0, "exceeded the 10 s budget");
}

void criterion_rp2_characteristic(Outcome& out) {
    SquarefreeIdeal rp2 = builtin_sq("rp2");
    QuotientModule mod = QuotientModule::cyclic(rp2);
    for (int chr : {0, 2, 3}) {
        FieldSpec field(chr);
        EngineDepthDim engine = depth_dim_via_engine(mod, field);
        DepthDim oracle = depth_dim_oracle(rp2, field);
        out.expect(engine.depth == oracle.depth && engine.dim == oracle.dim,
                   fmt("engine and homology oracle disagree at char %d", chr));
        out.expect(engine.dim == 3, fmt("dim %d != 3 at char %d", engine.dim, chr));
        const int want_depth = (chr == 2) ? 2 : 3;
        out.expect(engine.depth == want_depth,
                   fmt("char %d depth %d != %d", chr, engine.depth, want_depth));
    }
}

void criterion_moebius(Outcome& out) {
    auto t0 = Clock::now();
    SquarefreeIdeal moebius = builtin_sq("moebius");
    const RingSpec& ring = moebius.ring();
    QuotientModule mod = QuotientModule::cyclic(moebius);
    FieldSpec field(0);

    EngineDepthDim engine = depth_dim_via_engine(mod, field);
    DepthDim oracle = depth_dim_oracle(moebius, field);
    out.expect(engine.depth == 2 && engine.dim == 3,
               fmt("depth/dim (%d,%d) != (2,3)", engine.depth, engine.dim));
    out.expect(oracle.depth == 2 && oracle.dim == 3, "homology oracle disagrees");

    CohomologyProfile p = cohomology_profile(mod, ring.p_vars(), field);
    CohomologyProfile q = cohomology_profile(mod, ring.q_vars(), field);
    out.expect(*p.cd() == 2 && *q.cd() == 2, fmt("cd pair (%d,%d) != (2,2)", *p.cd(), *q.cd()));
    out.expect(*q.grade() == 1, fmt("y-block grade %d != 1", *q.grade()));

    // unmixed component: intersection of the four top-dimensional primes
    std::vector<MonomialPrime> primes = moebius_primes(ring);
    SquarefreeIdeal top4 = intersect(ring, std::vector<MonomialPrime>(primes.begin(), primes.begin() + 4));
    out.expect(unmixed_component(moebius, ring.q_vars()) == top4,
               "y-block unmixed component != p1 cap .. cap p4");

    ClassificationReport rep = classify(moebius, ring.q_vars(), field);
    out.expect(rep.relative.approx_cm, "not approximately CM wrt the y-block");
    out.expect(!rep.classical.approx_cm, "classical approximate CM verdict not false");
    out.expect(classify_core(moebius, ring.p_vars(), field).approx_cm,
               "not approximately CM wrt the x-block");

    out.expect(seconds_since(t0) < 10.0, "exceeded the 10 s budget");
}

void criterion_mixed_powers(Outcome& out) {
    IdealDocument doc = find_builtin("tensor01")->document;
    const RingSpec& ring = doc.ring;
    QuotientModule mod = QuotientModule::cyclic(doc.ideal);
    FieldSpec field(0);

    EngineDepthDim dd = depth_dim_via_engine(mod, field);
    out.expect(dd.depth == 0 && dd.dim == 2, fmt("depth/dim (%d,%d) != (0,2)", dd.depth, dd.dim));

    CohomologyProfile q = cohomology_profile(mod, ring.q_vars(), field);
    CohomologyProfile p = cohomology_profile(mod, ring.p_vars(), field);
    out.expect(*q.grade() == 0 && *q.cd() == 1,
               fmt("y-block profile (%d,%d) != (0,1)", *q.grade(), *q.cd()));
    out.expect(*p.cd() == 1, fmt("x-block cd %d != 1", *p.cd()));
    out.expect(q.nonvanishing[0] && q.nonvanishing[1] && !q.nonvanishing[2],
               "y-block interval != exactly [0,1]");

    // r = 2: the quotient is a product of two factors with y-block cd 0 and 1,
    // so its y-block dimension filtration has two stages
    const int r = 2;
    const int product = *p.cd() + *q.cd();
    const int additive = dd.dim + r - 1;
    out.expect(product == 2 && additive == 3 && product != additive,
               fmt("cd sum %d vs dim+r-1 %d, expected 2 vs 3", product, additive));
}

// ==== criteria 5, 6, 8: shared corpus sweep ====

struct SweepData {
    std::uint64_t ideals = 0;
    std::uint64_t profile_checks = 0;  // (ideal, torsion, field) triples
    std::uint64_t expected_ideals = 0;

    std::uint64_t cd_mismatches = 0;
    std::uint64_t depth_dim_mismatches = 0;
    double t_oracle = 0;

    std::uint64_t flag_changes = 0;
    double t_box = 0;

    std::uint64_t property_checks = 0;
    std::uint64_t restriction_fails = 0;      // grade(P) <= dim - cd(Q), equality when CM
    std::uint64_t cd_sum_fails = 0;           // CM wrt Q  =>  cd(P) + cd(Q) = dim
    std::uint64_t extension_fails = 0;        // cd over a sub/quotient pair
    std::uint64_t grade_table_fails = 0;      // step grade vs explicit vanishing scan
    std::uint64_t associated_prime_fails = 0;
    std::uint64_t small_cd_approx_fails = 0;  // cd(Q) <= 1  =>  approx CM wrt Q
    std::uint64_t separated_fails = 0;        // x+y split ideals vs small-ring verdict
    std::uint64_t approx_route_fails = 0;     // definition route vs filtration route
    double t_props = 0;
};

void check_associated_primes(const FiltrationResult& f, SweepData& s) {
    for (int i = 1; i <= f.r; ++i) {
        // layer supports: Min(I : J_i) must be exactly the groups up to i
        SquarefreeIdeal ann = colon(f.base, f.ideals[std::size_t(i)]);
        if (prime_keys(minimal_primes(ann)) != prime_keys(f.accumulated_primes(i)))
            ++s.associated_prime_fails;
        if (i == f.r) continue;  // J_r is the unit ideal; no residual quotient
        std::vector<MonomialPrime> rest;
        for (int g = i; g < f.r; ++g)
            rest.insert(rest.end(), f.groups[std::size_t(g)].begin(),
                        f.groups[std::size_t(g)].end());
        if (prime_keys(minimal_primes(f.ideals[std::size_t(i)])) != prime_keys(rest))
            ++s.associated_prime_fails;
    }
}

void sweep_ideal(const SquarefreeIdeal& ideal, SweepData& s) {
    const RingSpec& ring = ideal.ring();
    QuotientModule mod = QuotientModule::cyclic(ideal);
    const VarSet torsions[3] = {ring.p_vars(), ring.q_vars(), ring.all_vars()};
    EngineOptions padded;
    padded.box_pad = 1;

    ++s.ideals;
    for (int chr : {0, 2}) {
        FieldSpec field(chr);
        CohomologyProfile prof[3];

        auto t0 = Clock::now();
        DepthDim oracle = depth_dim_oracle(ideal, field);
        for (int k = 0; k < 3; ++k) {
            prof[k] = cohomology_profile(mod, torsions[k], field);
            ++s.profile_checks;
            if (*prof[k].cd() != cd_via_primes(ideal, torsions[k])) ++s.cd_mismatches;
        }
        if (*prof[2].grade() != oracle.depth || *prof[2].cd() != oracle.dim)
            ++s.depth_dim_mismatches;
        s.t_oracle += seconds_since(t0);

        t0 = Clock::now();
        for (int k = 0; k < 3; ++k) {
            CohomologyProfile wide = cohomology_profile(mod, torsions[k], field, padded);
            if (wide.nonvanishing != prof[k].nonvanishing) ++s.flag_changes;
        }
        s.t_box += seconds_since(t0);

        t0 = Clock::now();
        const int depth = *prof[2].grade(), dim = *prof[2].cd();
        const int grade_p = *prof[0].grade(), cd_p = *prof[0].cd();
        const int grade_q = *prof[1].grade(), cd_q = *prof[1].cd();
        ++s.property_checks;
        if (grade_p > dim - cd_q) ++s.restriction_fails;
        if (depth == dim && grade_p != dim - cd_q) ++s.restriction_fails;
        if (grade_q == cd_q && cd_p + cd_q != dim) ++s.cd_sum_fails;

        ClassificationCore core = classify_core(ideal, ring.q_vars(), field);
        bool all_steps_ok = true;
        for (const SeqStep& step : core.steps) {
            bool by_table = step.profile.nonvanishing[std::size_t(step.required)];
            for (int k = 0; k < step.required; ++k)
                if (step.profile.nonvanishing[std::size_t(k)]) by_table = false;
            if (step.ok != by_table) ++s.grade_table_fails;
            all_steps_ok = all_steps_ok && step.ok;
        }
        if (core.seq_cm != all_steps_ok) ++s.grade_table_fails;
        if (cd_q <= 1 && !core.approx_cm) ++s.small_cd_approx_fails;
        if (core.approx_by_definition != core.approx_by_filtration) ++s.approx_route_fails;

        if (chr == 0) check_associated_primes(core.filtration, s);
        s.t_props += seconds_since(t0);
    }
}

// cd over a short exact sequence: for ideals small <= big the cd of the middle
// quotient is the max over the sub and the quotient
void check_extension_formula(SweepData& s) {
    std::mt19937_64 rng(0x5eedbeef);
    const std::vector<std::pair<int, int>> shapes = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1},
                                                     {1, 3}, {2, 3}, {3, 2}, {4, 1}, {1, 4},
                                                     {3, 3}, {2, 4}};
    int done = 0;
    while (done < 300) {
        auto [m, n] = shapes[std::size_t(done) % shapes.size()];
        RingSpec ring(m, n);
        SquarefreeIdeal small = random_squarefree_ideal(ring, rng);
        std::vector<VarSet> gens = small.gens();
        for (int extra = 1 + int(rng() % 2); extra > 0; --extra) {
            VarSet g;
            for (int v = 0; v < ring.var_count(); ++v)
                if (rng() & 1) g.add(v);
            if (!g.empty()) gens.push_back(g);
        }
        SquarefreeIdeal big(ring, gens);
        if (big == small) continue;
        ++done;

        QuotientModule layer = QuotientModule::pair(big, small);
        auto t0 = Clock::now();
        for (int chr : {0, 2}) {
            FieldSpec field(chr);
            int cd_sub = *cohomology_profile(layer, ring.q_vars(), field).cd();
            int cd_mid = *cohomology_profile(QuotientModule::cyclic(small), ring.q_vars(), field).cd();
            int cd_quot = *cohomology_profile(QuotientModule::cyclic(big), ring.q_vars(), field).cd();
            ++s.property_checks;
            if (cd_mid != std::max(cd_sub, cd_quot)) ++s.extension_fails;
        }
        s.t_props += seconds_since(t0);
    }
}

// ideals with generators split between the blocks: the y-block verdict equals
// the classical verdict of the y-part alone in the smaller ring
void check_separated_blocks(SweepData& s) {
    for (int m : {1, 2}) {
        for (int n : {1, 2, 3}) {
            RingSpec big(m, n), xring(m, 0), yring(0, n);
            enumerate_squarefree_ideals(xring, [&](const SquarefreeIdeal& ix) {
                enumerate_squarefree_ideals(yring, [&](const SquarefreeIdeal& iy) {
                    std::vector<VarSet> gens = ix.gens();
                    for (VarSet g : iy.gens()) {
                        VarSet shifted;
                        for (int v : g.members()) shifted.add(v + m);
                        gens.push_back(shifted);
                    }
                    SquarefreeIdeal joined(big, gens);
                    auto t0 = Clock::now();
                    for (int chr : {0, 2}) {
                        FieldSpec field(chr);
                        bool wrt_q = classify_core(joined, big.q_vars(), field).approx_cm;
                        bool in_small = classify_core(iy, yring.all_vars(), field).approx_cm;
                        ++s.property_checks;
                        if (wrt_q != in_small) ++s.separated_fails;
                    }
                    s.t_props += seconds_since(t0);
                    return true;
                });
                return true;
            });
        }
    }
}

SweepData run_sweep() {
    SweepData s;

    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; m + n <= 5; ++n) {
            RingSpec ring(m, n);
            s.expected_ideals += count_squarefree_ideals(ring.var_count());
            enumerate_squarefree_ideals(ring, [&](const SquarefreeIdeal& ideal) {
                sweep_ideal(ideal, s);
                return true;
            });
        }
    }

    // fixed sample at m+n = 6: 40 distinct ideals per ring shape
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 5}, {2, 4}, {3, 3}, {4, 2}, {5, 1}}) {
        RingSpec ring(m, n);
        std::mt19937_64 rng(0x713 ^ (std::uint64_t(m) << 8) ^ std::uint64_t(n));
        std::set<std::string> seen;
        int misses = 0;
        while (seen.size() < 40 && misses < 4096) {
            SquarefreeIdeal ideal = random_squarefree_ideal(ring, rng);
            if (!seen.insert(ideal.to_string()).second) {
                ++misses;
                continue;
            }
            sweep_ideal(ideal, s);
        }
        s.expected_ideals += seen.size();
    }

    check_extension_formula(s);
    check_separated_blocks(s);
    return s;
}

// ==== criterion 7: interval-gap search ====

void criterion_search(Outcome& out) {
    SearchOptions small;
    small.max_x = 2;
    small.max_y = 2;
    small.budget = std::uint64_t(1) << 20;
    SearchResult exhaustive = question_search(small);
    out.expect(exhaustive.exhaustive, "2x2 sweep was not exhaustive");
    out.expect(exhaustive.scanned == 206,
               fmt("2x2 sweep scanned %llu != 206", (unsigned long long)exhaustive.scanned));
    out.expect(exhaustive.counterexamples.empty(), "2x2 sweep reported a counterexample");

    SearchOptions medium;
    medium.max_x = 3;
    medium.max_y = 3;
    medium.budget = 400;
    SearchResult sampled = question_search(medium);
    out.expect(!sampled.exhaustive, "3x3 sample claimed exhaustiveness");
    out.expect(sampled.counterexamples.empty(), "3x3 sample reported a counterexample");

    SquarefreeIdeal rp2 = builtin_sq("rp2");
    bool listed = false;
    for (const SearchFinding& f : sampled.notable)
        if (f.ideal == rp2 && f.grade_q == 1 && f.cd_q == 3) listed = true;
    out.expect(listed, "projective-plane quotient not listed with y-interval [1,3]");
    out.note(fmt("scanned %llu + %llu ideals", (unsigned long long)exhaustive.scanned,
                 (unsigned long long)sampled.scanned));
}

} // namespace

int main() {
    std::printf("acceptance checks for the relative cohomology toolkit\n");
    run(1, "projective-plane regression, char 0", criterion_rp2_char0);
    run(2, "projective-plane characteristic sensitivity", criterion_rp2_characteristic);
    run(3, "moebius-band regression", criterion_moebius);
    run(4, "mixed-power regression", criterion_mixed_powers);

    std::printf("sweeping all squarefree ideals with m+n <= 5 plus 200 sampled at m+n = 6...\n");
    std::fflush(stdout);
    SweepData s{};
    bool sweep_threw = false;
    std::string sweep_error;
    try {
        s = run_sweep();
    } catch (const std::exception& e) {
        sweep_threw = true;
        sweep_error = std::string("exception: ") + e.what();
    }

    run(5, "engine matches prime formula and homology oracle", [&](Outcome& out) {
        out.expect(!sweep_threw, sweep_error);
        if (sweep_threw) return;
        out.expect(s.ideals == s.expected_ideals,
                   fmt("corpus size %llu != %llu", (unsigned long long)s.ideals,
                       (unsigned long long)s.expected_ideals));
        out.expect(s.cd_mismatches == 0,
                   fmt("%llu cd mismatches", (unsigned long long)s.cd_mismatches));
        out.expect(s.depth_dim_mismatches == 0,
                   fmt("%llu depth/dim mismatches", (unsigned long long)s.depth_dim_mismatches));
        out.expect(s.t_oracle < 300.0, fmt("%.1f s exceeded the 5 min budget", s.t_oracle));
        out.note(fmt("%llu ideals, %llu profiles, %.1f s", (unsigned long long)s.ideals,
                     (unsigned long long)s.profile_checks, s.t_oracle));
    });

    run(6, "structural identities across the corpus", [&](Outcome& out) {
        out.expect(!sweep_threw, sweep_error);
        if (sweep_threw) return;
        out.expect(s.restriction_fails == 0,
                   fmt("%llu grade bound violations", (unsigned long long)s.restriction_fails));
        out.expect(s.cd_sum_fails == 0,
                   fmt("%llu cd-sum violations", (unsigned long long)s.cd_sum_fails));
        out.expect(s.extension_fails == 0,
                   fmt("%llu extension-formula violations", (unsigned long long)s.extension_fails));
        out.expect(s.grade_table_fails == 0,
                   fmt("%llu grade/vanishing-table disagreements", (unsigned long long)s.grade_table_fails));
        out.expect(s.associated_prime_fails == 0,
                   fmt("%llu associated-prime mismatches", (unsigned long long)s.associated_prime_fails));
        out.expect(s.small_cd_approx_fails == 0,
                   fmt("%llu small-cd non-approx verdicts", (unsigned long long)s.small_cd_approx_fails));
        out.expect(s.separated_fails == 0,
                   fmt("%llu separated-block mismatches", (unsigned long long)s.separated_fails));
        out.expect(s.approx_route_fails == 0,
                   fmt("%llu approx-route disagreements", (unsigned long long)s.approx_route_fails));
        out.note(fmt("%llu property checks, %.1f s", (unsigned long long)s.property_checks, s.t_props));
    });

    run(7, "y-interval gap search", criterion_search);

    run(8, "representative-box stability", [&](Outcome& out) {
        out.expect(!sweep_threw, sweep_error);
        if (sweep_threw) return;
        out.expect(s.flag_changes == 0,
                   fmt("%llu of %llu profiles changed under a widened box",
                       (unsigned long long)s.flag_changes, (unsigned long long)s.profile_checks));
        out.note(fmt("%llu profiles re-run with box pad 1, %.1f s",
                     (unsigned long long)s.profile_checks, s.t_box));
    });

    std::printf("%d of 8 criteria passed\n", 8 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
