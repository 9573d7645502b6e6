#include "seqcm/classify.hpp"

#include <algorithm>

#include "seqcm/builtins.hpp"
#include "seqcm/enumerate.hpp"

namespace seqcm {

ClassificationCore classify_core(const SquarefreeIdeal& ideal, VarSet torsion,
                                 const FieldSpec& field, const EngineOptions& options) {
    if (ideal.is_zero() || ideal.is_unit())
        throw InputError("classification needs a proper nonzero ideal");

    ClassificationCore core;
    core.torsion = torsion;
    core.profile = cohomology_profile(QuotientModule::cyclic(ideal), torsion, field, options);
    core.filtration = dimension_filtration(ideal, torsion);
    core.relatively_unmixed = core.filtration.r == 1;
    core.cm = core.profile.cm();

    int grade = *core.profile.grade();
    int cd = *core.profile.cd();
    if (cd != core.filtration.q.back())
        throw InternalError("engine cd disagrees with the top filtration value");

    core.seq_cm = true;
    for (int i = 1; i <= core.filtration.r; ++i) {
        SeqStep step;
        step.index = i;
        step.required = core.filtration.q[std::size_t(i - 1)];
        step.quotient = core.filtration.ideals[std::size_t(i - 1)];
        step.profile = i == 1 ? core.profile
                              : cohomology_profile(QuotientModule::cyclic(step.quotient), torsion,
                                                   field, options);
        step.ok = step.profile.grade() == std::optional<int>(step.required);
        core.seq_cm = core.seq_cm && step.ok;
        core.steps.push_back(std::move(step));
    }

    core.unmixed_ideal = core.filtration.ideals[std::size_t(core.filtration.r - 1)];
    core.unmixed_profile = core.filtration.r == 1
                               ? core.profile
                               : core.steps.back().profile;
    if (core.unmixed_profile.cd() != std::optional<int>(core.filtration.q.back()))
        throw InternalError("unmixed quotient cd disagrees with the top filtration value");

    core.approx_by_definition = core.unmixed_profile.cm() && grade >= cd - 1;
    core.approx_by_filtration = core.seq_cm && grade >= cd - 1;
    if (core.approx_by_definition != core.approx_by_filtration)
        throw InternalError("approximate-CM routes disagree on " + ideal.to_string());
    core.approx_cm = core.approx_by_definition;
    return core;
}

ClassificationReport classify(const SquarefreeIdeal& ideal, VarSet torsion,
                              const FieldSpec& field, const EngineOptions& options) {
    ClassificationReport report;
    report.field = field;
    report.relative = classify_core(ideal, torsion, field, options);
    report.classical = torsion == ideal.ring().all_vars()
                           ? report.relative
                           : classify_core(ideal, ideal.ring().all_vars(), field, options);

    for (const ClassificationCore* core : {&report.relative, &report.classical}) {
        if (core->cm && !core->seq_cm)
            throw InternalError("cm quotient not sequentially cm");
        int spread = *core->profile.cd() - *core->profile.grade();
        if (core->seq_cm && spread <= 1 && !core->approx_cm)
            throw InternalError("sequentially cm quotient with spread <= 1 not approximately cm");
    }
    return report;
}

// ==== invariant report ====

namespace {

long require_value(std::optional<int> v, const char* what) {
    if (!v) throw InternalError(std::string("undefined ") + what + " on a nonzero module");
    return *v;
}

} // namespace

CmInvariantReport cm_invariant_report(const GeneralMonomialIdeal& ideal, const FieldSpec& field,
                                      const EngineOptions& options) {
    if (ideal.is_zero() || ideal.is_unit())
        throw InputError("invariant report needs a proper nonzero ideal");

    CmInvariantReport out;
    const RingSpec& ring = ideal.ring();
    QuotientModule module = QuotientModule::cyclic(ideal);

    EngineDepthDim dd = depth_dim_via_engine(module, field, options);
    out.depth = dd.depth;
    out.dim = dd.dim;
    if (dd.depth != dd.dim) {
        out.declined = true;
        out.reason = "quotient is not Cohen-Macaulay (depth " + std::to_string(dd.depth) +
                     " != dim " + std::to_string(dd.dim) + ")";
        return out;
    }

    std::optional<SquarefreeIdeal> sq = ideal.as_squarefree();
    if (!sq) {
        out.declined = true;
        out.reason = "input is not squarefree: no dimension filtration available";
        return out;
    }

    ClassificationCore core = classify_core(*sq, ring.q_vars(), field, options);
    if (!core.seq_cm) {
        out.declined = true;
        out.reason = "quotient is not sequentially CM with respect to the y-block";
        return out;
    }

    out.r = core.filtration.r;
    out.grade_q = int(require_value(core.profile.grade(), "grade"));
    out.cd_q = int(require_value(core.profile.cd(), "cd"));

    CohomologyProfile profile_p =
        cohomology_profile(module, ring.p_vars(), field, options);
    out.cd_p = int(require_value(profile_p.cd(), "cd"));

    long dim_m = out.dim;
    for (int i = 1; i <= core.filtration.r; ++i) {
        QuotientModule layer = core.filtration.layer(i);
        CohomologyProfile lp = cohomology_profile(layer, ring.p_vars(), field, options);
        CohomologyProfile lq = cohomology_profile(layer, ring.q_vars(), field, options);
        CohomologyProfile lm = cohomology_profile(layer, ring.all_vars(), field, options);
        long cd_p_i = require_value(lp.cd(), "cd");
        long grade_q_i = require_value(lq.grade(), "grade");
        long dim_i = require_value(lm.cd(), "dim");

        out.lines.push_back({"cd_p_layer_constant", i, cd_p_i, out.cd_p, cd_p_i == out.cd_p});
        out.lines.push_back({"grade_q_plus_cd_p_is_dim", i, grade_q_i + cd_p_i, dim_i,
                             grade_q_i + cd_p_i == dim_i});
        out.lines.push_back({"grade_q_layer_constant", i, grade_q_i, out.grade_q,
                             grade_q_i == out.grade_q});
    }

    out.product_identity = out.cd_p + out.cd_q == long(dim_m) + out.r - 1;
    out.full_q_interval = true;
    for (int s = out.grade_q; s <= out.cd_q; ++s)
        out.full_q_interval = out.full_q_interval && core.profile.nonvanishing[std::size_t(s)];
    out.lines.push_back({"product_identity_iff_full_interval", 0, out.product_identity,
                         out.full_q_interval, out.product_identity == out.full_q_interval});

    for (const InvariantLine& line : out.lines)
        if (!line.ok)
            throw InternalError("invariant line failed on " + ideal.to_string() + ": " +
                                line.check + " at layer " + std::to_string(line.index) + " (" +
                                std::to_string(line.lhs) + " vs " + std::to_string(line.rhs) + ")");
    return out;
}

// ==== counterexample search ====

namespace {

bool full_interval(const CohomologyProfile& profile) {
    int grade = *profile.grade(), cd = *profile.cd();
    for (int s = grade; s <= cd; ++s)
        if (!profile.nonvanishing[std::size_t(s)]) return false;
    return true;
}

// Scans one quotient; records it when CM with a gap-free y-block interval.
void scan_ideal(const SquarefreeIdeal& ideal, const SearchOptions& options, SearchResult& out) {
    ++out.scanned;
    DepthDim dd = depth_dim_oracle(ideal, options.field);
    if (dd.depth != dd.dim) return;
    ++out.cm_count;

    QuotientModule module = QuotientModule::cyclic(ideal);
    CohomologyProfile pq =
        cohomology_profile(module, ideal.ring().q_vars(), options.field, options.engine);
    if (!full_interval(pq)) return;
    ++out.qualifying;

    CohomologyProfile pp =
        cohomology_profile(module, ideal.ring().p_vars(), options.field, options.engine);
    SearchFinding finding;
    finding.ideal = ideal;
    finding.grade_q = *pq.grade();
    finding.cd_q = *pq.cd();
    finding.grade_p = *pp.grade();
    finding.cd_p = *pp.cd();
    finding.p_gap = !full_interval(pp);

    out.max_q_spread = std::max(out.max_q_spread, finding.cd_q - finding.grade_q);
    if (finding.p_gap) out.counterexamples.push_back(finding);
    else if (finding.cd_q - finding.grade_q >= 2) out.notable.push_back(finding);
}

} // namespace

SearchResult question_search(const SearchOptions& options) {
    if (options.max_x < 1 || options.max_y < 1)
        throw InputError("search bounds must be at least 1 in each block");
    if (options.max_x + options.max_y > 8)
        throw DeclinedError("search bounds too large: m+n = " +
                            std::to_string(options.max_x + options.max_y) +
                            " admits more than 2*10^12 ideals per ring; restrict to m+n <= 8");

    SearchResult out;
    out.options = options;
    out.exhaustive = true;
    std::uint64_t remaining = options.budget;

    // Built-in fixtures inside the bounds are scanned before any sweep so a
    // budgeted sample always covers the known interesting instances.
    std::vector<SquarefreeIdeal> pinned;
    for (const BuiltinExample& ex : builtin_examples()) {
        const RingSpec& ring = ex.document.ring;
        if (ring.m > options.max_x || ring.n > options.max_y || !ex.document.squarefree) continue;
        std::optional<SquarefreeIdeal> sq = ex.document.ideal.as_squarefree();
        if (sq && remaining > 0) {
            scan_ideal(*sq, options, out);
            pinned.push_back(*sq);
            --remaining;
        }
    }

    for (int m = 1; m <= options.max_x; ++m) {
        for (int n = 1; n <= options.max_y; ++n) {
            RingSpec ring(m, n);
            std::vector<SquarefreeIdeal> ring_pinned;
            for (const SquarefreeIdeal& p : pinned)
                if (p.ring() == ring) ring_pinned.push_back(p);
            auto is_pinned = [&](const SquarefreeIdeal& ideal) {
                return std::find(ring_pinned.begin(), ring_pinned.end(), ideal) !=
                       ring_pinned.end();
            };

            std::uint64_t total = count_squarefree_ideals(ring.var_count());
            if (total != UINT64_MAX && total <= remaining + ring_pinned.size()) {
                enumerate_squarefree_ideals(ring, [&](const SquarefreeIdeal& ideal) {
                    if (is_pinned(ideal)) return true;
                    scan_ideal(ideal, options, out);
                    --remaining;
                    return true;
                });
            } else {
                out.exhaustive = false;
                std::mt19937_64 rng(options.seed ^ (std::uint64_t(m) << 32) ^ std::uint64_t(n));
                std::vector<SquarefreeIdeal> seen;
                std::uint64_t misses = 0;
                while (remaining > 0 && misses < 4096) {
                    SquarefreeIdeal ideal = random_squarefree_ideal(ring, rng);
                    if (is_pinned(ideal) ||
                        std::find(seen.begin(), seen.end(), ideal) != seen.end()) {
                        ++misses;
                        continue;
                    }
                    seen.push_back(ideal);
                    scan_ideal(ideal, options, out);
                    --remaining;
                }
            }
        }
    }
    return out;
}

} // namespace seqcm
