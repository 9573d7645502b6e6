#ifndef SEQCM_CLASSIFY_HPP
#define SEQCM_CLASSIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "seqcm/filtration.hpp"
#include "seqcm/homology.hpp"

// Cohen-Macaulay classifiers relative to a torsion set T:
//   cm      <=>  grade(T, M) = cd(T, M)
//   seq_cm  <=>  grade(T, S/J_(i-1)) = q_i for every filtration step i
//   approx  <=>  M / (unmixed part) is cm w.r.t. T and grade >= cd - 1
// approx is evaluated both from the definition and through seq_cm; the two
// routes must agree.

namespace seqcm {

/// Declined operations: preconditions unmet (distinct from bad input).
class DeclinedError : public std::runtime_error {
public:
    explicit DeclinedError(const std::string& what) : std::runtime_error(what) {}
};

struct SeqStep {
    int index = 0;                // i = 1..r
    int required = 0;             // q_i
    SquarefreeIdeal quotient;     // J_(i-1)
    CohomologyProfile profile;    // of S/J_(i-1) w.r.t. T
    bool ok = false;              // grade == q_i
};

struct ClassificationCore {
    VarSet torsion;
    CohomologyProfile profile;    // of S/I w.r.t. T
    FiltrationResult filtration;
    bool relatively_unmixed = false;  // r == 1
    bool cm = false;
    bool seq_cm = false;
    bool approx_cm = false;
    std::vector<SeqStep> steps;
    SquarefreeIdeal unmixed_ideal;            // J_(r-1)
    CohomologyProfile unmixed_profile;        // of S/J_(r-1) w.r.t. T
    bool approx_by_definition = false;
    bool approx_by_filtration = false;
};

struct ClassificationReport {
    FieldSpec field;
    ClassificationCore relative;   // requested torsion set
    ClassificationCore classical;  // T = all variables
};

/// Requires a proper nonzero squarefree ideal.
[[nodiscard]] ClassificationReport classify(const SquarefreeIdeal& ideal, VarSet torsion,
                                            const FieldSpec& field,
                                            const EngineOptions& options = {});

[[nodiscard]] ClassificationCore classify_core(const SquarefreeIdeal& ideal, VarSet torsion,
                                               const FieldSpec& field,
                                               const EngineOptions& options = {});

// ==== invariant report for CM inputs ====

struct InvariantLine {
    std::string check;  // which identity
    int index = 0;      // filtration layer, 0 when not applicable
    long lhs = 0;
    long rhs = 0;
    bool ok = false;
};

struct CmInvariantReport {
    bool declined = false;
    std::string reason;
    int depth = 0, dim = 0;
    int r = 0;
    int grade_q = 0, cd_q = 0, cd_p = 0;
    bool product_identity = false;   // cd(P,M) + cd(Q,M) == dim M + r - 1
    bool full_q_interval = false;    // H^s_Q(M) != 0 on all of [grade_q, cd_q]
    std::vector<InvariantLine> lines;
};

/// Layer identities for quotients that are Cohen-Macaulay and sequentially CM
/// with respect to the y-block.  Unmet preconditions decline (not an error);
/// a failed identity line under met preconditions is an internal error.
[[nodiscard]] CmInvariantReport cm_invariant_report(const GeneralMonomialIdeal& ideal,
                                                    const FieldSpec& field,
                                                    const EngineOptions& options = {});

// ==== counterexample search ====

struct SearchOptions {
    int max_x = 1;
    int max_y = 1;
    std::uint64_t budget = 1000;
    FieldSpec field;
    std::uint64_t seed = 271828;
    EngineOptions engine;
};

struct SearchFinding {
    SquarefreeIdeal ideal;
    int grade_q = 0, cd_q = 0;
    int grade_p = 0, cd_p = 0;
    bool p_gap = false;  // interior vanishing between grade_p and cd_p
};

struct SearchResult {
    SearchOptions options;
    bool exhaustive = false;
    std::uint64_t scanned = 0;
    std::uint64_t cm_count = 0;
    std::uint64_t qualifying = 0;  // CM with gap-free y-block interval
    int max_q_spread = -1;         // max cd_q - grade_q over qualifying
    std::vector<SearchFinding> counterexamples;  // qualifying with a P-gap
    std::vector<SearchFinding> notable;          // qualifying with spread >= 2
};

/// Scans quotients that are CM with a gap-free y-block cohomology interval and
/// reports any whose x-block interval has an interior gap.  Declines when the
/// bounds exceed the configured cap (m+n <= 8).
[[nodiscard]] SearchResult question_search(const SearchOptions& options);

} // namespace seqcm

#endif
