#ifndef SEQCM_CECH_HPP
#define SEQCM_CECH_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "seqcm/ideal.hpp"
#include "seqcm/linalg.hpp"

// Torsion cohomology H^i_T(A/B) for a set of variables T, computed degreewise:
// the covering complex on T splits into one strand per fine degree, each strand
// a cube of localizations with 0/1-dimensional components and sign maps.  Only
// finitely many degree patterns can carry cohomology; representatives have
// exponents in [-1, d_max] (negative entries only on T).

namespace seqcm {

/// Subquotient A/B of the ring by monomial ideals B <= A.
class QuotientModule {
public:
    QuotientModule(GeneralMonomialIdeal a, GeneralMonomialIdeal b);

    [[nodiscard]] static QuotientModule cyclic(const SquarefreeIdeal& ideal);
    [[nodiscard]] static QuotientModule cyclic(const GeneralMonomialIdeal& ideal);
    /// numerator/denominator, i.e. the subquotient top/bottom of the ring.
    [[nodiscard]] static QuotientModule pair(const SquarefreeIdeal& top,
                                             const SquarefreeIdeal& bottom);

    [[nodiscard]] const RingSpec& ring() const { return a_.ring(); }
    [[nodiscard]] const GeneralMonomialIdeal& top() const { return a_; }
    [[nodiscard]] const GeneralMonomialIdeal& bottom() const { return b_; }
    [[nodiscard]] bool is_zero() const { return a_ == b_; }
    [[nodiscard]] bool is_squarefree() const;
    [[nodiscard]] int max_exponent() const;
    [[nodiscard]] std::string to_string() const;

private:
    GeneralMonomialIdeal a_, b_;
};

/// Fine degree of a strand: exponents clamped to the representative box.
struct DegreePattern {
    std::array<std::int8_t, kMaxVars> exps{};

    [[nodiscard]] VarSet pos() const {
        VarSet s;
        for (int v = 0; v < kMaxVars; ++v)
            if (exps[v] > 0) s.add(v);
        return s;
    }
    [[nodiscard]] VarSet neg() const {
        VarSet s;
        for (int v = 0; v < kMaxVars; ++v)
            if (exps[v] < 0) s.add(v);
        return s;
    }
    [[nodiscard]] std::string to_string(const RingSpec& ring) const;

    friend bool operator==(const DegreePattern& a, const DegreePattern& b) {
        return a.exps == b.exps;
    }
    friend bool operator<(const DegreePattern& a, const DegreePattern& b) {
        return a.exps < b.exps;
    }
};

/// Is the monomial of this degree contained in ideal * S_W (variables in W
/// inverted)?  Requires neg(degree) <= W.
[[nodiscard]] bool localized_membership(const GeneralMonomialIdeal& ideal,
                                        const DegreePattern& degree, VarSet inverted);

/// One degree strand of the covering complex on T.
struct StrandComplex {
    VarSet torsion;
    DegreePattern degree;
    std::vector<VarSet> subsets;  // all W with neg <= W <= T, by (|W|, bits)
    std::vector<char> nonzero;    // component dimensions (0 or 1)

    /// Cochain complex with components graded by |W| = 0..|T|.
    [[nodiscard]] ChainComplex chain() const;
};

[[nodiscard]] StrandComplex strand(const QuotientModule& module, VarSet torsion,
                                   const DegreePattern& degree);

/// H^0..H^|T| dimensions of a single strand.
[[nodiscard]] std::vector<int> strand_cohomology(const QuotientModule& module, VarSet torsion,
                                                 const DegreePattern& degree,
                                                 const FieldSpec& field);

struct EngineOptions {
    int threads = 0;   // 0 = SEQCM_THREADS env, then hardware count
    bool fast = false; // skip strands whose cohomological indices are all witnessed
    int box_pad = 0;   // widen the representative box (uses the general path)
};

/// Vanishing table of H^i_T(M) with one witness degree per nonvanishing index.
struct CohomologyProfile {
    VarSet torsion;
    FieldSpec field;
    bool zero_module = false;
    std::vector<char> nonvanishing;                   // size |T|+1
    std::vector<std::optional<DegreePattern>> witnesses;

    /// Least/greatest nonvanishing index; empty only for the zero module.
    [[nodiscard]] std::optional<int> grade() const;
    [[nodiscard]] std::optional<int> cd() const;
    [[nodiscard]] bool cm() const { return !zero_module && grade() == cd(); }
};

[[nodiscard]] CohomologyProfile cohomology_profile(const QuotientModule& module, VarSet torsion,
                                                   const FieldSpec& field,
                                                   const EngineOptions& options = {});

struct EngineDepthDim {
    int depth = 0;
    int dim = 0;
};

/// Torsion depth/dim of the quotient: grade and cd with T = all variables.
[[nodiscard]] EngineDepthDim depth_dim_via_engine(const QuotientModule& module,
                                                  const FieldSpec& field,
                                                  const EngineOptions& options = {});

/// cd(T, S/I) as the maximum of |T - p| over the minimal primes p.
[[nodiscard]] int cd_via_primes(const SquarefreeIdeal& ideal, VarSet torsion);

} // namespace seqcm

#endif
