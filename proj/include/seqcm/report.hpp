#ifndef SEQCM_REPORT_HPP
#define SEQCM_REPORT_HPP

#include <json.hpp>

#include "seqcm/builtins.hpp"
#include "seqcm/classify.hpp"

// Structured reports with stable field order; every command renders its JSON
// document first and derives the human-readable text from it.

namespace seqcm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "seqcm-report/1";

[[nodiscard]] Json envelope(const std::string& command, const IdealDocument* input, Json parameters);

[[nodiscard]] Json profile_json(const RingSpec& ring, const CohomologyProfile& profile);
[[nodiscard]] Json filtration_json(const FiltrationResult& filtration);
[[nodiscard]] Json classification_json(const RingSpec& ring, const ClassificationReport& report);
[[nodiscard]] Json invariant_json(const CmInvariantReport& report);
[[nodiscard]] Json search_json(const SearchResult& result);
[[nodiscard]] Json examples_json();

/// Torsion-set label: "P", "Q" or "m".
[[nodiscard]] std::string torsion_label(const RingSpec& ring, VarSet torsion);
[[nodiscard]] VarSet torsion_from_label(const RingSpec& ring, const std::string& label);

/// Plain-text rendering of a command report.
[[nodiscard]] std::string render_human(const Json& report);

} // namespace seqcm

#endif
