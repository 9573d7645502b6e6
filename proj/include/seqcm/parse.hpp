#ifndef SEQCM_PARSE_HPP
#define SEQCM_PARSE_HPP

#include <string>
#include <vector>

#include "seqcm/ideal.hpp"

// Text documents describing a monomial ideal.  Line-based format:
//
//   # comment (anywhere)
//   ring M N            required, once, before any generator
//   name IDENT          optional
//   char INT...         optional field characteristics of interest
//   gen TOKEN...        one monomial per line; tokens are x3, y2, x1^2, or 1
//
// No gen lines means the zero ideal; "gen 1" is the unit ideal.  Generators
// are minimalized on load.

namespace seqcm {

struct IdealDocument {
    std::string name;
    RingSpec ring{1, 0};
    GeneralMonomialIdeal ideal;
    bool squarefree = true;
    std::vector<int> characteristics;

    /// Canonical generator token lists of the minimalized ideal.
    [[nodiscard]] std::vector<std::vector<std::string>> generator_tokens() const;
};

/// Parses a document; errors carry 1-based line positions.
[[nodiscard]] IdealDocument parse_ideal(const std::string& text);

/// Reads a document from a file path.
[[nodiscard]] IdealDocument load_ideal_file(const std::string& path);

/// Canonical text form; parse(to_text(d)) reproduces d.
[[nodiscard]] std::string to_text(const IdealDocument& document);

[[nodiscard]] IdealDocument document_for(const GeneralMonomialIdeal& ideal, std::string name);

} // namespace seqcm

#endif
