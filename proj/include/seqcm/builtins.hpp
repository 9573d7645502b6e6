#ifndef SEQCM_BUILTINS_HPP
#define SEQCM_BUILTINS_HPP

#include <optional>
#include <string>
#include <vector>

#include "seqcm/parse.hpp"

namespace seqcm {

/// Named example quotient shipped with the tool.
struct BuiltinExample {
    IdealDocument document;
    std::string note;
};

/// Fixed example corpus, stable order.
[[nodiscard]] const std::vector<BuiltinExample>& builtin_examples();

/// Lookup by document name.
[[nodiscard]] std::optional<BuiltinExample> find_builtin(const std::string& name);

/// Resolves a command-line ideal argument: builtin name first, then file path.
[[nodiscard]] IdealDocument resolve_ideal_argument(const std::string& argument);

} // namespace seqcm

#endif
