#include "seqcm/builtins.hpp"

#include <fstream>

namespace seqcm {

namespace {

BuiltinExample make(const char* text, std::string note) {
    return {parse_ideal(text), std::move(note)};
}

std::vector<BuiltinExample> build_corpus() {
    std::vector<BuiltinExample> out;

    // Minimal 6-vertex triangulation of the real projective plane, encoded by
    // its nonfaces.  The quotient has 10 minimal primes; depth drops from 3 to
    // 2 at characteristic 2 while the y-block interval [1,3] stays full.
    out.push_back(make(
        "ring 3 3\n"
        "name rp2\n"
        "char 0 2\n"
        "gen x1 x2 x3\n"
        "gen x1 x2 y1\n"
        "gen x1 x3 y2\n"
        "gen x1 y1 y3\n"
        "gen x1 y2 y3\n"
        "gen x2 x3 y3\n"
        "gen x2 y1 y2\n"
        "gen x2 y2 y3\n"
        "gen x3 y1 y2\n"
        "gen x3 y1 y3\n",
        "projective-plane triangulation; Cohen-Macaulay except in characteristic 2"));

    // Triangulated Moebius band: depth 2 < dim 3, classically not even
    // approximately CM, yet approximately CM with respect to either block.
    out.push_back(make(
        "ring 3 3\n"
        "name moebius\n"
        "char 0\n"
        "gen x1 x3\n"
        "gen x1 y2\n"
        "gen x2 y3\n"
        "gen x2 x3 y1\n"
        "gen x3 y1 y2\n"
        "gen y1 y2 y3\n",
        "Moebius-band triangulation; approximately CM w.r.t. either block only"));

    // Product of two depth-0, dimension-1 quotients; not squarefree.  The
    // y-block interval [0,1] is full although depth 0 != dim 2.
    out.push_back(make(
        "ring 2 2\n"
        "name tensor01\n"
        "char 0\n"
        "gen x1^2\n"
        "gen x1 x2\n"
        "gen y1^2\n"
        "gen y1 y2\n",
        "product of two depth-0 dimension-1 quotients; mixed and non-CM"));

    return out;
}

} // namespace

const std::vector<BuiltinExample>& builtin_examples() {
    static const std::vector<BuiltinExample> corpus = build_corpus();
    return corpus;
}

std::optional<BuiltinExample> find_builtin(const std::string& name) {
    for (const BuiltinExample& ex : builtin_examples())
        if (ex.document.name == name) return ex;
    return std::nullopt;
}

IdealDocument resolve_ideal_argument(const std::string& argument) {
    if (std::optional<BuiltinExample> ex = find_builtin(argument)) return ex->document;
    std::ifstream probe(argument);
    if (!probe)
        throw InputError("'" + argument + "' is neither a built-in example nor a readable file");
    return load_ideal_file(argument);
}

} // namespace seqcm
