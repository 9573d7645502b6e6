// Command-line interface.  Exit codes: 0 success, 1 declined (preconditions
// unmet or cost cap exceeded), 2 input error, 3 internal assertion failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "seqcm/report.hpp"

namespace {

using namespace seqcm;

struct CommonFlags {
    std::string wrt = "Q";
    int characteristic = 0;
    int threads = 0;
    bool fast = false;
    int box_pad = 0;
    bool json = false;
};

void add_engine_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--char", flags.characteristic, "field characteristic (0 or a prime <= 65536)")
        ->default_val(0);
    cmd->add_option("--threads", flags.threads,
                    "worker threads (0 = SEQCM_THREADS env or hardware default)")
        ->default_val(0);
    cmd->add_flag("--fast", flags.fast, "skip strands whose cohomology window is already decided");
    cmd->add_option("--box-pad", flags.box_pad, "enlarge the degree scan box by this margin")
        ->default_val(0);
}

void add_json_flag(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--json", flags.json, "emit the machine-readable report instead of text");
}

EngineOptions engine_options(const CommonFlags& flags) {
    EngineOptions opt;
    opt.threads = flags.threads;
    opt.fast = flags.fast;
    opt.box_pad = flags.box_pad;
    return opt;
}

void emit(const Json& report, bool json) {
    if (json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << render_human(report);
}

SquarefreeIdeal require_squarefree(const IdealDocument& doc) {
    std::optional<SquarefreeIdeal> sq = doc.ideal.as_squarefree();
    if (!sq) throw DeclinedError("input is not squarefree: no dimension filtration available");
    return *sq;
}

int run_profile(const std::string& ideal_arg, const CommonFlags& flags) {
    IdealDocument doc = resolve_ideal_argument(ideal_arg);
    VarSet torsion = torsion_from_label(doc.ring, flags.wrt);
    FieldSpec field{flags.characteristic};
    CohomologyProfile profile = cohomology_profile(QuotientModule::cyclic(doc.ideal), torsion,
                                                   field, engine_options(flags));
    Json report = envelope("profile", &doc,
                           Json{{"wrt", torsion_label(doc.ring, torsion)},
                                {"char", field.characteristic},
                                {"box_pad", flags.box_pad}});
    report["result"] = profile_json(doc.ring, profile);
    emit(report, flags.json);
    return 0;
}

int run_filtration(const std::string& ideal_arg, const CommonFlags& flags) {
    IdealDocument doc = resolve_ideal_argument(ideal_arg);
    SquarefreeIdeal ideal = require_squarefree(doc);
    VarSet torsion = torsion_from_label(doc.ring, flags.wrt);
    FiltrationResult filtration = dimension_filtration(ideal, torsion);
    Json report = envelope("filtration", &doc,
                           Json{{"wrt", torsion_label(doc.ring, torsion)}});
    report["result"] = filtration_json(filtration);
    emit(report, flags.json);
    return 0;
}

int run_classify(const std::string& ideal_arg, const CommonFlags& flags) {
    IdealDocument doc = resolve_ideal_argument(ideal_arg);
    SquarefreeIdeal ideal = require_squarefree(doc);
    VarSet torsion = torsion_from_label(doc.ring, flags.wrt);
    FieldSpec field{flags.characteristic};
    ClassificationReport result = classify(ideal, torsion, field, engine_options(flags));
    Json report = envelope("classify", &doc,
                           Json{{"wrt", torsion_label(doc.ring, torsion)},
                                {"char", field.characteristic}});
    report["result"] = classification_json(doc.ring, result);
    emit(report, flags.json);
    return 0;
}

int run_invariants(const std::string& ideal_arg, const CommonFlags& flags) {
    IdealDocument doc = resolve_ideal_argument(ideal_arg);
    FieldSpec field{flags.characteristic};
    CmInvariantReport result = cm_invariant_report(doc.ideal, field, engine_options(flags));
    Json report = envelope("invariants", &doc, Json{{"char", field.characteristic}});
    report["result"] = invariant_json(result);
    emit(report, flags.json);
    return result.declined ? 1 : 0;
}

int run_search(const SearchOptions& options, bool json) {
    SearchResult result = question_search(options);
    Json report = envelope("search", nullptr,
                           Json{{"max_x", options.max_x},
                                {"max_y", options.max_y},
                                {"budget", options.budget},
                                {"char", options.field.characteristic},
                                {"seed", options.seed}});
    report["result"] = search_json(result);
    emit(report, json);
    return 0;
}

int run_examples(bool json) {
    Json report = envelope("examples", nullptr, Json::object());
    report["result"] = examples_json();
    emit(report, json);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative local cohomology of bigraded monomial quotients"};
    app.require_subcommand(1);

    CommonFlags profile_flags, filtration_flags, classify_flags, invariant_flags;
    std::string profile_ideal, filtration_ideal, classify_ideal, invariant_ideal;
    SearchOptions search_options;
    bool search_json_flag = false;
    bool examples_json_flag = false;
    std::uint64_t search_budget = 1000;

    CLI::App* profile_cmd =
        app.add_subcommand("profile", "nonvanishing table of H^i_T with witness degrees");
    profile_cmd->add_option("ideal", profile_ideal, "builtin name or ideal file")->required();
    profile_cmd->add_option("--wrt", profile_flags.wrt, "torsion block: P, Q or m")
        ->default_val("Q");
    add_engine_flags(profile_cmd, profile_flags);
    add_json_flag(profile_cmd, profile_flags);

    CLI::App* filtration_cmd =
        app.add_subcommand("filtration", "dimension filtration with respect to a block");
    filtration_cmd->add_option("ideal", filtration_ideal, "builtin name or ideal file")
        ->required();
    filtration_cmd->add_option("--wrt", filtration_flags.wrt, "torsion block: P, Q or m")
        ->default_val("Q");
    add_json_flag(filtration_cmd, filtration_flags);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "CM / sequentially CM / approximately CM verdicts");
    classify_cmd->add_option("ideal", classify_ideal, "builtin name or ideal file")->required();
    classify_cmd->add_option("--wrt", classify_flags.wrt, "torsion block: P, Q or m")
        ->default_val("Q");
    add_engine_flags(classify_cmd, classify_flags);
    add_json_flag(classify_cmd, classify_flags);

    CLI::App* invariant_cmd = app.add_subcommand(
        "invariants", "per-layer invariant identities for CM quotients (declines otherwise)");
    invariant_cmd->add_option("ideal", invariant_ideal, "builtin name or ideal file")->required();
    add_engine_flags(invariant_cmd, invariant_flags);
    add_json_flag(invariant_cmd, invariant_flags);

    CLI::App* search_cmd = app.add_subcommand(
        "search", "scan small rings for cohomology-interval counterexample candidates");
    search_cmd->add_option("--max-x", search_options.max_x, "largest x-block size")
        ->default_val(2);
    search_cmd->add_option("--max-y", search_options.max_y, "largest y-block size")
        ->default_val(2);
    search_cmd->add_option("--budget", search_budget, "ideal scan budget")->default_val(1000);
    int search_char = 0;
    search_cmd->add_option("--char", search_char, "field characteristic")->default_val(0);
    search_cmd->add_option("--seed", search_options.seed, "sampling seed")
        ->default_val(SearchOptions{}.seed);
    search_cmd->add_flag("--json", search_json_flag, "emit the machine-readable report");

    CLI::App* examples_cmd = app.add_subcommand("examples", "list the built-in example ideals");
    examples_cmd->add_flag("--json", examples_json_flag, "emit the machine-readable report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (profile_cmd->parsed()) return run_profile(profile_ideal, profile_flags);
        if (filtration_cmd->parsed()) return run_filtration(filtration_ideal, filtration_flags);
        if (classify_cmd->parsed()) return run_classify(classify_ideal, classify_flags);
        if (invariant_cmd->parsed()) return run_invariants(invariant_ideal, invariant_flags);
        if (search_cmd->parsed()) {
            search_options.budget = search_budget;
            search_options.field = FieldSpec{search_char};
            return run_search(search_options, search_json_flag);
        }
        if (examples_cmd->parsed()) return run_examples(examples_json_flag);
    } catch (const DeclinedError& e) {
        std::cerr << "declined: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error (please report): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
