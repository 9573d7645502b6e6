// Python bindings: every operation returns the same JSON report the CLI
// emits, serialized as a string; the seqcm package parses it into dicts.

#include <pybind11/pybind11.h>

#include "seqcm/report.hpp"

namespace py = pybind11;

namespace {

using namespace seqcm;

// builtin name, inline document text, or a file path
IdealDocument resolve_source(const std::string& source) {
    if (std::optional<BuiltinExample> builtin = find_builtin(source)) return builtin->document;
    if (source.find('\n') != std::string::npos || source.rfind("ring ", 0) == 0)
        return parse_ideal(source);
    return load_ideal_file(source);
}

EngineOptions engine(int threads, bool fast, int box_pad) {
    EngineOptions opt;
    opt.threads = threads;
    opt.fast = fast;
    opt.box_pad = box_pad;
    return opt;
}

SquarefreeIdeal require_squarefree(const IdealDocument& doc) {
    std::optional<SquarefreeIdeal> sq = doc.ideal.as_squarefree();
    if (!sq) throw DeclinedError("input is not squarefree: no dimension filtration available");
    return *sq;
}

std::string profile_report(const std::string& source, const std::string& wrt, int characteristic,
                           int threads, bool fast, int box_pad) {
    IdealDocument doc = resolve_source(source);
    VarSet torsion = torsion_from_label(doc.ring, wrt);
    FieldSpec field{characteristic};
    CohomologyProfile profile = cohomology_profile(QuotientModule::cyclic(doc.ideal), torsion,
                                                   field, engine(threads, fast, box_pad));
    Json report = envelope("profile", &doc,
                           Json{{"wrt", torsion_label(doc.ring, torsion)},
                                {"char", field.characteristic},
                                {"box_pad", box_pad}});
    report["result"] = profile_json(doc.ring, profile);
    return report.dump(2);
}

std::string filtration_report(const std::string& source, const std::string& wrt) {
    IdealDocument doc = resolve_source(source);
    SquarefreeIdeal ideal = require_squarefree(doc);
    VarSet torsion = torsion_from_label(doc.ring, wrt);
    FiltrationResult filtration = dimension_filtration(ideal, torsion);
    Json report = envelope("filtration", &doc,
                           Json{{"wrt", torsion_label(doc.ring, torsion)}});
    report["result"] = filtration_json(filtration);
    return report.dump(2);
}

std::string classify_report(const std::string& source, const std::string& wrt, int characteristic,
                            int threads, bool fast, int box_pad) {
    IdealDocument doc = resolve_source(source);
    SquarefreeIdeal ideal = require_squarefree(doc);
    VarSet torsion = torsion_from_label(doc.ring, wrt);
    FieldSpec field{characteristic};
    ClassificationReport result =
        classify(ideal, torsion, field, engine(threads, fast, box_pad));
    Json report = envelope("classify", &doc,
                           Json{{"wrt", torsion_label(doc.ring, torsion)},
                                {"char", field.characteristic}});
    report["result"] = classification_json(doc.ring, result);
    return report.dump(2);
}

std::string invariant_report(const std::string& source, int characteristic, int threads,
                             bool fast, int box_pad) {
    IdealDocument doc = resolve_source(source);
    FieldSpec field{characteristic};
    CmInvariantReport result =
        cm_invariant_report(doc.ideal, field, engine(threads, fast, box_pad));
    Json report = envelope("invariants", &doc, Json{{"char", field.characteristic}});
    report["result"] = invariant_json(result);
    return report.dump(2);
}

std::string search_report(int max_x, int max_y, std::uint64_t budget, int characteristic,
                          std::uint64_t seed) {
    SearchOptions options;
    options.max_x = max_x;
    options.max_y = max_y;
    options.budget = budget;
    options.field = FieldSpec{characteristic};
    options.seed = seed;
    SearchResult result = question_search(options);
    Json report = envelope("search", nullptr,
                           Json{{"max_x", options.max_x},
                                {"max_y", options.max_y},
                                {"budget", options.budget},
                                {"char", options.field.characteristic},
                                {"seed", options.seed}});
    report["result"] = search_json(result);
    return report.dump(2);
}

std::string examples_report() {
    Json report = envelope("examples", nullptr, Json::object());
    report["result"] = examples_json();
    return report.dump(2);
}

std::string render_report(const std::string& report_json) {
    return render_human(Json::parse(report_json));
}

std::string canonical_text(const std::string& source) {
    return to_text(resolve_source(source));
}

} // namespace

PYBIND11_MODULE(_seqcm, m) {
    m.doc() = "relative local cohomology of bigraded monomial quotients";
    m.attr("__version__") = kToolVersion;

    py::register_exception<DeclinedError>(m, "DeclinedError");
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    m.def("profile", &profile_report, "JSON nonvanishing table of H^i_T with witness degrees",
          py::arg("source"), py::arg("wrt") = "Q", py::arg("characteristic") = 0,
          py::arg("threads") = 0, py::arg("fast") = false, py::arg("box_pad") = 0);
    m.def("filtration", &filtration_report,
          "JSON dimension filtration with respect to a block",
          py::arg("source"), py::arg("wrt") = "Q");
    m.def("classify", &classify_report,
          "JSON CM / sequentially CM / approximately CM verdicts",
          py::arg("source"), py::arg("wrt") = "Q", py::arg("characteristic") = 0,
          py::arg("threads") = 0, py::arg("fast") = false, py::arg("box_pad") = 0);
    m.def("invariants", &invariant_report,
          "JSON per-layer invariant identities for CM quotients (declines in-band)",
          py::arg("source"), py::arg("characteristic") = 0, py::arg("threads") = 0,
          py::arg("fast") = false, py::arg("box_pad") = 0);
    m.def("search", &search_report,
          "JSON scan of small rings for cohomology-interval counterexample candidates",
          py::arg("max_x") = 2, py::arg("max_y") = 2, py::arg("budget") = 1000,
          py::arg("characteristic") = 0, py::arg("seed") = SearchOptions{}.seed);
    m.def("examples", &examples_report, "JSON list of the built-in example ideals");
    m.def("render", &render_report, "plain-text rendering of a JSON report",
          py::arg("report_json"));
    m.def("canonical_text", &canonical_text,
          "canonical document text of a builtin, document text, or file",
          py::arg("source"));
}
