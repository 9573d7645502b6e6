#include "seqcm/report.hpp"

#include <sstream>

namespace seqcm {

namespace {

Json ring_json(const RingSpec& ring) { return Json{{"m", ring.m}, {"n", ring.n}}; }

Json ideal_gens_json(const IdealDocument& doc) {
    Json gens = Json::array();
    for (const std::vector<std::string>& mono : doc.generator_tokens()) gens.push_back(mono);
    return gens;
}

Json prime_json(const MonomialPrime& p) {
    Json vars = Json::array();
    for (int v : p.vars.members()) vars.push_back(p.ring.var_name(v));
    return vars;
}

Json squarefree_ideal_json(const SquarefreeIdeal& ideal) {
    Json gens = Json::array();
    for (VarSet g : ideal.gens()) gens.push_back(monomial_to_string(ideal.ring(), g));
    return gens;
}

Json core_json(const RingSpec& ring, const ClassificationCore& core) {
    Json out;
    out["wrt"] = torsion_label(ring, core.torsion);
    out["grade"] = *core.profile.grade();
    out["cd"] = *core.profile.cd();
    out["relatively_unmixed"] = core.relatively_unmixed;
    out["cm"] = core.cm;
    out["seq_cm"] = core.seq_cm;
    out["approx_cm"] = core.approx_cm;
    Json steps = Json::array();
    for (const SeqStep& step : core.steps) {
        Json s;
        s["i"] = step.index;
        s["required_grade"] = step.required;
        s["quotient_ideal"] = squarefree_ideal_json(step.quotient);
        s["grade"] = *step.profile.grade();
        s["ok"] = step.ok;
        steps.push_back(std::move(s));
    }
    out["seq_steps"] = std::move(steps);
    out["unmixed_ideal"] = squarefree_ideal_json(core.unmixed_ideal);
    out["unmixed_grade"] = *core.unmixed_profile.grade();
    out["unmixed_cd"] = *core.unmixed_profile.cd();
    return out;
}

} // namespace

std::string torsion_label(const RingSpec& ring, VarSet torsion) {
    if (torsion == ring.p_vars()) return "P";
    if (torsion == ring.q_vars()) return "Q";
    if (torsion == ring.all_vars()) return "m";
    std::string out;
    for (int v : torsion.members()) {
        if (!out.empty()) out += ",";
        out += ring.var_name(v);
    }
    return "{" + out + "}";
}

VarSet torsion_from_label(const RingSpec& ring, const std::string& label) {
    if (label == "P" || label == "p") return ring.p_vars();
    if (label == "Q" || label == "q") return ring.q_vars();
    if (label == "m" || label == "M") return ring.all_vars();
    throw InputError("torsion set must be one of P, Q, m (got '" + label + "')");
}

Json envelope(const std::string& command, const IdealDocument* input, Json parameters) {
    Json out;
    out["schema"] = kReportSchema;
    out["version"] = kToolVersion;
    out["command"] = command;
    if (input != nullptr) {
        Json in;
        if (!input->name.empty()) in["name"] = input->name;
        in["ring"] = ring_json(input->ring);
        in["generators"] = ideal_gens_json(*input);
        in["squarefree"] = input->squarefree;
        out["input"] = std::move(in);
    }
    out["parameters"] = std::move(parameters);
    return out;
}

Json profile_json(const RingSpec& ring, const CohomologyProfile& profile) {
    Json out;
    out["wrt"] = torsion_label(ring, profile.torsion);
    out["char"] = profile.field.characteristic;
    out["zero_module"] = profile.zero_module;
    Json indices = Json::array();
    for (std::size_t i = 0; i < profile.nonvanishing.size(); ++i) {
        Json entry;
        entry["i"] = int(i);
        entry["nonvanishing"] = bool(profile.nonvanishing[i]);
        if (profile.witnesses[i]) entry["witness"] = profile.witnesses[i]->to_string(ring);
        indices.push_back(std::move(entry));
    }
    out["indices"] = std::move(indices);
    if (profile.zero_module) {
        out["grade"] = nullptr;
        out["cd"] = nullptr;
    } else {
        out["grade"] = *profile.grade();
        out["cd"] = *profile.cd();
        if (profile.torsion == ring.all_vars()) {
            out["depth"] = *profile.grade();
            out["dim"] = *profile.cd();
        }
    }
    return out;
}

Json filtration_json(const FiltrationResult& filtration) {
    const RingSpec& ring = filtration.base.ring();
    Json out;
    out["wrt"] = torsion_label(ring, filtration.torsion);
    out["r"] = filtration.r;
    out["q"] = filtration.q;
    Json layers = Json::array();
    for (int i = 1; i <= filtration.r; ++i) {
        Json layer;
        layer["i"] = i;
        layer["cd"] = filtration.q[std::size_t(i - 1)];
        Json primes = Json::array();
        for (const MonomialPrime& p : filtration.groups[std::size_t(i - 1)])
            primes.push_back(prime_json(p));
        layer["primes"] = std::move(primes);
        layer["ideal"] = squarefree_ideal_json(filtration.ideals[std::size_t(i)]);
        layers.push_back(std::move(layer));
    }
    out["layers"] = std::move(layers);
    out["unmixed_ideal"] = squarefree_ideal_json(filtration.ideals[std::size_t(filtration.r - 1)]);
    return out;
}

Json classification_json(const RingSpec& ring, const ClassificationReport& report) {
    Json out;
    out["char"] = report.field.characteristic;
    out["relative"] = core_json(ring, report.relative);
    Json classical;
    classical["cm"] = report.classical.cm;
    classical["seq_cm"] = report.classical.seq_cm;
    classical["approx_cm"] = report.classical.approx_cm;
    classical["depth"] = *report.classical.profile.grade();
    classical["dim"] = *report.classical.profile.cd();
    out["classical"] = std::move(classical);
    return out;
}

Json invariant_json(const CmInvariantReport& report) {
    Json out;
    out["declined"] = report.declined;
    if (report.declined) {
        out["reason"] = report.reason;
        out["depth"] = report.depth;
        out["dim"] = report.dim;
        return out;
    }
    out["depth"] = report.depth;
    out["dim"] = report.dim;
    out["r"] = report.r;
    out["grade_q"] = report.grade_q;
    out["cd_q"] = report.cd_q;
    out["cd_p"] = report.cd_p;
    out["product_identity"] = report.product_identity;
    out["full_q_interval"] = report.full_q_interval;
    Json lines = Json::array();
    for (const InvariantLine& line : report.lines) {
        Json l;
        l["check"] = line.check;
        if (line.index > 0) l["i"] = line.index;
        l["lhs"] = line.lhs;
        l["rhs"] = line.rhs;
        l["ok"] = line.ok;
        lines.push_back(std::move(l));
    }
    out["lines"] = std::move(lines);
    return out;
}

Json search_json(const SearchResult& result) {
    Json out;
    out["max_x"] = result.options.max_x;
    out["max_y"] = result.options.max_y;
    out["budget"] = result.options.budget;
    out["char"] = result.options.field.characteristic;
    out["seed"] = result.options.seed;
    out["exhaustive"] = result.exhaustive;
    out["scanned"] = result.scanned;
    out["cm"] = result.cm_count;
    out["qualifying"] = result.qualifying;
    out["max_q_spread"] = result.max_q_spread;

    auto finding_json = [](const SearchFinding& f) {
        Json j;
        j["ring"] = ring_json(f.ideal.ring());
        j["ideal"] = squarefree_ideal_json(f.ideal);
        j["grade_q"] = f.grade_q;
        j["cd_q"] = f.cd_q;
        j["grade_p"] = f.grade_p;
        j["cd_p"] = f.cd_p;
        return j;
    };
    Json cx = Json::array();
    for (const SearchFinding& f : result.counterexamples) cx.push_back(finding_json(f));
    out["counterexamples"] = std::move(cx);
    Json notable = Json::array();
    for (const SearchFinding& f : result.notable) notable.push_back(finding_json(f));
    out["notable"] = std::move(notable);
    out["message"] = result.counterexamples.empty()
                         ? "no counterexample in search space"
                         : "counterexample candidates found";
    return out;
}

Json examples_json() {
    Json out = Json::array();
    for (const BuiltinExample& ex : builtin_examples()) {
        Json j;
        j["name"] = ex.document.name;
        j["ring"] = ring_json(ex.document.ring);
        j["generators"] = ideal_gens_json(ex.document);
        j["squarefree"] = ex.document.squarefree;
        j["char"] = ex.document.characteristics;
        j["note"] = ex.note;
        out.push_back(std::move(j));
    }
    return out;
}

// ==== human rendering ====

namespace {

void render_profile(std::ostringstream& out, const Json& r) {
    if (r["zero_module"].get<bool>()) {
        out << "zero module: grade and cd undefined\n";
        return;
    }
    out << "H^i nonvanishing (wrt " << r["wrt"].get<std::string>() << ", char "
        << r["char"].get<int>() << "):\n";
    for (const Json& e : r["indices"]) {
        out << "  i=" << e["i"].get<int>() << "  "
            << (e["nonvanishing"].get<bool>() ? "nonzero" : "zero");
        if (e.contains("witness")) out << "  witness degree " << e["witness"].get<std::string>();
        out << "\n";
    }
    out << "grade = " << r["grade"].get<int>() << ", cd = " << r["cd"].get<int>() << "\n";
    if (r.contains("depth"))
        out << "depth = " << r["depth"].get<int>() << ", dim = " << r["dim"].get<int>() << "\n";
}

void render_filtration(std::ostringstream& out, const Json& r) {
    out << "dimension filtration wrt " << r["wrt"].get<std::string>() << ": r = "
        << r["r"].get<int>() << "\n";
    for (const Json& layer : r["layers"]) {
        out << "  layer " << layer["i"].get<int>() << " (cd " << layer["cd"].get<int>() << "): ";
        bool first = true;
        for (const Json& p : layer["primes"]) {
            if (!first) out << ", ";
            out << "(";
            for (std::size_t i = 0; i < p.size(); ++i)
                out << (i ? "," : "") << p[i].get<std::string>();
            out << ")";
            first = false;
        }
        out << "\n    ideal: (";
        const Json& gens = layer["ideal"];
        for (std::size_t i = 0; i < gens.size(); ++i)
            out << (i ? ", " : "") << gens[i].get<std::string>();
        out << ")\n";
    }
}

void render_core(std::ostringstream& out, const Json& c) {
    out << "wrt " << c["wrt"].get<std::string>() << ": grade = " << c["grade"].get<int>()
        << ", cd = " << c["cd"].get<int>() << "\n";
    out << "  cm: " << (c["cm"].get<bool>() ? "yes" : "no")
        << "   seq_cm: " << (c["seq_cm"].get<bool>() ? "yes" : "no")
        << "   approx_cm: " << (c["approx_cm"].get<bool>() ? "yes" : "no")
        << "   relatively unmixed: " << (c["relatively_unmixed"].get<bool>() ? "yes" : "no")
        << "\n";
    out << "  grade certificates:";
    for (const Json& s : c["seq_steps"])
        out << " [i=" << s["i"].get<int>() << " grade " << s["grade"].get<int>() << ", needs "
            << s["required_grade"].get<int>() << (s["ok"].get<bool>() ? ", ok" : ", fail") << "]";
    out << "\n";
}

void render_classify(std::ostringstream& out, const Json& r) {
    render_core(out, r["relative"]);
    const Json& c = r["classical"];
    out << "classical (wrt m): depth = " << c["depth"].get<int>() << ", dim = "
        << c["dim"].get<int>() << ", cm: " << (c["cm"].get<bool>() ? "yes" : "no")
        << ", seq_cm: " << (c["seq_cm"].get<bool>() ? "yes" : "no")
        << ", approx_cm: " << (c["approx_cm"].get<bool>() ? "yes" : "no") << "\n";
}

void render_invariants(std::ostringstream& out, const Json& r) {
    if (r["declined"].get<bool>()) {
        out << "declined: " << r["reason"].get<std::string>() << "\n";
        return;
    }
    out << "depth = dim = " << r["dim"].get<int>() << ", filtration length r = "
        << r["r"].get<int>() << "\n";
    out << "grade_q = " << r["grade_q"].get<int>() << ", cd_q = " << r["cd_q"].get<int>()
        << ", cd_p = " << r["cd_p"].get<int>() << "\n";
    for (const Json& line : r["lines"]) {
        out << "  " << line["check"].get<std::string>();
        if (line.contains("i")) out << " [layer " << line["i"].get<int>() << "]";
        out << ": " << line["lhs"].get<long>() << " vs " << line["rhs"].get<long>()
            << (line["ok"].get<bool>() ? " ok" : " FAIL") << "\n";
    }
}

void render_search(std::ostringstream& out, const Json& r) {
    out << "scanned " << r["scanned"].get<std::uint64_t>() << " ideals ("
        << (r["exhaustive"].get<bool>() ? "exhaustive" : "sampled") << ", seed "
        << r["seed"].get<std::uint64_t>() << "), cm " << r["cm"].get<std::uint64_t>()
        << ", qualifying " << r["qualifying"].get<std::uint64_t>() << "\n";
    out << "max y-block spread among qualifying: " << r["max_q_spread"].get<int>() << "\n";
    for (const Json& f : r["notable"]) {
        out << "  notable: ring (" << f["ring"]["m"].get<int>() << "," << f["ring"]["n"].get<int>()
            << ") ideal (";
        const Json& gens = f["ideal"];
        for (std::size_t i = 0; i < gens.size(); ++i)
            out << (i ? ", " : "") << gens[i].get<std::string>();
        out << ") with y-interval [" << f["grade_q"].get<int>() << "," << f["cd_q"].get<int>()
            << "]\n";
    }
    out << "counterexamples: " << r["counterexamples"].size() << "\n";
    out << r["message"].get<std::string>() << "\n";
}

void render_examples(std::ostringstream& out, const Json& r) {
    for (const Json& ex : r) {
        out << ex["name"].get<std::string>() << "  ring (" << ex["ring"]["m"].get<int>() << ","
            << ex["ring"]["n"].get<int>() << "), " << ex["generators"].size()
            << " generators: " << ex["note"].get<std::string>() << "\n";
    }
}

} // namespace

std::string render_human(const Json& report) {
    std::ostringstream out;
    const std::string command = report["command"].get<std::string>();
    if (report.contains("input")) {
        const Json& in = report["input"];
        out << "ideal";
        if (in.contains("name")) out << " " << in["name"].get<std::string>();
        out << " in ring (" << in["ring"]["m"].get<int>() << "," << in["ring"]["n"].get<int>()
            << ") with " << in["generators"].size() << " generators\n";
    }
    const Json& r = report["result"];
    if (command == "profile") render_profile(out, r);
    else if (command == "filtration") render_filtration(out, r);
    else if (command == "classify") render_classify(out, r);
    else if (command == "invariants") render_invariants(out, r);
    else if (command == "search") render_search(out, r);
    else if (command == "examples") render_examples(out, r);
    return out.str();
}

} // namespace seqcm
