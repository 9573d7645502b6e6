#include "seqcm/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace seqcm {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw InputError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, std::size_t line, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        fail(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size() || value < 0)
        fail(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

constexpr int kMaxExponent = 60;

} // namespace

std::vector<std::vector<std::string>> IdealDocument::generator_tokens() const {
    std::vector<std::vector<std::string>> out;
    for (const ExpVec& g : ideal.gens()) {
        std::vector<std::string> mono;
        for (int v = 0; v < ring.var_count(); ++v) {
            if (g.e[v] == 0) continue;
            std::string tok = ring.var_name(v);
            if (g.e[v] > 1) tok += "^" + std::to_string(int(g.e[v]));
            mono.push_back(tok);
        }
        if (mono.empty()) mono.push_back("1");
        out.push_back(std::move(mono));
    }
    return out;
}

IdealDocument parse_ideal(const std::string& text) {
    IdealDocument doc;
    bool have_ring = false;
    std::vector<ExpVec> gens;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<std::string> toks = tokens_of(raw);
        if (toks.empty()) continue;
        const std::string& head = toks[0];

        if (head == "ring") {
            if (have_ring) fail(lineno, "duplicate ring declaration");
            if (toks.size() != 3) fail(lineno, "ring takes exactly two counts: ring M N");
            int m = parse_int(toks[1], lineno, "x-variable count");
            int n = parse_int(toks[2], lineno, "y-variable count");
            try {
                doc.ring = RingSpec(m, n);
            } catch (const InputError& e) {
                fail(lineno, e.what());
            }
            have_ring = true;
        } else if (head == "name") {
            if (toks.size() != 2) fail(lineno, "name takes exactly one identifier");
            for (char c : toks[1])
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
                    fail(lineno, "name may use letters, digits, '_' and '-' only");
            doc.name = toks[1];
        } else if (head == "char") {
            if (toks.size() < 2) fail(lineno, "char needs at least one value");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                int p = parse_int(toks[i], lineno, "characteristic");
                try {
                    FieldSpec check(p);
                } catch (const InputError& e) {
                    fail(lineno, e.what());
                }
                doc.characteristics.push_back(p);
            }
        } else if (head == "gen") {
            if (!have_ring) fail(lineno, "ring must be declared before generators");
            if (toks.size() < 2) fail(lineno, "generator needs at least one token");
            ExpVec mono;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const std::string& tok = toks[i];
                if (tok == "1") {
                    if (toks.size() != 2) fail(lineno, "the unit generator is the single token 1");
                    continue;
                }
                std::size_t caret = tok.find('^');
                std::string base = tok.substr(0, caret);
                int v = doc.ring.var_index(base);
                if (v < 0)
                    fail(lineno, "unknown variable '" + base + "' (ring has m=" +
                                     std::to_string(doc.ring.m) + ", n=" +
                                     std::to_string(doc.ring.n) + ")");
                int power = 1;
                if (caret != std::string::npos) {
                    std::string exp = tok.substr(caret + 1);
                    power = parse_int(exp, lineno, "exponent");
                    if (power < 1) fail(lineno, "exponent must be at least 1");
                }
                if (mono.e[v] + power > kMaxExponent)
                    fail(lineno, "exponent exceeds the supported bound " +
                                     std::to_string(kMaxExponent));
                mono.e[v] = std::int8_t(mono.e[v] + power);
            }
            gens.push_back(mono);
        } else {
            fail(lineno, "unknown directive '" + head + "'");
        }
    }

    if (!have_ring) throw InputError("document has no ring declaration");
    doc.ideal = GeneralMonomialIdeal(doc.ring, std::move(gens));
    doc.squarefree = doc.ideal.is_squarefree();
    return doc;
}

IdealDocument load_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal(buf.str());
}

std::string to_text(const IdealDocument& document) {
    std::ostringstream out;
    out << "ring " << document.ring.m << " " << document.ring.n << "\n";
    if (!document.name.empty()) out << "name " << document.name << "\n";
    if (!document.characteristics.empty()) {
        out << "char";
        for (int p : document.characteristics) out << " " << p;
        out << "\n";
    }
    for (const std::vector<std::string>& mono : document.generator_tokens()) {
        out << "gen";
        for (const std::string& tok : mono) out << " " << tok;
        out << "\n";
    }
    return out.str();
}

IdealDocument document_for(const GeneralMonomialIdeal& ideal, std::string name) {
    IdealDocument doc;
    doc.name = std::move(name);
    doc.ring = ideal.ring();
    doc.ideal = ideal;
    doc.squarefree = ideal.is_squarefree();
    return doc;
}

} // namespace seqcm
