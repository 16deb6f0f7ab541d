#include "hpair/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hpair {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string cellKey(const Cell& c) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << ")";
    return os.str();
}

Cell cellFromKey(const std::string& key) {
    if (key.size() < 2 || key.front() != '(' || key.back() != ')')
        throw ParseFailure("bad cell key: " + key);
    Cell c;
    std::string body = key.substr(1, key.size() - 2);
    std::istringstream is(body);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            c.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw ParseFailure("bad cell key: " + key);
        }
    }
    if (c.empty()) throw ParseFailure("bad cell key: " + key);
    return c;
}

Rational rationalFromJson(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseFailure(what + ": rationals must be strings \"p/q\"");
    try {
        return rationalFromString(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseFailure(what + ": " + e.what());
    }
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw ParseFailure(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

}  // namespace

std::string readTextFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseFailure("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeTextFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseFailure("cannot write file: " + path);
    out << content;
}

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ordered_json hpairToJson(const HPair& h) {
    ordered_json j;
    j["dim"] = h.algebra.dim;
    j["labels"] = h.algebra.labels;
    ordered_json table = ordered_json::array();
    for (size_t i = 0; i < h.algebra.dim; ++i)
        for (size_t k = i; k < h.algebra.dim; ++k) {
            ordered_json coords = ordered_json::array();
            const VectorQ& v = h.algebra.table[i][k];
            for (size_t s = 0; s < v.size(); ++s)
                if (v[s] != 0) coords.push_back({s, rationalToString(v[s])});
            if (!coords.empty()) table.push_back({i, k, std::move(coords)});
        }
    j["table"] = std::move(table);
    ordered_json u = ordered_json::array();
    for (const auto& row : h.hyperplane.basis) {
        ordered_json r = ordered_json::array();
        for (const auto& x : row) r.push_back(rationalToString(x));
        u.push_back(std::move(r));
    }
    j["U"] = std::move(u);
    ordered_json w = ordered_json::array();
    for (const auto& x : h.complementWitness) w.push_back(rationalToString(x));
    j["w"] = std::move(w);
    return j;
}

HPair hpairFromJson(const json& j) {
    HPair h;
    const json& dimJ = field(j, "dim");
    if (!dimJ.is_number_unsigned() || dimJ.get<size_t>() == 0)
        throw ParseFailure("\"dim\" must be a positive integer");
    size_t dim = dimJ.get<size_t>();
    h.algebra.dim = dim;

    const json& labels = field(j, "labels");
    if (!labels.is_array() || labels.size() != dim)
        throw ParseFailure("\"labels\" must list one name per basis vector");
    for (const auto& l : labels) {
        if (!l.is_string()) throw ParseFailure("labels must be strings");
        h.algebra.labels.push_back(l.get<std::string>());
    }

    h.algebra.table.assign(dim, std::vector<VectorQ>(dim, VectorQ(dim, Rational(0))));
    for (const auto& entry : field(j, "table")) {
        if (!entry.is_array() || entry.size() != 3)
            throw ParseFailure("table entries must be [i, j, coords]");
        size_t i = entry.at(0).get<size_t>(), k = entry.at(1).get<size_t>();
        if (i > k || k >= dim) throw ParseFailure("table entry indices out of range (need i <= j < dim)");
        VectorQ v(dim, Rational(0));
        for (const auto& pair : entry.at(2)) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseFailure("table coordinates must be [index, \"p/q\"] pairs");
            size_t s = pair.at(0).get<size_t>();
            if (s >= dim) throw ParseFailure("table coordinate index out of range");
            v[s] = rationalFromJson(pair.at(1), "table");
        }
        h.algebra.table[i][k] = v;
        h.algebra.table[k][i] = std::move(v);
    }

    h.hyperplane.ambientDim = dim - 1;
    for (const auto& row : field(j, "U")) {
        if (!row.is_array() || row.size() != dim - 1)
            throw ParseFailure("U rows must have dim-1 coordinates");
        VectorQ v;
        for (const auto& x : row) v.push_back(rationalFromJson(x, "U"));
        h.hyperplane.basis.push_back(std::move(v));
    }

    const json& w = field(j, "w");
    if (!w.is_array() || w.size() != dim - 1)
        throw ParseFailure("w must have dim-1 coordinates");
    for (const auto& x : w) h.complementWitness.push_back(rationalFromJson(x, "w"));
    return h;
}

ordered_json diagramToJson(const YoungDiagram& d, const BData& b) {
    ordered_json j;
    j["k"] = d.k;
    ordered_json corners = ordered_json::array();
    for (const auto& c : d.corners) corners.push_back(c);
    j["corners"] = std::move(corners);
    ordered_json bj = ordered_json::object();
    for (const auto& [cell, value] : b.values)
        if (value != 0) bj[cellKey(cell)] = rationalToString(value);
    j["b"] = std::move(bj);
    return j;
}

std::pair<YoungDiagram, BData> diagramFromJson(const json& j) {
    const json& kJ = field(j, "k");
    if (!kJ.is_number_integer()) throw ParseFailure("\"k\" must be an integer");
    int k = kJ.get<int>();
    std::vector<Cell> corners;
    for (const auto& c : field(j, "corners")) {
        if (!c.is_array()) throw ParseFailure("corners must be arrays of integers");
        corners.push_back(c.get<Cell>());
    }
    BData b;
    if (j.contains("b")) {
        const json& bj = j.at("b");
        if (!bj.is_object()) throw ParseFailure("\"b\" must map cell keys to rationals");
        for (const auto& [key, value] : bj.items()) {
            Cell c = cellFromKey(key);
            if (static_cast<int>(c.size()) != k)
                throw ParseFailure("b key " + key + " has wrong dimension");
            b.values[c] = rationalFromJson(value, "b");
        }
    }
    YoungDiagram d = makeDiagram(k, std::move(corners));
    for (const auto& [cell, value] : b.values)
        if (!isCorner(d, cell))
            throw std::invalid_argument("b assigns a value to non-corner cell " + cellKey(cell));
    return {std::move(d), std::move(b)};
}

ordered_json polyToJson(const MultiPoly& f) {
    ordered_json j;
    j["vars"] = f.vars();
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back({{"exps", m.exps}, {"coeff", rationalToString(c)}});
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly polyFromJson(const json& j) {
    const json& varsJ = field(j, "vars");
    if (!varsJ.is_array()) throw ParseFailure("\"vars\" must be an array of names");
    std::vector<std::string> vars = varsJ.get<std::vector<std::string>>();
    MultiPoly f(vars);
    for (const auto& t : field(j, "terms")) {
        const json& exps = field(t, "exps");
        if (!exps.is_array() || exps.size() != vars.size())
            throw ParseFailure("term exponent vectors must have one slot per variable");
        Monomial m{exps.get<std::vector<int>>()};
        for (int e : m.exps)
            if (e < 0) throw ParseFailure("negative exponent in term");
        f.addTerm(m, rationalFromJson(field(t, "coeff"), "terms"));
    }
    return f;
}

MultiPoly readPolynomialFile(const std::string& path) {
    std::string text = readTextFile(path);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseFailure(std::string("bad JSON: ") + e.what());
        }
        return polyFromJson(j);
    }
    // plain text: infer the variable list from the z<index> names used
    int maxIndex = -1;
    bool sawZ0 = false;
    for (size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != 'z' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
        size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        int idx = std::stoi(text.substr(i + 1, j - i - 1));
        maxIndex = std::max(maxIndex, idx);
        sawZ0 = sawZ0 || idx == 0;
        i = j - 1;
    }
    if (maxIndex < 0) throw ParseFailure("no variables z<index> found in polynomial text");
    std::vector<std::string> vars;
    for (int i = sawZ0 ? 0 : 1; i <= maxIndex; ++i) vars.push_back("z" + std::to_string(i));
    try {
        return parsePoly(text, vars);
    } catch (const PolyParseError& e) {
        throw ParseFailure(e.what());
    }
}

AnalysisReport analyzePair(const HPair& h, uint64_t inputHash, std::string inputKind) {
    AnalysisReport r;
    r.inputHash = inputHash;
    r.inputKind = std::move(inputKind);
    r.dim = h.algebra.dim;

    HypersurfaceReport eq = hypersurfaceEquation(h);
    r.d = eq.d;
    r.f = canonical(eq.f);
    r.fd = canonical(eq.boundary());
    r.fdm1 = canonical(eq.layer(eq.d - 1));

    GeometryVerdict v = isNormal(eq);
    r.normal = v.normal;
    r.witness = v.witness;
    r.essentialCount = essentialVariableCount(eq.f);
    r.gorenstein = isGorenstein(h.algebra);

    Subspace j = reductionIdeal(h);
    r.reductionIdealDim = j.dim();
    r.reducedDim = r.dim - j.dim();
    return r;
}

std::string renderAnalysisText(const AnalysisReport& r) {
    std::ostringstream os;
    os << "input: " << r.inputKind << " (fnv1a64 " << std::hex << r.inputHash << std::dec << ")\n";
    os << "dim A: " << r.dim << "\n";
    os << "degree d: " << r.d << "\n";
    os << "f = " << renderPoly(r.f) << "\n";
    os << "f_d = " << renderPoly(r.fd) << "\n";
    os << "f_{d-1} = " << renderPoly(r.fdm1) << "\n";
    os << "normal: " << (r.normal ? "yes" : "no") << "\n";
    if (!r.normal) os << "common factor: " << renderPoly(r.witness) << "\n";
    os << "essential variables of f: " << r.essentialCount << " of " << r.dim << "\n";
    os << "gorenstein: " << (r.gorenstein ? "yes" : "no") << "\n";
    os << "reduction ideal dim: " << r.reductionIdealDim << "\n";
    os << "reduced dim: " << r.reducedDim << "\n";
    return os.str();
}

ordered_json analysisToJson(const AnalysisReport& r) {
    ordered_json j;
    std::ostringstream hash;
    hash << std::hex << r.inputHash;
    j["input"] = {{"kind", r.inputKind}, {"fnv1a64", hash.str()}};
    j["dim"] = r.dim;
    j["d"] = r.d;
    j["f"] = polyToJson(r.f);
    j["f_text"] = renderPoly(r.f);
    j["fd"] = polyToJson(r.fd);
    j["fdm1"] = polyToJson(r.fdm1);
    j["normal"] = r.normal;
    if (!r.normal) j["witness"] = renderPoly(r.witness);
    j["essentialCount"] = r.essentialCount;
    j["gorenstein"] = r.gorenstein;
    j["reductionIdealDim"] = r.reductionIdealDim;
    j["reducedDim"] = r.reducedDim;
    return j;
}

}  // namespace hpair
