#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpair/corpus.hpp"
#include "hpair/equation.hpp"
#include "hpair/geometry.hpp"
#include "hpair/io.hpp"
#include "hpair/young.hpp"

namespace {

using namespace hpair;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitSemantic = 2;

struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        writeTextFile(outPath, text);
    }
}

nlohmann::json parseJsonText(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseFailure(std::string("bad JSON: ") + e.what());
    }
}

HPair loadHPair(const std::string& path, uint64_t* hashOut) {
    std::string text = readTextFile(path);
    if (hashOut) *hashOut = fnv1a64(text);
    HPair h = hpairFromJson(parseJsonText(text));
    ValidationReport algebraCheck = validateAlgebra(h.algebra);
    ValidationReport pairCheck = algebraCheck.ok ? validateHPair(h) : algebraCheck;
    if (!pairCheck.ok) {
        std::ostringstream os;
        os << "invalid H-pair:";
        for (const auto& issue : pairCheck.issues) os << "\n  - " << issue;
        throw SemanticError(os.str());
    }
    return h;
}

std::pair<YoungDiagram, BData> loadDiagram(const std::string& path, uint64_t* hashOut) {
    std::string text = readTextFile(path);
    if (hashOut) *hashOut = fnv1a64(text);
    return diagramFromJson(parseJsonText(text));
}

int cmdAnalyze(const std::string& file, const std::string& format, const std::string& out) {
    uint64_t hash = 0;
    HPair h = loadHPair(file, &hash);
    AnalysisReport r = analyzePair(h, hash, "hpair");
    emit(format == "json" ? analysisToJson(r).dump(2) : renderAnalysisText(r), out);
    return kExitOk;
}

std::string renderCells(const std::vector<Cell>& cells) {
    std::ostringstream os;
    for (size_t i = 0; i < cells.size(); ++i) {
        os << (i ? " " : "") << "(";
        for (size_t j = 0; j < cells[i].size(); ++j) os << (j ? "," : "") << cells[i][j];
        os << ")";
    }
    return os.str();
}

int cmdYoungInfo(const std::string& file, const std::string& format, const std::string& out,
                 size_t budget) {
    auto [diag, b] = loadDiagram(file, nullptr);
    std::vector<Cell> cells = diagramCells(diag, budget);
    std::vector<Cell> pre = precornerCells(diag, budget);
    std::vector<int> exc = exceptionalCoords(diag, budget);
    MatrixQ sys = gorensteinSystem(diag, b, budget);
    size_t nullity = nullspace(sys).dim();

    if (format == "json") {
        nlohmann::ordered_json j;
        j["k"] = diag.k;
        j["cellCount"] = cells.size();
        j["corners"] = diag.corners;
        j["precorners"] = pre;
        nlohmann::ordered_json excJ = nlohmann::ordered_json::array();
        for (int i : exc) excJ.push_back(i + 1);
        j["exceptionalCoords"] = std::move(excJ);
        j["gorensteinSystemRank"] = rank(sys);
        j["gorensteinSystemNullity"] = nullity;
        emit(j.dump(2), out);
    } else {
        std::ostringstream os;
        os << "k: " << diag.k << "\n";
        os << "cells: " << cells.size() << "\n";
        os << "corners: " << renderCells(diag.corners) << "\n";
        os << "precorners: " << renderCells(pre) << "\n";
        os << "exceptional coords:";
        if (exc.empty()) os << " none";
        for (int i : exc) os << " " << i + 1;
        os << "\n";
        os << "gorenstein system: rank " << rank(sys) << ", nullity " << nullity << "\n";
        emit(os.str(), out);
    }
    return kExitOk;
}

int cmdYoungBuild(const std::string& file, const std::string& out, size_t budget) {
    auto [diag, b] = loadDiagram(file, nullptr);
    HPair h = buildHPair(diag, b, budget);
    emit(hpairToJson(h).dump(2), out);
    return kExitOk;
}

int cmdPrescribeBoundary(const std::string& file, const std::string& format,
                         const std::string& out) {
    std::string text = readTextFile(file);
    uint64_t hash = fnv1a64(text);
    MultiPoly g = readPolynomialFile(file);

    SimplexFamily fam = familySimplexFromPolynomial(g);
    HPair full = buildHPair(fam.diagram, fam.b);
    Subspace j = reductionIdeal(full);
    HPair reduced = quotientHPair(full, j);

    HypersurfaceReport fullEq = hypersurfaceEquation(full);
    AnalysisReport r = analyzePair(reduced, hash, "polynomial");
    size_t apex = full.algebra.dim - essentialVariableCount(fullEq.f);

    MultiPoly want = canonical(embedPoly(g, r.fd.vars()));
    bool match = want == r.fd;

    if (format == "json") {
        nlohmann::ordered_json jj = analysisToJson(r);
        jj["boundaryMatchesInput"] = match;
        jj["n"] = r.dim - 1;
        jj["unreducedApexDim"] = apex;
        emit(jj.dump(2), out);
    } else {
        std::ostringstream os;
        os << renderAnalysisText(r);
        os << "n: " << r.dim - 1 << "\n";
        os << "unreduced apex dim: " << apex << "\n";
        os << "boundary matches input: " << (match ? "yes" : "no") << "\n";
        emit(os.str(), out);
    }
    return match ? kExitOk : kExitSemantic;
}

int cmdMaxdeg(int n, const std::string& format, const std::string& out) {
    if (n < 2) throw SemanticError("maxdeg: n must be at least 2");
    HPair h = familySegment(n);
    HypersurfaceReport eq = hypersurfaceEquation(h);
    GeometryVerdict v = isNormal(eq);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["d"] = eq.d;
        j["f"] = polyToJson(canonical(eq.f));
        j["f_text"] = renderPoly(canonical(eq.f));
        j["normal"] = v.normal;
        emit(j.dump(2), out);
    } else {
        std::ostringstream os;
        os << renderPoly(canonical(eq.f)) << "\n";
        os << "normal: " << (v.normal ? "yes" : "no") << "\n";
        emit(os.str(), out);
    }
    return kExitOk;
}

bool pipelineNormal(const HPair& h) {
    return isNormal(hypersurfaceEquation(h)).normal;
}

int cmdCorpus(const std::string& name, const std::string& out) {
    std::ostringstream os;
    bool ok = true;
    auto line = [&](const std::string& label, bool pass) {
        ok = ok && pass;
        os << (pass ? "pass" : "FAIL") << "  " << label << "\n";
    };

    if (name == "table1") {
        for (const auto& entry : gorensteinCatalogue()) {
            bool pass = validateAlgebra(entry.algebra).ok &&
                        entry.algebra.dim == entry.expectedDim && isGorenstein(entry.algebra);
            line("No. " + std::to_string(entry.number) + "  " + entry.presentation +
                     "  dim " + std::to_string(entry.expectedDim),
                 pass);
        }
    } else if (name == "figure2") {
        for (const auto& shape : twoCornerShapes()) {
            YoungDiagram diag = makeDiagram(2, shape.corners);
            bool pass = precornerCells(diag) == shape.precorners &&
                        shape.precorners.size() <= 2 &&
                        exceptionalCoords(diag).empty() != shape.exceptional;
            line("shape " + shape.label, pass);
        }
    } else if (name == "oracles") {
        for (int n = 2; n <= 8; ++n)
            line("segment n=" + std::to_string(n),
                 pipelineNormal(familySegment(n)) == segmentOracleNormal(n));
        for (int d1 = 2; d1 <= 6; ++d1)
            for (int d2 = 2; d2 <= d1; ++d2) {
                auto [diag, b] = familyRays({d1, d2});
                line("rays (" + std::to_string(d1) + "," + std::to_string(d2) + ")",
                     pipelineNormal(buildHPair(diag, b)) == raysOracleNormal({d1, d2}));
            }
        for (int d1 = 1; d1 <= 3; ++d1)
            for (int d2 = 1; d2 <= 3; ++d2) {
                auto [diag, b] = familyParallelepiped({d1, d2});
                line("box (" + std::to_string(d1) + "," + std::to_string(d2) + ")",
                     pipelineNormal(buildHPair(diag, b)) ==
                         parallelepipedOracleNormal({d1, d2}));
            }
    } else {
        throw ParseFailure("unknown corpus suite: " + name);
    }

    os << (ok ? "all passed" : "FAILURES present") << "\n";
    emit(os.str(), out);
    return ok ? kExitOk : kExitSemantic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for hypersurfaces with an induced additive action"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out;
    size_t budget = kDefaultCellBudget;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", out, "Write output to this path instead of stdout");
    app.add_option("--budget", budget, "Diagram cell budget")->capture_default_str();

    std::string analyzeFile;
    auto* analyze = app.add_subcommand("analyze", "Full pipeline report for an H-pair file");
    analyze->add_option("file", analyzeFile, "H-pair JSON file")->required();

    auto* young = app.add_subcommand("young", "Young diagram operations");
    young->require_subcommand(1);
    std::string youngInfoFile, youngBuildFile;
    auto* younginfo = young->add_subcommand("info", "Cells, corners, precorners, system rank");
    younginfo->add_option("file", youngInfoFile, "diagram JSON file")->required();
    auto* youngbuild = young->add_subcommand("build", "Emit the H-pair of a diagram");
    youngbuild->add_option("file", youngBuildFile, "diagram JSON file")->required();

    std::string polyFile;
    auto* prescribe =
        app.add_subcommand("prescribe-boundary", "Construct a pair with the given boundary");
    prescribe->add_option("file", polyFile, "polynomial file (JSON or text)")->required();

    int maxdegN = 0;
    auto* maxdeg = app.add_subcommand("maxdeg", "The unique degree-n hypersurface in P^n");
    maxdeg->add_option("n", maxdegN, "ambient dimension")->required();

    std::string corpusName;
    auto* corpus = app.add_subcommand("corpus", "Run a shipped regression suite");
    corpus->add_option("name", corpusName, "table1|figure2|oracles")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*analyze) return cmdAnalyze(analyzeFile, format, out);
        if (*younginfo) return cmdYoungInfo(youngInfoFile, format, out, budget);
        if (*youngbuild) return cmdYoungBuild(youngBuildFile, out, budget);
        if (*prescribe) return cmdPrescribeBoundary(polyFile, format, out);
        if (*maxdeg) return cmdMaxdeg(maxdegN, format, out);
        if (*corpus) return cmdCorpus(corpusName, out);
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
