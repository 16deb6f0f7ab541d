#ifndef HPAIR_IO_HPP
#define HPAIR_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hpair/algebra.hpp"
#include "hpair/equation.hpp"
#include "hpair/geometry.hpp"
#include "hpair/young.hpp"

namespace hpair {

// Malformed input (file missing, bad JSON, bad grammar). Distinct from
// std::invalid_argument, which signals semantic validation failures.
struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string readTextFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& content);
uint64_t fnv1a64(const std::string& data);

// H-pair file: { "dim", "labels", "table": [[i, j, [[k, "p/q"], ...]], ...]
// with only i <= j stored (symmetry implied), "U": [rows over the m-basis],
// "w": [coordinates] }. All rationals are strings.
nlohmann::ordered_json hpairToJson(const HPair& h);
HPair hpairFromJson(const nlohmann::json& j);

// Diagram file: { "k", "corners": [[...], ...], "b": { "(3,1)": "1", ... } }.
nlohmann::ordered_json diagramToJson(const YoungDiagram& d, const BData& b);
std::pair<YoungDiagram, BData> diagramFromJson(const nlohmann::json& j);

// Polynomial file: { "vars": [...], "terms": [{ "exps": [...], "coeff": "p/q" }] }.
nlohmann::ordered_json polyToJson(const MultiPoly& f);
MultiPoly polyFromJson(const nlohmann::json& j);

// Reads either the JSON polynomial format or plain text in the poly
// grammar; for text the variables are inferred from the z<index> names
// that occur (z1..zmax, or z0..zmax when z0 appears).
MultiPoly readPolynomialFile(const std::string& path);

// Full pipeline summary of one H-pair.
struct AnalysisReport {
    uint64_t inputHash = 0;
    std::string inputKind;  // "hpair", "diagram", ...
    size_t dim = 0;
    size_t d = 0;
    MultiPoly f;      // canonical equation
    MultiPoly fd;     // canonical boundary layer
    MultiPoly fdm1;   // canonical layer d-1
    bool normal = false;
    MultiPoly witness;
    size_t essentialCount = 0;
    bool gorenstein = false;
    size_t reductionIdealDim = 0;
    size_t reducedDim = 0;
};

AnalysisReport analyzePair(const HPair& h, uint64_t inputHash, std::string inputKind);
std::string renderAnalysisText(const AnalysisReport& r);
nlohmann::ordered_json analysisToJson(const AnalysisReport& r);

}  // namespace hpair

#endif
