#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "charvar/cohomology.hpp"
#include "charvar/smoothness.hpp"
#include "charvar/surfaces.hpp"

namespace charvar {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "charvar";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

/// Everything the analyze command reports for one representation.
struct AnalysisReport {
    double tolerance = 1e-9;
    std::optional<std::uint64_t> seed;

    std::vector<std::string> generators;
    std::vector<std::string> relators;
    std::string group;
    std::string matrix_digest;

    CohomologyReport cohomology;
    RelationModuleNote rank_note;
    Classification classification;
    std::vector<std::string> warnings;
};

AnalysisReport build_analysis_report(const Representation& rep, const RankPolicy& policy,
                                     std::optional<std::uint64_t> seed = std::nullopt);

Json to_json(const AnalysisReport& report);
Json to_json(const CoverReport& report, const LagrangianReport* lagrangian,
             double tolerance);
Json to_json(const FamilyScan& scan, double tolerance);

/// 17-significant-digit printing; the canonical float format of every
/// serialized report (round-trips doubles exactly).
std::string format_double(double value);

/// Deterministic JSON rendering: insertion-ordered keys, floats through
/// format_double, two-space indentation.  Byte-identical across runs and
/// stable under parse/re-serialize.
std::string dump_canonical(const Json& value, int indent = 0);

/// FNV-1a content digest of the generator matrices, for the input echo.
std::string matrix_digest(const Representation& rep);

/// Human-readable rendering of the analyze report.
std::string render_text(const AnalysisReport& report);

std::string render_text(const CoverReport& report, const LagrangianReport* lagrangian);

std::string render_text(const FamilyScan& scan);
std::string render_csv(const FamilyScan& scan);

} // namespace charvar
