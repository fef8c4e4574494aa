#include "charvar/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace charvar {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

Json json_complex(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json json_vector(const Vector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(json_complex(v(i)));
    return out;
}

Json json_basis(const Matrix& columns) {
    Json out = Json::array();
    for (Index c = 0; c < columns.cols(); ++c) out.push_back(json_vector(columns.col(c)));
    return out;
}

Json json_rank_decision(const RankResult& r) {
    Json out;
    out["rank"] = static_cast<std::int64_t>(r.rank);
    out["sigma_max"] = r.sigma_max;
    out["smallest_kept"] = r.smallest_kept;
    out["largest_dropped"] = r.largest_dropped;
    if (std::isfinite(r.gap_ratio)) out["gap_ratio"] = r.gap_ratio;
    else out["gap_ratio"] = nullptr;
    out["gap_warning"] = r.gap_warning;
    return out;
}

void escape_json_string(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void dump_value(const Json& value, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (value.type()) {
        case Json::value_t::null: out += "null"; break;
        case Json::value_t::boolean: out += value.get<bool>() ? "true" : "false"; break;
        case Json::value_t::number_integer:
            out += std::to_string(value.get<std::int64_t>());
            break;
        case Json::value_t::number_unsigned:
            out += std::to_string(value.get<std::uint64_t>());
            break;
        case Json::value_t::number_float: out += format_double(value.get<double>()); break;
        case Json::value_t::string: escape_json_string(value.get<std::string>(), out); break;
        case Json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                out += pad_in;
                dump_value(value[i], depth + 1, out);
                if (i + 1 < value.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            break;
        }
        case Json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = value.begin(); it != value.end(); ++it, ++i) {
                out += pad_in;
                escape_json_string(it.key(), out);
                out += ": ";
                dump_value(it.value(), depth + 1, out);
                if (i + 1 < value.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            break;
        }
        default: out += "null";
    }
}

} // namespace

std::string dump_canonical(const Json& value, int indent) {
    std::string out;
    dump_value(value, indent, out);
    out += '\n';
    return out;
}

std::string matrix_digest(const Representation& rep) {
    std::uint64_t hash = 1469598103934665603ull; // FNV-1a
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            hash ^= c;
            hash *= 1099511628211ull;
        }
    };
    for (const Matrix& g : rep.images())
        for (Index j = 0; j < g.cols(); ++j)
            for (Index i = 0; i < g.rows(); ++i) {
                feed(format_double(g(i, j).real()));
                feed(",");
                feed(format_double(g(i, j).imag()));
                feed(";");
            }
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%016" PRIx64, hash);
    return buffer;
}

AnalysisReport build_analysis_report(const Representation& rep, const RankPolicy& policy,
                                     std::optional<std::uint64_t> seed) {
    AnalysisReport report;
    report.tolerance = policy.rel_tol;
    report.seed = seed;
    report.generators = rep.presentation().generator_names;
    for (const FreeWord& r : rep.presentation().relators)
        report.relators.push_back(r.to_string(rep.presentation().generator_names));
    report.group = rep.spec().to_string();
    report.matrix_digest = matrix_digest(rep);

    report.cohomology = cohomology_report(rep, policy);
    report.rank_note = relation_module_report(rep, policy);
    report.classification = classify(rep, report.cohomology, policy);

    if (report.cohomology.d1_decision.gap_warning)
        report.warnings.push_back("rank decision for d1 has a weak singular-value gap");
    if (report.cohomology.d2_decision.gap_warning)
        report.warnings.push_back("rank decision for d2 has a weak singular-value gap");
    if (report.cohomology.b2_status == B2Status::coker_bound)
        report.warnings.push_back(
            "multiple relators: reported b2 is the cokernel dimension of d2 and is only an "
            "upper bound for the second cohomology");
    if (rep.spec().kind == GroupKind::PSL)
        report.warnings.push_back(
            "PSL representation: images are unit-determinant representatives and relator "
            "images are validated up to the centre");
    return report;
}

Json to_json(const AnalysisReport& report) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    Json tool;
    tool["name"] = kToolName;
    tool["version"] = kToolVersion;
    tool["tolerance"] = report.tolerance;
    if (report.seed) tool["seed"] = *report.seed;
    else tool["seed"] = nullptr;
    out["tool"] = tool;

    Json input;
    input["group"] = report.group;
    input["generators"] = report.generators;
    input["relators"] = report.relators;
    input["matrix_digest"] = report.matrix_digest;
    out["input"] = input;

    const CohomologyReport& c = report.cohomology;
    Json cohomology;
    cohomology["b0"] = c.b0;
    cohomology["b1"] = c.b1;
    cohomology["b2"] = c.b2;
    cohomology["b2_status"] = to_string(c.b2_status);
    cohomology["rank_d1"] = static_cast<std::int64_t>(c.rank_d1);
    cohomology["rank_d2"] = static_cast<std::int64_t>(c.rank_d2);
    cohomology["z1_dim"] = c.z1_dim;
    Json gaps;
    gaps["d1"] = json_rank_decision(c.d1_decision);
    gaps["d2"] = json_rank_decision(c.d2_decision);
    cohomology["singular_gaps"] = gaps;
    cohomology["h0_basis"] = json_basis(c.h0_basis);
    cohomology["z1_basis"] = json_basis(c.z1_basis);
    cohomology["h2_basis"] = json_basis(c.h2_basis);
    out["cohomology"] = cohomology;

    Json rank_note;
    rank_note["rank_d2"] = static_cast<std::int64_t>(report.rank_note.rank_d2);
    if (report.rank_note.implied_hom_dim)
        rank_note["implied_hom_dim"] = *report.rank_note.implied_hom_dim;
    else
        rank_note["implied_hom_dim"] = nullptr;
    rank_note["hom_dim_bound"] = report.rank_note.hom_dim_bound;
    out["relation_module"] = rank_note;

    const Classification& cls = report.classification;
    Json classification;
    classification["simple"] = cls.simple;
    classification["reductive"] = cls.reductive;
    classification["irreducible"] = cls.irreducible;
    classification["stabilizer_dim"] = cls.stabilizer_dim;
    if (cls.projective_stabilizer_order)
        classification["projective_stabilizer_order"] = *cls.projective_stabilizer_order;
    else
        classification["projective_stabilizer_order"] = nullptr;
    classification["good"] = to_string(cls.good);
    classification["smooth_verdict"] = to_string(cls.smooth_verdict);
    classification["reason"] = cls.reason;
    Json reductivity;
    reductivity["algebra_dim"] = cls.reductivity.algebra_dim;
    reductivity["gram_rank"] = static_cast<std::int64_t>(cls.reductivity.gram_decision.rank);
    classification["reductivity_certificate"] = reductivity;
    out["classification"] = classification;

    out["warnings"] = report.warnings;
    return out;
}

Json to_json(const CoverReport& report, const LagrangianReport* lagrangian,
             double tolerance) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    Json tool;
    tool["name"] = kToolName;
    tool["version"] = kToolVersion;
    tool["tolerance"] = tolerance;
    out["tool"] = tool;
    Json cover;
    cover["h0_cover"] = report.h0_cover;
    cover["h1_cover"] = report.h1_cover;
    cover["h2_cover"] = report.h2_cover;
    cover["h0_base"] = report.h0_base;
    cover["h2_base"] = report.h2_base;
    cover["decomposition_ok"] = report.decomposition_ok;
    out["cover"] = cover;
    if (lagrangian != nullptr) {
        Json lag;
        lag["b1_base"] = lagrangian->b1_base;
        lag["h1_cover"] = lagrangian->h1_cover;
        lag["half_dimension_ok"] = lagrangian->half_dimension_ok;
        lag["embedding_checked"] = lagrangian->embedding_checked;
        if (lagrangian->embedding_checked) {
            lag["isotropy_residual"] = lagrangian->isotropy_residual;
            lag["isotropy_scale"] = lagrangian->isotropy_scale;
            lag["restricted_cocycle_residual"] = lagrangian->restricted_cocycle_residual;
        }
        out["lagrangian"] = lag;
    }
    return out;
}

Json to_json(const FamilyScan& scan, double tolerance) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    Json tool;
    tool["name"] = kToolName;
    tool["version"] = kToolVersion;
    tool["tolerance"] = tolerance;
    out["tool"] = tool;
    Json rows = Json::array();
    for (const FamilySample& s : scan.samples) {
        Json row;
        row["t"] = s.t;
        row["b0"] = s.b0;
        row["b1"] = s.b1;
        row["b2"] = s.b2;
        row["simple"] = s.simple;
        row["reductive"] = s.reductive;
        if (s.projective_stabilizer_order)
            row["projective_stabilizer_order"] = *s.projective_stabilizer_order;
        else
            row["projective_stabilizer_order"] = nullptr;
        row["jump"] = s.jump;
        row["gap_warning"] = s.gap_warning;
        rows.push_back(row);
    }
    out["samples"] = rows;
    Json jumps = Json::array();
    for (double t : scan.jump_parameters) jumps.push_back(t);
    out["jump_parameters"] = jumps;
    Json mode;
    mode["b0"] = scan.mode_b0;
    mode["b1"] = scan.mode_b1;
    mode["b2"] = scan.mode_b2;
    out["grid_mode"] = mode;
    return out;
}

std::string render_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "group:        " << report.group << "\n";
    out << "generators:  ";
    for (const std::string& g : report.generators) out << ' ' << g;
    out << "\nrelators:     " << report.relators.size() << "\n";
    for (const std::string& r : report.relators) out << "    " << r << "\n";
    const CohomologyReport& c = report.cohomology;
    out << "b0 = " << c.b0 << "   b1 = " << c.b1 << "   b2 = " << c.b2 << "   ("
        << to_string(c.b2_status) << ")\n";
    out << "rank d1 = " << c.rank_d1 << ", rank d2 = " << c.rank_d2
        << ", dim Z1 = " << c.z1_dim << "\n";
    if (report.rank_note.implied_hom_dim)
        out << "implied invariant Hom dimension of the relation module: "
            << *report.rank_note.implied_hom_dim << "\n";
    else
        out << "invariant Hom dimension of the relation module <= "
            << report.rank_note.hom_dim_bound << "\n";
    const Classification& cls = report.classification;
    out << "simple: " << (cls.simple ? "yes" : "no")
        << "   reductive: " << (cls.reductive ? "yes" : "no")
        << "   irreducible: " << (cls.irreducible ? "yes" : "no") << "\n";
    out << "stabilizer dimension: " << cls.stabilizer_dim;
    if (cls.projective_stabilizer_order)
        out << "   projective stabilizer order: " << *cls.projective_stabilizer_order;
    out << "\n";
    out << "good: " << to_string(cls.good)
        << "   smooth verdict: " << to_string(cls.smooth_verdict) << "\n";
    out << "  reason: " << cls.reason << "\n";
    for (const std::string& w : report.warnings) out << "warning: " << w << "\n";
    return out.str();
}

std::string render_text(const CoverReport& report, const LagrangianReport* lagrangian) {
    std::ostringstream out;
    out << "orientation double cover\n";
    out << "h0_cover = " << report.h0_cover << "   h1_cover = " << report.h1_cover
        << "   h2_cover = " << report.h2_cover << "\n";
    out << "base: h0 = " << report.h0_base << ", h2 = " << report.h2_base << "\n";
    out << "decomposition h0_cover = h0_base + h2_base: "
        << (report.decomposition_ok ? "ok" : "FAILED") << "\n";
    if (lagrangian != nullptr) {
        out << "half dimension b1_base = h1_cover/2: "
            << (lagrangian->half_dimension_ok ? "ok" : "FAILED") << " (" << lagrangian->b1_base
            << " vs " << lagrangian->h1_cover << "/2)\n";
        if (lagrangian->embedding_checked)
            out << "isotropy residual of the restricted basis: "
                << format_double(lagrangian->isotropy_residual)
                << "  (pairing scale " << format_double(lagrangian->isotropy_scale) << ")\n";
    }
    return out.str();
}

std::string render_text(const FamilyScan& scan) {
    std::ostringstream out;
    out << "t             b0  b1  b2  simple  reductive  stab  jump\n";
    for (const FamilySample& s : scan.samples) {
        char tbuf[32];
        std::snprintf(tbuf, sizeof(tbuf), "%-12g", s.t);
        out << tbuf << "  " << s.b0 << "   " << s.b1 << "   " << s.b2 << "   "
            << (s.simple ? "yes" : "no ") << "     " << (s.reductive ? "yes" : "no ") << "       ";
        if (s.projective_stabilizer_order) out << *s.projective_stabilizer_order;
        else out << "-";
        out << "     " << (s.jump ? "JUMP" : "-") << "\n";
    }
    out << "jumps at:";
    if (scan.jump_parameters.empty()) out << " none";
    for (double t : scan.jump_parameters) out << ' ' << t;
    out << "\n";
    return out.str();
}

std::string render_csv(const FamilyScan& scan) {
    std::ostringstream out;
    out << "t,b0,b1,b2,simple,reductive,warnings\n";
    for (const FamilySample& s : scan.samples) {
        out << format_double(s.t) << ',' << s.b0 << ',' << s.b1 << ',' << s.b2 << ','
            << (s.simple ? "true" : "false") << ',' << (s.reductive ? "true" : "false") << ',';
        std::string warnings;
        if (s.jump) warnings += "betti_jump";
        if (s.gap_warning) {
            if (!warnings.empty()) warnings += ';';
            warnings += "rank_gap";
        }
        out << warnings << "\n";
    }
    return out.str();
}

} // namespace charvar
