// charvar: deformation invariants of character varieties of finitely
// presented groups. Subcommands: analyze, surface, cover, scan, pairing.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "charvar/input.hpp"
#include "charvar/report.hpp"
#include "charvar/smoothness.hpp"
#include "charvar/surfaces.hpp"

namespace {

using namespace charvar;

struct CommonOptions {
    double tol = 1e-9;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

RankPolicy policy_of(const CommonOptions& opt) {
    RankPolicy policy;
    policy.rel_tol = opt.tol;
    return policy;
}

void emit(const CommonOptions& opt, const std::string& content) {
    if (opt.out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write to '" + opt.out_path + "'");
    out << content;
}

int run_analyze(const std::string& path, const CommonOptions& opt) {
    const InputFile input = parse_input_path(path);
    const Representation rep = input.make_representation();
    const AnalysisReport report = build_analysis_report(rep, policy_of(opt), opt.seed);
    if (opt.format == "json") emit(opt, dump_canonical(to_json(report)));
    else emit(opt, render_text(report));
    return 0;
}

int run_surface(int orientable_genus, int nonorientable_h, const std::string& group,
                const CommonOptions& opt) {
    if ((orientable_genus > 0) == (nonorientable_h > 0))
        throw CLI::ValidationError("surface",
                                   "give exactly one of --orientable or --nonorientable");
    const GroupSpec spec = GroupSpec::parse(group);
    const SurfaceKind kind = orientable_genus > 0
                                 ? SurfaceKind::orientable_genus(orientable_genus)
                                 : SurfaceKind::non_orientable(nonorientable_h);
    const Presentation p = canonical_presentation(kind);
    const int dimension = expected_dimension(spec, kind);

    if (opt.format == "json") {
        Json out;
        out["schema_version"] = kSchemaVersion;
        Json tool;
        tool["name"] = kToolName;
        tool["version"] = kToolVersion;
        tool["tolerance"] = opt.tol;
        out["tool"] = tool;
        out["group"] = spec.to_string();
        out["orientable"] = kind.orientable;
        out["genus_or_crosscaps"] = kind.genus_or_crosscaps;
        Json pres;
        pres["generators"] = p.generator_names;
        Json relators = Json::array();
        for (const FreeWord& r : p.relators) relators.push_back(r.to_string(p.generator_names));
        pres["relators"] = relators;
        out["presentation"] = pres;
        out["expected_dimension"] = dimension;
        emit(opt, dump_canonical(out));
        return 0;
    }
    std::string text = "gens";
    for (const std::string& g : p.generator_names) text += " " + g;
    text += "\n";
    for (const FreeWord& r : p.relators) text += "rel " + r.to_string(p.generator_names) + "\n";
    text += "expected dimension of the smooth locus: " + std::to_string(dimension) + "\n";
    emit(opt, text);
    return 0;
}

int run_cover(const std::string& path, const CommonOptions& opt) {
    const InputFile input = parse_input_path(path);
    const Representation rep = input.make_representation();
    const RankPolicy policy = policy_of(opt);
    const CoverReport cover = orientation_double_cover(rep, policy);
    const LagrangianReport lagrangian = lagrangian_check(rep, input.embeddings, policy);
    if (opt.format == "json")
        emit(opt, dump_canonical(to_json(cover, &lagrangian, opt.tol)));
    else
        emit(opt, render_text(cover, &lagrangian));
    return 0;
}

int run_scan(const std::string& path, const CommonOptions& opt) {
    const InputFile input = parse_input_path(path);
    const FamilySpec family = input.make_family();
    const FamilyScan scan = scan_family(family, policy_of(opt));
    if (opt.format == "json") emit(opt, dump_canonical(to_json(scan, opt.tol)));
    else if (opt.format == "csv") emit(opt, render_csv(scan));
    else emit(opt, render_text(scan));
    return 0;
}

int run_pairing(const std::string& path, bool gram, const CommonOptions& opt) {
    const InputFile input = parse_input_path(path);
    const Representation rep = input.make_representation();
    const RankPolicy policy = policy_of(opt);
    const ValidationReport valid = validate_representation(rep, policy.rel_tol);
    if (!valid.ok) throw ValidationError("invalid representation: " + valid.message);

    Json out;
    out["schema_version"] = kSchemaVersion;
    Json tool;
    tool["name"] = kToolName;
    tool["version"] = kToolVersion;
    tool["tolerance"] = opt.tol;
    out["tool"] = tool;
    std::string text;
    if (gram) {
        const CupGram result = cup_pairing_gram(rep, policy);
        out["h1_dim"] = static_cast<std::int64_t>(result.gram.rows());
        out["gram_rank"] = static_cast<std::int64_t>(result.rank.rank);
        Json rows = Json::array();
        for (Index i = 0; i < result.gram.rows(); ++i) {
            Json row = Json::array();
            for (Index j = 0; j < result.gram.cols(); ++j)
                row.push_back(Json::array({result.gram(i, j).real(), result.gram(i, j).imag()}));
            rows.push_back(row);
        }
        out["gram"] = rows;
        text = "h1 dimension: " + std::to_string(result.gram.rows()) + "\n" +
               "pairing Gram rank: " + std::to_string(result.rank.rank) + "\n";
    } else {
        if (!input.has_cocycle(1) || !input.has_cocycle(2))
            throw std::invalid_argument(
                "pairing needs two 'cocycle' sections (or use --gram)");
        const Cocycle alpha = input.make_cocycle(1, rep);
        const Cocycle beta = input.make_cocycle(2, rep);
        const Complex value = cup_pairing(rep, alpha, beta);
        out["pairing"] = Json::array({value.real(), value.imag()});
        text = "pairing value: " + format_double(value.real()) + " + " +
               format_double(value.imag()) + "i\n";
    }
    if (opt.format == "json") emit(opt, dump_canonical(out));
    else emit(opt, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformation invariants of character varieties"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions opt;
    std::uint64_t seed_value = 0;
    app.add_option("--tol", opt.tol, "relative rank/validation tolerance")
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format: text, json (scan also: csv)")
        ->capture_default_str();
    auto* seed_opt =
        app.add_option("--seed", seed_value, "seed echoed into report metadata");
    app.add_option("--out", opt.out_path, "write the report to a file instead of stdout");

    std::string analyze_file, cover_file, scan_file, pairing_file;
    auto* analyze = app.add_subcommand("analyze", "cohomology and smoothness report");
    analyze->add_option("file", analyze_file, "input file")->required();

    int orientable_genus = 0, nonorientable_h = 0;
    std::string group = "SL(2,C)";
    auto* surface =
        app.add_subcommand("surface", "canonical presentation and expected dimension");
    surface->add_option("--orientable", orientable_genus, "orientable genus g > 1");
    surface->add_option("--nonorientable", nonorientable_h, "cross-cap count h > 2");
    surface->add_option("--group", group, "matrix group")->capture_default_str();

    auto* cover = app.add_subcommand("cover", "orientation double cover invariants");
    cover->add_option("file", cover_file, "input file")->required();

    auto* scan = app.add_subcommand("scan", "Betti numbers along a one-parameter family");
    scan->add_option("file", scan_file, "input file with a 'param' grid")->required();

    bool gram = false;
    auto* pairing = app.add_subcommand("pairing", "cup-product pairing of cocycles");
    pairing->add_option("file", pairing_file, "input file")->required();
    pairing->add_flag("--gram", gram, "Gram rank of the pairing on H1 representatives");

    try {
        app.parse(argc, argv);
        if (seed_opt->count() > 0) opt.seed = seed_value;
        if (opt.format != "text" && opt.format != "json" && opt.format != "csv")
            throw std::invalid_argument("unknown --format '" + opt.format + "'");
        if (analyze->parsed()) return run_analyze(analyze_file, opt);
        if (surface->parsed())
            return run_surface(orientable_genus, nonorientable_h, group, opt);
        if (cover->parsed()) return run_cover(cover_file, opt);
        if (scan->parsed()) return run_scan(scan_file, opt);
        if (pairing->parsed()) return run_pairing(pairing_file, gram, opt);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const charvar::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const charvar::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
