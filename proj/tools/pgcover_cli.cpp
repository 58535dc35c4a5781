// pgcover: constructions, cover analysis, and theorem verification for
// partial covers of PG(n,q). Every run is replayable: all randomness
// flows from --seed and the emitted recipe/report files carry the full
// parameter set.

#include "pgcover/constructions.hpp"
#include "pgcover/covers.hpp"
#include "pgcover/io.hpp"
#include "pgcover/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#ifdef _WIN32
#include <io.h>
#define PGCOVER_ISATTY _isatty(1)
#else
#include <unistd.h>
#define PGCOVER_ISATTY isatty(1)
#endif

namespace {

using namespace pgcover;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

struct FieldFlags {
    int n = 2;
    int p = 2;
    int h = 1;
    std::vector<int> modulus;
};

void add_field_flags(CLI::App* cmd, FieldFlags& f, bool with_n = true) {
    cmd->set_help_flag("--help", "print help"); // frees -h/--h for the field degree
    if (with_n) cmd->add_option("--n", f.n, "projective dimension")->required();
    cmd->add_option("--p", f.p, "field characteristic (prime)")->required();
    cmd->add_option("--h", f.h, "extension degree");
    cmd->add_option("--modulus", f.modulus,
                    "irreducible modulus coefficients c_0..c_h (default: "
                    "lexicographically smallest)");
}

Geometry build_geometry(const FieldFlags& f) {
    FieldSpec spec = f.modulus.empty()
                         ? FieldSpec::make(f.p, f.h)
                         : FieldSpec::make(f.p, f.h, f.modulus);
    return Geometry(f.n, std::move(spec));
}

uint64_t env_budget() {
    if (const char* e = std::getenv("PGCOVER_BUDGET")) return std::strtoull(e, nullptr, 10);
    return kDefaultBudget;
}

bool json_output(const std::string& format) {
    if (format == "json") return true;
    if (format == "text") return false;
    return !PGCOVER_ISATTY;
}

/// Human summary of where the holes sit.
std::string hole_summary(const Geometry& g, const PointSet& hs) {
    if (hs.pts.empty()) return "holes=0 (cover)";
    std::string s = "holes=" + std::to_string(hs.pts.size());
    if (g.n() == 2 && holes_collinear(g, hs)) return s + ", in one line";
    if (holes_in_common_hyperplane(g, hs)) return s + ", in one hyperplane";
    if (g.n() == 2 && hs.pts.size() >= 2) {
        // two-line check: fix the line through the first two holes, the
        // rest must be collinear or on that line
        for (size_t i = 1; i < hs.pts.size(); ++i) {
            std::vector<int> line = g.line_through(hs.pts[0], hs.pts[i]);
            std::vector<int> rest;
            for (int p : hs.pts)
                if (!std::binary_search(line.begin(), line.end(), p)) rest.push_back(p);
            if (rest.empty() || rest.size() == 1 ||
                holes_collinear(g, PointSet{rest}))
                return s + ", on two lines";
        }
    }
    return s + ", spanning";
}

void print_summary(const Geometry& g, const PartialCover& cover, bool as_json) {
    PointSet hs = holes(g, cover);
    if (as_json) {
        json j{{"size", cover.hyps.size()}, {"holes", hs.pts.size()}};
        if (!hs.pts.empty()) {
            j["collinear"] = g.n() == 2 ? holes_collinear(g, hs) : false;
            j["in_one_hyperplane"] = holes_in_common_hyperplane(g, hs).has_value();
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << hole_summary(g, hs) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"partial covers and blocking sets of PG(n,q)"};
    app.require_subcommand(1);

    std::string format = "auto";
    app.add_option("--format", format, "output format: json|text|auto")
        ->check(CLI::IsMember({"json", "text", "auto"}));

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build an extremal configuration");
    construct->require_subcommand(1);
    FieldFlags cf;
    int ca = 0;
    uint64_t cseed = 0;
    std::string cover_out, recipe_out;
    auto add_construct_common = [&](CLI::App* c, bool with_n, bool with_a) {
        add_field_flags(c, cf, with_n);
        if (with_a) c->add_option("--a", ca, "cover excess a")->required();
        c->add_option("--seed", cseed, "construction seed");
        c->add_option("-o,--output", cover_out, "cover file to write");
        c->add_option("--recipe", recipe_out, "recipe file to write");
    };
    auto* c_pencil = construct->add_subcommand("pencil", "the trivial cover");
    add_construct_common(c_pencil, true, false);
    auto* c_remark9 = construct->add_subcommand(
        "remark9", "sharp partial cover with q^{n-1} - a q^{n-2} holes");
    add_construct_common(c_remark9, true, true);
    auto* c_ex16 = construct->add_subcommand(
        "example16", "planar boundary configuration at a = (q-2)/3");
    add_construct_common(c_ex16, false, false);
    auto* c_gen16 = construct->add_subcommand(
        "gen16", "example16 structure with arbitrary a");
    add_construct_common(c_gen16, false, true);

    // ---- holes / reduce / dualize ----
    std::string in_path, out_path;
    auto* holes_cmd = app.add_subcommand("holes", "list the holes of a cover file");
    holes_cmd->add_option("-i,--input", in_path)->required();
    auto* reduce_cmd = app.add_subcommand("reduce", "unique minimal reduction");
    reduce_cmd->add_option("-i,--input", in_path)->required();
    reduce_cmd->add_option("-o,--output", out_path);
    auto* dualize_cmd = app.add_subcommand("dualize", "swap covers and point sets");
    dualize_cmd->add_option("-i,--input", in_path)->required();
    dualize_cmd->add_option("-o,--output", out_path);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "theorem checks");
    verify->require_subcommand(1);
    FieldFlags vf;
    int va = 0;
    std::string vmode = "exhaustive";
    uint64_t vsamples = 100000, vseed = 0, vbudget = env_budget();
    int vthreads = 0, vtrials = 200;
    std::string report_out, vinput;
    auto add_verify_scan_flags = [&](CLI::App* c) {
        add_field_flags(c, vf);
        c->add_option("--a", va, "cover excess a")->required();
        c->add_option("--mode", vmode, "exhaustive|sampled")
            ->check(CLI::IsMember({"exhaustive", "sampled"}));
        c->add_option("--samples", vsamples, "sample count in sampled mode");
        c->add_option("--seed", vseed);
        c->add_option("--budget", vbudget, "max subsets in exhaustive mode");
        c->add_option("--threads", vthreads, "0 = all cores");
        c->add_option("-o,--report", report_out, "report file to write");
    };
    auto* v_holes = verify->add_subcommand(
        "holes", "hole count and containment (Theorems 5/13/14/17)");
    add_verify_scan_flags(v_holes);
    auto* v_structure = verify->add_subcommand(
        "structure", "pencil decomposition for prime q (Corollaries 6/15)");
    add_verify_scan_flags(v_structure);
    auto* v_tangents = verify->add_subcommand(
        "tangents", "tangent-hyperplane lower bound (Theorem 7)");
    v_tangents->add_option("-i,--input", vinput, "blocking-set file")->required();
    v_tangents->add_option("-o,--report", report_out);
    auto* v_reduction = verify->add_subcommand(
        "reduction", "order-independence of minimal reduction (Results 1-2)");
    add_field_flags(v_reduction, vf);
    v_reduction->add_option("--trials", vtrials);
    v_reduction->add_option("--seed", vseed);
    v_reduction->add_option("-o,--report", report_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    bool as_json = json_output(format);
    bool text_files = format == "text";

    if (construct->parsed()) {
        std::string kind;
        if (c_pencil->parsed()) kind = "pencil";
        if (c_remark9->parsed()) kind = "remark9";
        if (c_ex16->parsed()) kind = "example16";
        if (c_gen16->parsed()) kind = "gen16";
        if (kind == "example16" || kind == "gen16") cf.n = 2;
        Geometry g = build_geometry(cf);
        Construction c = kind == "pencil"
                             ? [&] {
                                   std::vector<Vec> rows;
                                   for (int i = 2; i <= g.n(); ++i) {
                                       Vec v(g.n() + 1, 0);
                                       v[i] = 1;
                                       rows.push_back(v);
                                   }
                                   return pencil(g, g.span_rows(rows));
                               }()
                         : kind == "remark9"   ? remark9_construct(g, ca, cseed)
                         : kind == "example16" ? example16_construct(g, cseed)
                                               : generalized_example16(g, ca, cseed);
        if (!cover_out.empty())
            write_file(cover_out, text_files ? cover_to_text(g, c.cover)
                                             : cover_to_json(g, c.cover));
        if (!recipe_out.empty()) write_file(recipe_out, recipe_to_json(g, c.recipe));
        print_summary(g, c.cover, as_json);
        return kExitPass;
    }

    if (holes_cmd->parsed() || reduce_cmd->parsed() || dualize_cmd->parsed()) {
        LoadedSet in = parse_set(read_file(in_path));
        Geometry g(in.n, in.spec);
        std::vector<int> indices;
        for (const auto& row : in.rows) indices.push_back(g.index_of(row));

        if (holes_cmd->parsed()) {
            PointSet hs = holes(g, make_cover(g, indices));
            if (as_json)
                std::cout << points_to_json(g, hs);
            else
                for (int p : hs.pts) {
                    const Vec& v = g.coords(p);
                    for (int k = 0; k < (int)v.size(); ++k)
                        std::cout << (k ? " " : "") << v[k];
                    std::cout << "\n";
                }
            return kExitPass;
        }
        if (reduce_cmd->parsed()) {
            Reduction red = minimal_reduce(g, make_cover(g, indices));
            if (!out_path.empty())
                write_file(out_path, text_files ? cover_to_text(g, red.cover)
                                                : cover_to_json(g, red.cover));
            if (as_json)
                std::cout << json{{"size", red.cover.hyps.size()},
                                  {"uniqueness_guaranteed", red.uniqueness_guaranteed}}
                                 .dump()
                          << "\n";
            else
                std::cout << "size=" << red.cover.hyps.size()
                          << ", uniqueness_guaranteed: "
                          << (red.uniqueness_guaranteed ? "true" : "false") << "\n";
            return kExitPass;
        }
        // dualize: hyperplane file <-> point file under the coordinate-
        // identity duality
        std::string out = in.is_points
                              ? (text_files ? cover_to_text(g, PartialCover{indices})
                                            : cover_to_json(g, PartialCover{indices}))
                              : (text_files ? points_to_text(g, PointSet{indices})
                                            : points_to_json(g, PointSet{indices}));
        if (!out_path.empty())
            write_file(out_path, out);
        else
            std::cout << out;
        return kExitPass;
    }

    // verify subcommands
    VerifyReport report;
    std::optional<Geometry> geom;
    if (v_holes->parsed() || v_structure->parsed()) {
        geom.emplace(build_geometry(vf));
        ScanOptions opt;
        opt.mode = vmode == "sampled" ? ScanMode::Sampled : ScanMode::Exhaustive;
        opt.samples = vsamples;
        opt.seed = vseed;
        opt.budget = vbudget;
        opt.threads = vthreads;
        report = v_holes->parsed() ? verify_hole_theorem(*geom, va, opt)
                                   : verify_structure_theorem(*geom, va, opt);
    } else if (v_tangents->parsed()) {
        LoadedSet in = parse_set(read_file(vinput));
        if (!in.is_points)
            throw std::runtime_error("verify tangents expects a points file");
        geom.emplace(in.n, in.spec);
        std::vector<int> pts;
        for (const auto& row : in.rows) pts.push_back(geom->index_of(row));
        report = verify_tangent_bound(*geom, make_point_set(*geom, pts));
    } else {
        geom.emplace(build_geometry(vf));
        report = verify_reduction_uniqueness(*geom, vtrials, vseed);
    }
    if (!report_out.empty()) write_file(report_out, report_to_json(*geom, report));
    if (as_json)
        std::cout << report_to_json(*geom, report);
    else
        std::cout << report.theorem << ": " << (report.pass() ? "PASS" : "FAIL")
                  << " (" << report.instances_checked << " instances, "
                  << report.hypothesis_met_count << " qualifying"
                  << (report.hypothesis_met ? "" : ", hypothesis_not_met") << ")\n";
    return report.pass() ? kExitPass : kExitViolations;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
