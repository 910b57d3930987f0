// wallscan: exact Bridgeland-style wall geometry for line bundles on rank-2
// polarized surfaces.
//
//   preset    write the bundled surface files (f1.json, f2.json, p1p1.json)
//   wall      wall report for one object spec (JSON to stdout, optional SVG)
//   scan      dominance / emptiness / shifted-side scans over a u~ grid
//   plot      deterministic SVG of one or more walls
//   selftest  seeded exact invariant suites of every module
//
// Exit codes: 0 success (scan: no violations), 1 failed checks or scan
// violations, 2 malformed input, 3 violated mathematical precondition,
// 70 broken internal invariant.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wallscan/io.hpp"
#include "wallscan/render.hpp"
#include "wallscan/selfcheck.hpp"

using namespace wallscan;

namespace {

SurfacePreset resolve_surface(const std::string& ref) {
    if (ref == "f1") return preset_f1();
    if (ref == "f2") return preset_f2();
    if (ref == "p1p1") return preset_p1p1();
    return surface_from_json(load_json_file(ref));
}

std::vector<Rational> parse_grid(const std::vector<std::string>& items) {
    std::vector<Rational> grid;
    for (const auto& s : items) grid.push_back(rational_from_string(s));
    return grid;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw parse_error("failed writing '" + path + "'");
}

json quadext_to_json(const QuadExt& v) {
    return json{{"p", rational_to_json(v.p)},
                {"t", rational_to_json(v.t)},
                {"rad", rational_to_json(v.rad)},
                {"approx", v.approx()}};
}

// ---- wall ----------------------------------------------------------------

struct WallArgs {
    std::string spec;
    std::string surface;
    bool cone = false;
    bool shifted = false;
    std::vector<std::string> u_grid;
    std::string svg_path;
};

void run_wall(const WallArgs& a) {
    const SurfacePreset surf = resolve_surface(a.surface);
    const ChernCharacter ch = parse_object_spec(a.spec, surf, a.cone);
    const int lrank = surf.lattice.rank();
    const ChernCharacter base =
        a.shifted ? shifted_structure_sheaf(lrank) : structure_sheaf(lrank);
    const WallConic w = wall(ch, base, surf.frame);

    json j = wall_to_json(w);
    j["surface"] = surf.name;
    j["object"] = a.spec;
    j["delta"] = rational_to_json(wall_delta(w));

    try {
        const SpecialPoints sp = special_points(w);
        json pts;
        pts["p_w"] = json{{"s", rational_to_json(sp.p_w.first)},
                          {"u", rational_to_json(sp.p_w.second)}};
        pts["horizontal"] = json::array();
        for (const auto& [s, u] : sp.horizontal)
            pts["horizontal"].push_back(json{{"s", quadext_to_json(s)}, {"u", quadext_to_json(u)}});
        j["special_points"] = std::move(pts);
    } catch (const precondition_error&) {
        j["special_points"] = nullptr;  // degenerate shape: no tangent points
    }

    if (!a.u_grid.empty()) {
        json circles = json::array();
        for (const Rational& u : parse_grid(a.u_grid)) {
            const CircleSlice c = pi_u_circle_raw(w, u);
            circles.push_back(json{{"u", rational_to_json(u)},
                                   {"center", rational_to_json(c.center)},
                                   {"radius_sq", rational_to_json(c.radius_sq)},
                                   {"empty", sign(c.radius_sq) <= 0}});
        }
        j["circles"] = std::move(circles);
    }

    if (!a.svg_path.empty()) {
        RenderSpec spec;
        spec.annotate_pw = true;
        spec.annotate_asymptotes = true;
        std::vector<Rational> mu_lines;
        if (ch.r > 0) {
            const ExtendedRational mu = mumford_slope(ch, surf.frame);
            if (mu.is_finite()) {
                mu_lines.push_back(mu.value);
                spec.annotate_mu = true;
            }
        }
        write_text_file(a.svg_path, render_svg({{a.spec, w}}, surf.frame, mu_lines, spec));
    }

    std::cout << j.dump(2) << "\n";
}

// ---- scan ----------------------------------------------------------------

struct ScanArgs {
    std::string config;
    std::string surface;
    std::string mode = "one-negative";
    long coeff = -1;
    long length = -1;
    long max_rank = -1;
    std::vector<std::string> u_grid;
    std::string inject;
    bool openmp = false;
    std::string out;
};

int run_scan(const ScanArgs& a) {
    std::optional<SurfacePreset> surf;
    ScanBounds bounds;

    if (!a.config.empty()) {
        const json cfg = load_json_file(a.config);
        if (!cfg.is_object()) throw parse_error("scan config must be a JSON object");
        if (cfg.contains("surface")) {
            if (!cfg.at("surface").is_string())
                throw parse_error("scan config field 'surface' must be a file reference");
            surf = resolve_surface(cfg.at("surface").get<std::string>());
        }
        if (cfg.contains("bounds")) bounds = bounds_from_json(cfg.at("bounds"));
    }
    if (!a.surface.empty()) surf = resolve_surface(a.surface);
    if (!surf) throw parse_error("no surface given (--surface or config file)");
    if (a.coeff >= 0) bounds.max_cone_coeff = a.coeff;
    if (a.length >= 0) bounds.max_length = a.length;
    if (a.max_rank >= 0) bounds.max_rank = a.max_rank;
    if (!a.u_grid.empty()) bounds.u_grid = parse_grid(a.u_grid);

    const ExecMode exec = a.openmp ? ExecMode::OpenMP : ExecMode::Serial;

    std::vector<CandidateSubobject> injected;
    if (!a.inject.empty()) injected = injected_from_json(load_json_file(a.inject), *surf);

    ScanReport report;
    if (a.mode == "one-negative" || a.mode == "two-negative") {
        if (bounds.u_grid.empty())
            throw parse_error("scan mode '" + a.mode + "' needs a u~ grid (--u-grid)");
        const ScanMode m =
            a.mode == "one-negative" ? ScanMode::Rank2OneNegative : ScanMode::Rank2TwoNegative;
        report = verify_rank2_conjecture(*surf, bounds, m, exec, injected);
    } else if (a.mode == "no-negative") {
        if (!injected.empty())
            throw parse_error("injected candidates apply to the dominance modes only");
        report = verify_no_negative_curves(*surf, bounds, exec);
    } else if (a.mode == "dual") {
        if (!injected.empty())
            throw parse_error("injected candidates apply to the dominance modes only");
        if (bounds.u_grid.empty()) throw parse_error("scan mode 'dual' needs a u~ grid (--u-grid)");
        report = dual_scan_for_shift(*surf, bounds, exec);
    } else {
        throw parse_error("unknown scan mode '" + a.mode +
                          "' (one-negative, two-negative, no-negative, dual)");
    }

    const std::string text = report_to_json(report).dump(2) + "\n";
    if (a.out.empty())
        std::cout << text;
    else
        write_text_file(a.out, text);

    if (!report.passed()) {
        std::cerr << "scan found " << report.violations.size() << " violation(s)\n";
        return 1;
    }
    return 0;
}

// ---- plot ----------------------------------------------------------------

struct PlotArgs {
    std::vector<std::string> specs;
    std::string surface;
    bool cone = false;
    bool shifted = false;
    std::string u;  // empty: t~ = 0 plane
    std::vector<double> view;
    int samples = 256;
    bool annotate_pw = false;
    bool annotate_asymptotes = false;
    bool annotate_mu = false;
    std::string out;
};

void run_plot(const PlotArgs& a) {
    const SurfacePreset surf = resolve_surface(a.surface);
    const int lrank = surf.lattice.rank();
    const ChernCharacter base =
        a.shifted ? shifted_structure_sheaf(lrank) : structure_sheaf(lrank);

    std::vector<RenderWall> walls;
    std::vector<Rational> mu_lines;
    for (const auto& s : a.specs) {
        const ChernCharacter ch = parse_object_spec(s, surf, a.cone);
        walls.push_back({s, wall(ch, base, surf.frame)});
        if (a.annotate_mu && ch.r > 0) {
            const ExtendedRational mu = mumford_slope(ch, surf.frame);
            if (mu.is_finite()) mu_lines.push_back(mu.value);
        }
    }

    RenderSpec spec;
    if (!a.u.empty()) {
        spec.plane = RenderSpec::Plane::U;
        spec.u_value = rational_from_string(a.u);
    }
    if (!a.view.empty()) {
        spec.xmin = a.view[0];
        spec.xmax = a.view[1];
        spec.ymin = a.view[2];
        spec.ymax = a.view[3];
    }
    spec.samples = a.samples;
    spec.annotate_pw = a.annotate_pw;
    spec.annotate_asymptotes = a.annotate_asymptotes;
    spec.annotate_mu = a.annotate_mu;

    write_text_file(a.out, render_svg(walls, surf.frame, mu_lines, spec));
}

// ---- selftest ------------------------------------------------------------

int run_selftest(std::uint64_t seed) {
    const std::vector<SuiteResult> results = run_selfcheck(seed);
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    bool all_ok = true;
    for (const auto& r : results) {
        const bool ok = r.cases > 0 && r.failures == 0;
        all_ok = all_ok && ok;
        std::printf("[%s] %-*s  cases %5ld  failures %ld%s%s\n", ok ? "PASS" : "FAIL",
                    static_cast<int>(width), r.name.c_str(), r.cases, r.failures,
                    r.note.empty() ? "" : "  ", r.note.c_str());
    }
    std::printf("%s (seed %llu)\n", all_ok ? "all invariant suites passed" : "SELFTEST FAILED",
                static_cast<unsigned long long>(seed));
    return all_ok ? 0 : 1;
}

// ---- preset --------------------------------------------------------------

void run_preset(const std::string& dir) {
    const std::string prefix = dir.empty() ? std::string() : dir + "/";
    const std::pair<const char*, SurfacePreset> files[] = {
        {"f1.json", preset_f1()}, {"f2.json", preset_f2()}, {"p1p1.json", preset_p1p1()}};
    for (const auto& [name, s] : files) {
        const std::string path = prefix + name;
        write_text_file(path, surface_to_json(s).dump(2) + "\n");
        std::cout << path << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wall geometry for line bundles on rank-2 polarized surfaces"};
    app.require_subcommand(1);
    int exit_code = 0;

    // preset
    std::string preset_dir;
    CLI::App* preset = app.add_subcommand("preset", "write the bundled surface files");
    preset->add_option("--dir", preset_dir, "output directory (default: current)");
    preset->callback([&] { run_preset(preset_dir); });

    // wall
    WallArgs wa;
    CLI::App* wall_cmd = app.add_subcommand("wall", "wall report for one object (JSON to stdout)");
    wall_cmd->add_option("spec", wa.spec,
                         "object spec: O(-C) | IZ(C;n) | TOR(C) | raw r;c1;ch2")
        ->required();
    wall_cmd->add_option("--surface", wa.surface, "preset name (f1, f2, p1p1) or surface file")
        ->required();
    wall_cmd->add_flag("--cone", wa.cone, "read C against the effective cone generators");
    wall_cmd->add_flag("--shifted", wa.shifted, "pair against the shifted structure sheaf");
    wall_cmd->add_option("--u-grid", wa.u_grid, "comma-separated u~ values for the circle table")
        ->delimiter(',');
    wall_cmd->add_option("--svg", wa.svg_path, "also render the wall to this SVG file");
    wall_cmd->callback([&] { run_wall(wa); });

    // scan
    ScanArgs sa;
    CLI::App* scan_cmd = app.add_subcommand("scan", "wall-dominance scan over a u~ grid");
    scan_cmd->add_option("--config", sa.config, "JSON file with surface reference and bounds");
    scan_cmd->add_option("--surface", sa.surface, "preset name (f1, f2, p1p1) or surface file");
    scan_cmd->add_option("--mode", sa.mode,
                         "one-negative | two-negative | no-negative | dual (default one-negative)");
    scan_cmd->add_option("--coeff", sa.coeff, "max cone coefficient N for C = a C1 + b C2");
    scan_cmd->add_option("--length", sa.length, "max ideal-sheaf length n");
    scan_cmd->add_option("--max-rank", sa.max_rank, "cap on reduction chain length");
    scan_cmd->add_option("--u-grid", sa.u_grid, "comma-separated u~ values")->delimiter(',');
    scan_cmd->add_option("--inject", sa.inject, "JSON file of higher-rank candidates to include");
    scan_cmd->add_flag("--openmp", sa.openmp, "evaluate grid planes in parallel");
    scan_cmd->add_option("--out", sa.out, "write the report here instead of stdout");
    scan_cmd->callback([&] { exit_code = run_scan(sa); });

    // plot
    PlotArgs pa;
    CLI::App* plot_cmd = app.add_subcommand("plot", "deterministic SVG of one or more walls");
    plot_cmd->add_option("specs", pa.specs, "object specs (same mini-language as wall)")
        ->required();
    plot_cmd->add_option("--surface", pa.surface, "preset name (f1, f2, p1p1) or surface file")
        ->required();
    plot_cmd->add_flag("--cone", pa.cone, "read C against the effective cone generators");
    plot_cmd->add_flag("--shifted", pa.shifted, "pair against the shifted structure sheaf");
    plot_cmd->add_option("--u", pa.u, "slice plane u~ = value (default: the t~ = 0 plane)");
    plot_cmd->add_option("--view", pa.view, "viewport xmin,xmax,ymin,ymax")
        ->delimiter(',')
        ->expected(4);
    plot_cmd->add_option("--samples", pa.samples, "sample points per conic branch")
        ->check(CLI::Range(16, 65536));
    plot_cmd->add_flag("--points", pa.annotate_pw, "mark the distinguished tangent points");
    plot_cmd->add_flag("--asymptotes", pa.annotate_asymptotes, "draw hyperbola asymptotes");
    plot_cmd->add_flag("--mu", pa.annotate_mu, "draw the objects' slope lines");
    plot_cmd->add_option("--out", pa.out, "output SVG file")->required();
    plot_cmd->callback([&] { run_plot(pa); });

    // selftest
    std::uint64_t seed = 20260822;
    CLI::App* self_cmd = app.add_subcommand("selftest", "run the seeded exact invariant suites");
    self_cmd->add_option("--seed", seed, "seed for the random-input suites");
    self_cmd->callback([&] { exit_code = run_selftest(seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit cleanly, usage errors do not
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return exit_code;
}
