#include "zolo/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zolo/cli/output.hpp"
#include "zolo/cli/result.hpp"
#include "zolo/error.hpp"
#include "zolo/presets.hpp"

namespace zolo::cli {
namespace {

[[noreturn]] void fail(const std::string &msg) { throw ValidationError(ErrorCode::kConfig, msg); }

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) { out.push_back(item); }
    if (!text.empty() && text.back() == sep) { out.emplace_back(); }
    return out;
}

template<class T>
T parse_number(const std::string &s, const std::string &what) {
    T v{};
    const char *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) { fail("cannot parse " + what + " from \"" + s + "\""); }
    return v;
}

template<class T>
std::vector<T> number_list(const std::string &text, std::size_t count, const std::string &what) {
    const auto parts = split(text, ',');
    if (parts.size() != count) { fail(what + " needs " + std::to_string(count) + " comma-separated values"); }
    std::vector<T> out;
    for (const auto &p : parts) { out.push_back(parse_number<T>(p, what)); }
    return out;
}

Solution solve_config(const RunConfig &config) { return solve(config.problem()); }

} // namespace

std::vector<int> parse_degrees(const std::string &text) {
    if (text.empty()) { fail("degree list is empty"); }
    std::vector<int> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int a = parse_number<int>(text.substr(0, dots), "degree range start");
        const int b = parse_number<int>(text.substr(dots + 2), "degree range end");
        if (b < a) { fail("degree range " + text + " is empty"); }
        for (int n = a; n <= b; ++n) { out.push_back(n); }
    } else {
        for (const auto &p : split(text, ',')) { out.push_back(parse_number<int>(p, "degree")); }
    }
    if (std::any_of(out.begin(), out.end(), [](int n) { return n < 0; })) { fail("degrees must be >= 0"); }
    if (!std::is_sorted(out.begin(), out.end())) { fail("degrees must be ascending"); }
    return out;
}

void cmd_solve(const RunConfig &config, std::ostream &out, std::ostream &log, bool verbose) {
    const Solution sol = solve_config(config);
    if (verbose) {
        for (const auto &[n, err] : sol.z4.aaa_history) { log << "aaa degree " << n << " error " << format_double(err) << '\n'; }
        for (std::size_t k = 0; k < sol.z4.tau_history.size(); ++k) {
            log << "lawson step " << (k + 1) << " tau " << format_double(sol.z4.tau_history[k]) << '\n';
        }
    }
    for (const auto &w : sol.warnings) { log << "warning: " << w << '\n'; }
    out << dump_json(result_document(sol));
}

void cmd_sweep(const RunConfig &config, const std::vector<int> &degrees, bool json, std::ostream &out) {
    const auto entries = degree_sweep(config.problem(), degrees);
    if (json) {
        out << dump_json(sweep_json(entries, config.capacity));
    } else {
        out << sweep_csv(entries, config.capacity);
    }
}

void cmd_field(const RunConfig &config, const FieldRequest &request, std::ostream &out, std::ostream &log) {
    const Solution sol = solve_config(config);
    for (const auto &w : sol.warnings) { log << "warning: " << w << '\n'; }
    const auto points = sol.z4.samples.points();
    const BoundingBox box = request.box ? *request.box : padded_box(std::vector<Complex>(points.begin(), points.end()), 0.2);

    std::vector<std::pair<std::string, FieldGrid>> grids;
    double floor = -16.0;
    if (request.mode == FieldMode::kRatio) {
        if (!sol.z3) { throw ValidationError(ErrorCode::kDomain, "ratio field needs tau < 1; raise the degree or use --mode sign"); }
        const Z3Solution &z3 = *sol.z3;
        grids.emplace_back("log10_abs_rstar", magnitude_field([&z3](Complex z) { return z3(z); }, box, request.nx, request.ny));
        floor = std::log10(z3.sigma);
    } else {
        auto [minus, plus] = sign_distance_fields(sol.z4.r_hat, box, request.nx, request.ny);
        grids.emplace_back("log10_abs_rhat_minus_1", std::move(minus));
        grids.emplace_back("log10_abs_rhat_plus_1", std::move(plus));
        floor = std::log10(std::max(sol.z4.tau, 1e-300));
    }

    if (!request.svg) {
        out << field_csv(grids);
        return;
    }
    SvgScene scene;
    scene.grids = std::move(grids);
    scene.levels = contour_levels(request.levels == LevelStep::kUnit ? 1.0 : 1.0 / 3.0, floor);
    scene.points_E = sol.z4.samples.points_E();
    scene.points_F = sol.z4.samples.points_F();
    if (request.mode == FieldMode::kRatio) {
        scene.poles = sol.z3->poles;
        scene.zeros = sol.z3->zeros;
    } else {
        scene.poles = poles(sol.z4.r_hat);
        scene.zeros = zeros(sol.z4.r_hat);
    }
    out << field_svg(scene);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Zolotarev ratio and sign problems on sampled sets E and F"};
    app.name("zolo");
    app.require_subcommand(1);

    struct Common {
        std::string config_path, preset, out_path, format;
        std::optional<int> degree, lawson_steps;
        std::optional<double> damping, capacity;
        bool no_blend = false;
        bool verbose = false;
    } common;
    std::string degrees_text, bbox_text, res_text, mode = "ratio", levels = "unit";

    auto add_common = [&common](CLI::App *sub) {
        sub->add_option("--config", common.config_path, "JSON problem config");
        sub->add_option("--preset", common.preset, "named example geometry (see `zolo presets`)");
        sub->add_option("--degree", common.degree, "rational degree n");
        sub->add_option("--lawson-steps", common.lawson_steps, "number of Lawson steps");
        sub->add_option("--damping", common.damping, "Lawson damping factor in (0, 1]");
        sub->add_flag("--no-sign-blend", common.no_blend, "use the plain minimal singular vector");
        sub->add_option("--capacity", common.capacity, "condenser capacity for the lower bound exp(-n/cap)");
        sub->add_option("--out", common.out_path, "write the result here instead of standard output");
        sub->add_option("--format", common.format, "output format");
        sub->add_flag("--verbose", common.verbose, "log AAA and Lawson errors to standard error");
    };
    auto *solve_cmd = app.add_subcommand("solve", "solve one problem, write a JSON result");
    auto *sweep_cmd = app.add_subcommand("sweep", "solve for several degrees, write n, tau, sigma");
    auto *field_cmd = app.add_subcommand("field", "solve, then sample log10|r*| (or the sign distances) on a grid");
    auto *presets_cmd = app.add_subcommand("presets", "list the named example geometries");
    add_common(solve_cmd);
    add_common(sweep_cmd);
    add_common(field_cmd);
    sweep_cmd->add_option("--degrees", degrees_text, "A..B or a comma list")->required();
    field_cmd->add_option("--bbox", bbox_text, "x0,x1,y0,y1");
    field_cmd->add_option("--res", res_text, "NX,NY");
    field_cmd->add_option("--mode", mode, "ratio or sign")->check(CLI::IsMember({"ratio", "sign"}));
    field_cmd->add_option("--levels", levels, "SVG contour spacing: unit or third")->check(CLI::IsMember({"unit", "third"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "zolo: " << e.what() << '\n';
        return kValidationFailure;
    }

    try {
        if (presets_cmd->parsed()) {
            for (const auto &name : preset_names()) { out << name << "  " << preset(name).description << '\n'; }
            return kSuccess;
        }
        if (common.config_path.empty() == common.preset.empty()) { fail("give exactly one of --config and --preset"); }
        RunConfig cfg = common.preset.empty() ? load_config(common.config_path) : preset_config(common.preset);
        if (common.degree) { cfg.degree = *common.degree; }
        if (common.lawson_steps) { cfg.lawson_steps = *common.lawson_steps; }
        if (common.damping) { cfg.damping = *common.damping; }
        if (common.capacity) { cfg.capacity = *common.capacity; }
        if (common.no_blend) { cfg.sign_blend = false; }
        if (cfg.degree < 0) { fail("--degree must be >= 0"); }
        if (cfg.lawson_steps < 0) { fail("--lawson-steps must be >= 0"); }
        if (!(cfg.damping > 0.0 && cfg.damping <= 1.0)) { fail("--damping must lie in (0, 1]"); }
        if (cfg.capacity && !(*cfg.capacity > 0.0)) { fail("--capacity must be positive"); }

        std::ostringstream doc;
        if (solve_cmd->parsed()) {
            if (!common.format.empty() && common.format != "json") { fail("solve writes json only"); }
            cmd_solve(cfg, doc, err, common.verbose);
        } else if (sweep_cmd->parsed()) {
            if (!common.format.empty() && common.format != "csv" && common.format != "json") { fail("sweep writes csv or json"); }
            cmd_sweep(cfg, parse_degrees(degrees_text), common.format == "json", doc);
        } else {
            if (!common.format.empty() && common.format != "csv" && common.format != "svg") { fail("field writes csv or svg"); }
            FieldRequest req;
            if (!bbox_text.empty()) {
                const auto b = number_list<double>(bbox_text, 4, "--bbox");
                req.box = BoundingBox{b[0], b[1], b[2], b[3]};
            }
            if (!res_text.empty()) {
                const auto r = number_list<int>(res_text, 2, "--res");
                req.nx = r[0];
                req.ny = r[1];
            }
            req.mode = mode == "sign" ? FieldMode::kSign : FieldMode::kRatio;
            req.svg = common.format == "svg";
            req.levels = levels == "third" ? LevelStep::kThird : LevelStep::kUnit;
            cmd_field(cfg, req, doc, err);
        }

        if (common.out_path.empty()) {
            out << doc.str();
        } else {
            std::ofstream file(common.out_path, std::ios::binary);
            if (!file) { fail("cannot write " + common.out_path); }
            file << doc.str();
        }
        return kSuccess;
    } catch (const ValidationError &e) {
        err << "zolo: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const NumericalError &e) {
        err << "zolo: numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

} // namespace zolo::cli
