#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "zolo/cli/commands.hpp"
#include "zolo/cli/config.hpp"
#include "zolo/cli/output.hpp"
#include "zolo/cli/result.hpp"
#include "zolo/error.hpp"
#include "zolo/fieldmap.hpp"
#include "zolo/presets.hpp"

namespace zolo::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("zolo_cli_test_" + std::to_string(std::random_device{}()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path write(const std::string &name, const std::string &text) const {
        std::ofstream(path_ / name) << text;
        return path_ / name;
    }
    const fs::path &path() const { return path_; }

private:
    fs::path path_;
};

// Parses the field CSV into grids of rows.
std::vector<std::vector<std::vector<double>>> parse_field_csv(const std::string &text) {
    std::vector<std::vector<std::vector<double>>> grids;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# grid=", 0) == 0) {
            grids.emplace_back();
            continue;
        }
        if (line.empty() || line[0] == '#') { continue; }
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) { row.push_back(std::stod(cell)); }
        grids.back().push_back(row);
    }
    return grids;
}

TEST(FormatDouble, RoundTripsAndIgnoresLocale) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    for (int k = 0; k < 1000; ++k) {
        const double x = std::pow(10.0, u(rng)) * (k % 2 ? -1.0 : 1.0);
        EXPECT_EQ(std::stod(format_double(x)), x);
    }
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(1.8761124363744610e-14), "1.8761124363744609e-14");
    EXPECT_EQ(format_double(0.1).find(','), std::string::npos);
}

TEST(DumpJson, NonFiniteBecomesNullAndPairsStayInline) {
    const json doc{{"a", {1.5, 2.0}}, {"b", std::nan("")}, {"c", json::array({json::array({1, 2}), json::array({3, 4})})}};
    const std::string text = dump_json(doc);
    EXPECT_NE(text.find("\"a\": [1.5, 2]"), std::string::npos) << text;
    EXPECT_NE(text.find("\"b\": null"), std::string::npos) << text;
    EXPECT_TRUE(json::accept(text));
}

TEST(ParseDegrees, RangesAndLists) {
    EXPECT_EQ(parse_degrees("8..11"), (std::vector<int>{8, 9, 10, 11}));
    EXPECT_EQ(parse_degrees("0,4,12"), (std::vector<int>{0, 4, 12}));
    EXPECT_EQ(parse_degrees("5"), (std::vector<int>{5}));
    for (const char *bad : {"", "3..1", "a,b", "1,,2", "-1", "4,2", "1..x"}) { EXPECT_THROW(parse_degrees(bad), ValidationError) << bad; }
}

TEST(Config, PresetDefaultsAndOverrides) {
    const auto cfg = parse_config(json{{"preset", "fig2a"}, {"degree", 8}});
    EXPECT_EQ(cfg.degree, 8);
    EXPECT_EQ(cfg.lawson_steps, preset("fig2a").lawson_steps);
    EXPECT_EQ(cfg.preset, "fig2a");
    const auto p = cfg.problem();
    EXPECT_EQ(p.degree, 8);
    EXPECT_EQ(p.lawson.delta, 0.95);
    EXPECT_TRUE(p.aaa.sign_blend);
}

TEST(Config, ExplicitGeometryRoundTrips) {
    const json doc = json::parse(R"({
        "geometry": {
            "E": [{"type": "circle", "center": [-1, 0], "radius": 0.5, "count": 50}],
            "F": [{"type": "transform", "scale": [0, 1], "shift": 1,
                   "inner": {"type": "interval", "endpoint_a": -0.5, "endpoint_b": 0.5, "count": 30}},
                  {"type": "polyline", "vertices": [[2, 0], [3, 0], [3, 1]], "count_per_side": 7}]
        },
        "degree": 6, "lawson_steps": 20, "damping": 0.5, "sign_blend": false, "capacity": 1.5
    })");
    const auto cfg = parse_config(doc);
    EXPECT_EQ(cfg.degree, 6);
    EXPECT_EQ(cfg.lawson_steps, 20);
    EXPECT_EQ(cfg.damping, 0.5);
    EXPECT_FALSE(cfg.sign_blend);
    EXPECT_EQ(cfg.capacity, 1.5);
    const auto again = parse_config(config_to_json(cfg));
    const auto a = cfg.problem().samples, b = again.problem().samples;
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) { EXPECT_EQ(a.points()[k], b.points()[k]); }
    EXPECT_EQ(a.size_E(), 50u);
}

TEST(Config, EveryShapeRoundTripsThroughJson) {
    for (const auto &name : preset_names()) {
        const auto &p = preset(name);
        for (const auto *list : {&p.shapes_E, &p.shapes_F}) {
            for (const auto &s : *list) { EXPECT_EQ(generate_points(parse_shape(shape_to_json(s))), generate_points(s)) << name; }
        }
    }
}

TEST(Config, RejectsMalformedInput) {
    const std::vector<json> bad{
        json::object(),
        json{{"preset", "fig1a"}, {"geometry", json::object()}},
        json{{"preset", "fig1a"}, {"bogus", 1}},
        json{{"preset", "nope"}},
        json{{"preset", "fig1a"}, {"degree", -1}},
        json{{"preset", "fig1a"}, {"degree", 1.5}},
        json{{"preset", "fig1a"}, {"damping", 0.0}},
        json{{"preset", "fig1a"}, {"damping", 1.5}},
        json{{"preset", "fig1a"}, {"capacity", -2.0}},
        json{{"geometry", {{"E", json::array()}, {"F", json::array()}}}},
        json::parse(R"({"geometry": {"E": [{"type": "circle", "radius": 1}], "F": [{"type": "square"}]}})"),
        json::parse(R"({"geometry": {"E": [{"type": "circle", "center": [1, 2, 3], "radius": 1}], "F": []}})"),
        json::array(),
    };
    for (const auto &doc : bad) { EXPECT_THROW(parse_config(doc), ValidationError) << doc.dump(); }
}

TEST(ResultSchema, SolvedPresetsValidate) {
    for (const auto &name : preset_names()) {
        auto cfg = preset_config(name);
        std::ostringstream out, log;
        cmd_solve(cfg, out, log);
        const json doc = json::parse(out.str());
        EXPECT_TRUE(validate_result_document(doc).empty()) << name;
        EXPECT_TRUE(doc.contains("sigma")) << name;
    }
}

TEST(ResultSchema, ViolationsAreReported) {
    std::ostringstream out, log;
    cmd_solve(preset_config("fig1b"), out, log);
    const json good = json::parse(out.str());
    ASSERT_TRUE(validate_result_document(good).empty());

    json missing = good;
    missing.erase("tau");
    EXPECT_FALSE(validate_result_document(missing).empty());
    json orphan = good;
    orphan.erase("p");
    EXPECT_FALSE(validate_result_document(orphan).empty());
    json extra = good;
    extra["surprise"] = 1;
    EXPECT_FALSE(validate_result_document(extra).empty());
    json wrong = good;
    wrong["degree"] = "twelve";
    EXPECT_FALSE(validate_result_document(wrong).empty());
    json negative = good;
    negative["degree"] = -3;
    EXPECT_FALSE(validate_result_document(negative).empty());
    json triple = good;
    triple["support_points"][0] = json::array({1.0, 2.0, 3.0});
    EXPECT_FALSE(validate_result_document(triple).empty());
}

TEST(Solve, TwoDisksPreset) {
    const auto r = run_cli({"solve", "--preset", "fig1a"});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_NEAR(doc["sigma"].get<double>() / 1.8761e-14, 1.0, 0.005);
    EXPECT_EQ(doc["degree"], 12);
    EXPECT_EQ(doc["support_points"].size(), 13u);
    EXPECT_EQ(doc["tau_history"].size(), 200u);
    EXPECT_TRUE(doc["warnings"].empty());
}

TEST(Solve, DegreeZeroWarnsAndOmitsRatioFields) {
    const auto r = run_cli({"solve", "--preset", "fig1a", "--degree", "0"});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const json doc = json::parse(r.out);
    ASSERT_EQ(doc["warnings"].size(), 1u);
    EXPECT_EQ(doc["warnings"][0], "tau=1: degree too low");
    for (const char *key : {"sigma", "p", "poles_rstar", "zeros_rstar", "min_on_F", "max_on_E"}) { EXPECT_FALSE(doc.contains(key)) << key; }
    EXPECT_TRUE(validate_result_document(doc).empty());
    EXPECT_NE(r.err.find("tau=1: degree too low"), std::string::npos);
}

TEST(Solve, ConfigFileAndErrors) {
    TempDir dir;
    const auto good = dir.write("good.json", R"({"preset": "fig1b", "degree": 6})");
    auto r = run_cli({"solve", "--config", good.string()});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    EXPECT_EQ(json::parse(r.out)["degree"], 6);

    const auto malformed = dir.write("bad.json", R"({"preset": "fig1b", )");
    r = run_cli({"solve", "--config", malformed.string()});
    EXPECT_EQ(r.code, kValidationFailure);
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());

    EXPECT_EQ(run_cli({"solve", "--config", (dir.path() / "missing.json").string()}).code, kValidationFailure);
    EXPECT_EQ(run_cli({"solve"}).code, kValidationFailure);
    EXPECT_EQ(run_cli({"solve", "--preset", "fig1a", "--config", good.string()}).code, kValidationFailure);
    EXPECT_EQ(run_cli({"solve", "--preset", "fig1a", "--format", "csv"}).code, kValidationFailure);
    EXPECT_EQ(run_cli({"solve", "--preset", "fig1a", "--damping", "2"}).code, kValidationFailure);
    EXPECT_EQ(run_cli({"solve", "--preset", "fig1a", "--degree", "x"}).code, kValidationFailure);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kValidationFailure);
    EXPECT_EQ(run_cli({}).code, kValidationFailure);
    EXPECT_EQ(run_cli({"--help"}).code, kSuccess);
}

TEST(Solve, OutFileMatchesStdout) {
    TempDir dir;
    const auto path = dir.path() / "r.json";
    const auto to_file = run_cli({"solve", "--preset", "fig2a", "--out", path.string()});
    ASSERT_EQ(to_file.code, kSuccess);
    EXPECT_TRUE(to_file.out.empty());
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(text, run_cli({"solve", "--preset", "fig2a"}).out);
}

TEST(Solve, VerboseLogsEveryLawsonStep) {
    const auto r = run_cli({"solve", "--preset", "fig1b", "--lawson-steps", "7", "--verbose"});
    ASSERT_EQ(r.code, kSuccess);
    std::size_t steps = 0, pos = 0;
    while ((pos = r.err.find("lawson step", pos)) != std::string::npos) {
        ++steps;
        ++pos;
    }
    EXPECT_EQ(steps, 7u);
}

TEST(Determinism, IdenticalConfigsGiveIdenticalBytes) {
    for (const std::vector<std::string> &args : {std::vector<std::string>{"solve", "--preset", "fig3c"},
                                                  std::vector<std::string>{"sweep", "--preset", "fig1e", "--degrees", "2..6"},
                                                  std::vector<std::string>{"field", "--preset", "fig2d", "--res", "30,20"}}) {
        const auto a = run_cli(args), b = run_cli(args);
        ASSERT_EQ(a.code, kSuccess) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Sweep, SingleDegreeMatchesSolveBitForBit) {
    const auto sweep = run_cli({"sweep", "--preset", "fig1c", "--degrees", "12"});
    const auto solved = run_cli({"solve", "--preset", "fig1c"});
    ASSERT_EQ(sweep.code, kSuccess);
    const json doc = json::parse(solved.out);
    std::istringstream in(sweep.out);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header, "n,tau,sigma");
    EXPECT_EQ(row, "12," + format_double(doc["tau"].get<double>()) + "," + format_double(doc["sigma"].get<double>()));
}

TEST(Sweep, LowerBoundColumnWithCapacity) {
    const auto r = run_cli({"sweep", "--preset", "fig7", "--degrees", "0..3", "--capacity", "2.78805"});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "n,tau,sigma,lower_bound");
    int n = 0;
    while (std::getline(in, line)) {
        const auto last = line.substr(line.rfind(',') + 1);
        EXPECT_EQ(last, format_double(capacity_bound(n, 2.78805)));
        if (n == 0) { EXPECT_EQ(line, "0,1,1,1"); }
        ++n;
    }
    EXPECT_EQ(n, 4);
}

TEST(Sweep, JsonFormatAndErrors) {
    const auto r = run_cli({"sweep", "--preset", "fig1a", "--degrees", "2,4", "--format", "json"});
    ASSERT_EQ(r.code, kSuccess);
    const json doc = json::parse(r.out);
    ASSERT_EQ(doc["sweep"].size(), 2u);
    EXPECT_EQ(doc["sweep"][1]["n"], 4);
    EXPECT_EQ(run_cli({"sweep", "--preset", "fig1a", "--degrees", ""}).code, kValidationFailure);
    EXPECT_EQ(run_cli({"sweep", "--preset", "fig1a"}).code, kValidationFailure);
    EXPECT_EQ(run_cli({"sweep", "--preset", "fig1a", "--degrees", "4", "--format", "svg"}).code, kValidationFailure);
}

TEST(Field, TinyGrid) {
    const auto r = run_cli({"field", "--preset", "fig1a", "--res", "2,2"});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto grids = parse_field_csv(r.out);
    ASSERT_EQ(grids.size(), 1u);
    ASSERT_EQ(grids[0].size(), 2u);
    EXPECT_EQ(grids[0][0].size(), 2u);
    EXPECT_EQ(grids[0][1].size(), 2u);
}

TEST(Field, RatioFieldReachesTheSmallSide) {
    const auto r = run_cli({"field", "--preset", "fig1a", "--res", "120,80"});
    ASSERT_EQ(r.code, kSuccess);
    const auto grids = parse_field_csv(r.out);
    double lowest = INFINITY;
    for (const auto &row : grids.at(0)) {
        for (double v : row) { lowest = std::min(lowest, v); }
    }
    const double sigma = json::parse(run_cli({"solve", "--preset", "fig1a"}).out)["sigma"];
    EXPECT_LE(lowest, std::log10(sigma) + 1.0);
    EXPECT_EQ(grids[0].size(), 80u);
    EXPECT_EQ(grids[0][0].size(), 120u);
}

TEST(Field, SignModeEmitsTwoGrids) {
    const auto r = run_cli({"field", "--preset", "fig1c", "--mode", "sign", "--res", "20,10"});
    ASSERT_EQ(r.code, kSuccess);
    EXPECT_EQ(parse_field_csv(r.out).size(), 2u);
}

TEST(Field, BoundingBoxAndSvg) {
    const auto r = run_cli({"field", "--preset", "fig1a", "--bbox", "-2,2,-1,1", "--res", "40,20", "--format", "svg", "--levels", "third"});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
    EXPECT_NE(r.out.find("</svg>"), std::string::npos);
    EXPECT_NE(r.out.find("data-level=\"-0.33333333333333331\""), std::string::npos);

    const auto csv = run_cli({"field", "--preset", "fig1a", "--bbox", "-2,2,-1,1", "--res", "5,3"});
    EXPECT_NE(csv.out.find("# bbox=-2,2,-1,1"), std::string::npos);

    for (const std::vector<std::string> &bad : {std::vector<std::string>{"--bbox", "1,0,0,1"},
                                                 std::vector<std::string>{"--bbox", "1,2,3"},
                                                 std::vector<std::string>{"--res", "1,5"},
                                                 std::vector<std::string>{"--res", "a,b"},
                                                 std::vector<std::string>{"--mode", "phase"},
                                                 std::vector<std::string>{"--format", "json"}}) {
        std::vector<std::string> args{"field", "--preset", "fig1a", "--res", "5,5"};
        args.insert(args.end(), bad.begin(), bad.end());
        EXPECT_EQ(run_cli(args).code, kValidationFailure) << bad[0] << ' ' << bad[1];
    }
    EXPECT_EQ(run_cli({"field", "--preset", "fig1a", "--degree", "0", "--res", "5,5"}).code, kValidationFailure);
    EXPECT_EQ(run_cli({"field", "--preset", "fig1a", "--degree", "0", "--res", "5,5", "--mode", "sign"}).code, kSuccess);
}

TEST(Presets, ListsEveryName) {
    const auto r = run_cli({"presets"});
    ASSERT_EQ(r.code, kSuccess);
    for (const auto &name : preset_names()) { EXPECT_NE(r.out.find(name + "  "), std::string::npos) << name; }
}

int shell(const std::string &cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Binary, ExitCodes) {
    TempDir dir;
    const std::string bin = ZOLO_CLI_BINARY;
    const std::string quiet = " >" + (dir.path() / "o").string() + " 2>" + (dir.path() / "e").string();
    EXPECT_EQ(shell(bin + " solve --preset fig1b --degree 4" + quiet), 0);
    const auto bad = dir.write("bad.json", "{ not json");
    EXPECT_EQ(shell(bin + " solve --config " + bad.string() + quiet), 2);
    EXPECT_EQ(shell(bin + " sweep --preset fig1a --degrees 5..1" + quiet), 2);
    EXPECT_EQ(shell(bin + quiet), 2);
}

TEST(Binary, OutputValidatesWithPythonJsonschema) {
    if (shell("python3 -c 'import jsonschema' >/dev/null 2>&1") != 0) { GTEST_SKIP() << "python3 jsonschema not available"; }
    TempDir dir;
    const auto doc = dir.path() / "fig3a.json";
    ASSERT_EQ(shell(std::string(ZOLO_CLI_BINARY) + " solve --preset fig3a --out " + doc.string()), 0);
    const auto low = dir.path() / "low.json";
    ASSERT_EQ(shell(std::string(ZOLO_CLI_BINARY) + " solve --preset fig3a --degree 0 --out " + low.string() + " 2>/dev/null"), 0);
    const auto script = dir.write("check.py", "import json, sys, jsonschema\n"
                                              "schema = json.load(open(sys.argv[1]))\n"
                                              "jsonschema.Draft202012Validator.check_schema(schema)\n"
                                              "for path in sys.argv[2:]:\n"
                                              "    jsonschema.validate(json.load(open(path)), schema, cls=jsonschema.Draft202012Validator)\n");
    EXPECT_EQ(shell("python3 " + script.string() + " " + ZOLO_RESULT_SCHEMA_PATH + " " + doc.string() + " " + low.string()), 0);
}

} // namespace
} // namespace zolo::cli
