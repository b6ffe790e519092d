#ifndef ZOLO_CLI_CONFIG_HPP
#define ZOLO_CLI_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zolo/geometry.hpp"
#include "zolo/zolotarev.hpp"

namespace zolo::cli {

// A problem as read from a config file (or a preset), before command-line overrides.
struct RunConfig {
    std::string preset; // empty when the geometry is given explicitly
    std::vector<ShapeSpec> shapes_E;
    std::vector<ShapeSpec> shapes_F;
    int degree = 12;
    int lawson_steps = 200;
    double damping = 0.95;
    bool sign_blend = true;
    std::optional<double> capacity;

    ProblemSpec problem() const;
};

// Config JSON:
//   { "preset": "fig1a" }                         or
//   { "geometry": { "E": [shape...], "F": [shape...] } }
// plus optional "degree", "lawson_steps", "damping", "sign_blend", "capacity", "description".
// With a preset, its own settings are the defaults for the optional keys.
// Throws ValidationError(kConfig) for anything malformed or unknown.
RunConfig parse_config(const nlohmann::json &doc);
RunConfig load_config(const std::filesystem::path &path);
RunConfig preset_config(const std::string &name);

// Shape JSON, e.g. {"type": "circle", "center": [-1, 0], "radius": 0.5, "count": 200}.
// Complex numbers are a plain number or a [re, im] pair.
ShapeSpec parse_shape(const nlohmann::json &j);
nlohmann::json shape_to_json(const ShapeSpec &shape);

nlohmann::json config_to_json(const RunConfig &config);

} // namespace zolo::cli

#endif // ZOLO_CLI_CONFIG_HPP
