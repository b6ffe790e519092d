#include "zolo/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "zolo/error.hpp"
#include "zolo/presets.hpp"

namespace zolo::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &msg) { throw ValidationError(ErrorCode::kConfig, msg); }

void only_keys(const json &j, const std::set<std::string> &allowed, const std::string &where) {
    for (const auto &[key, value] : j.items()) {
        if (!allowed.contains(key)) { fail(where + ": unknown key \"" + key + "\""); }
    }
}

const json &need(const json &j, const char *key, const std::string &where) {
    if (!j.contains(key)) { fail(where + ": missing \"" + key + "\""); }
    return j.at(key);
}

double real_of(const json &j, const std::string &what) {
    if (!j.is_number()) { fail(what + " must be a number"); }
    const double v = j.get<double>();
    if (!std::isfinite(v)) { fail(what + " must be finite"); }
    return v;
}

int int_of(const json &j, const std::string &what) {
    if (!j.is_number_integer()) { fail(what + " must be an integer"); }
    return j.get<int>();
}

Complex complex_of(const json &j, const std::string &what) {
    if (j.is_number()) { return {real_of(j, what), 0.0}; }
    if (j.is_array() && j.size() == 2) { return {real_of(j[0], what + "[0]"), real_of(j[1], what + "[1]")}; }
    fail(what + " must be a number or a [re, im] pair");
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

template<class T>
void optional_int(const json &j, const char *key, T &field, const std::string &where) {
    if (j.contains(key)) { field = int_of(j.at(key), where + "." + key); }
}

void optional_real(const json &j, const char *key, double &field, const std::string &where) {
    if (j.contains(key)) { field = real_of(j.at(key), where + "." + key); }
}

int orientation_of(const json &j, const std::string &where) {
    if (!j.contains("orientation")) { return 1; }
    const int o = int_of(j.at("orientation"), where + ".orientation");
    if (o != 1 && o != -1) { fail(where + ".orientation must be 1 or -1"); }
    return o;
}

std::vector<ShapeSpec> shape_list(const json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) { fail(where + " must be a nonempty list of shapes"); }
    std::vector<ShapeSpec> out;
    for (std::size_t i = 0; i < j.size(); ++i) { out.push_back(parse_shape(j[i])); }
    return out;
}

ShapeSpec parse_shape_at(const json &j, const std::string &where) {
    if (!j.is_object()) { fail(where + " must be an object"); }
    const json &type_j = need(j, "type", where);
    if (!type_j.is_string()) { fail(where + ".type must be a string"); }
    const std::string type = type_j.get<std::string>();
    const std::string at = where + "(" + type + ")";

    if (type == "circle") {
        only_keys(j, {"type", "center", "radius", "count", "orientation"}, at);
        Circle c;
        c.center = complex_of(need(j, "center", at), at + ".center");
        c.radius = real_of(need(j, "radius", at), at + ".radius");
        optional_int(j, "count", c.count, at);
        c.orientation = orientation_of(j, at);
        return c;
    }
    if (type == "interval") {
        only_keys(j, {"type", "endpoint_a", "endpoint_b", "count"}, at);
        Interval s;
        s.endpoint_a = complex_of(need(j, "endpoint_a", at), at + ".endpoint_a");
        s.endpoint_b = complex_of(need(j, "endpoint_b", at), at + ".endpoint_b");
        optional_int(j, "count", s.count, at);
        return s;
    }
    if (type == "ellipse") {
        only_keys(j, {"type", "center", "semi_x", "semi_y", "rotation", "count", "orientation"}, at);
        Ellipse e;
        e.center = complex_of(need(j, "center", at), at + ".center");
        e.semi_x = real_of(need(j, "semi_x", at), at + ".semi_x");
        e.semi_y = real_of(need(j, "semi_y", at), at + ".semi_y");
        optional_real(j, "rotation", e.rotation, at);
        optional_int(j, "count", e.count, at);
        e.orientation = orientation_of(j, at);
        return e;
    }
    if (type == "arc") {
        only_keys(j, {"type", "center", "radius", "angle_start", "angle_end", "count"}, at);
        Arc a;
        a.center = complex_of(need(j, "center", at), at + ".center");
        a.radius = real_of(need(j, "radius", at), at + ".radius");
        a.angle_start = real_of(need(j, "angle_start", at), at + ".angle_start");
        a.angle_end = real_of(need(j, "angle_end", at), at + ".angle_end");
        optional_int(j, "count", a.count, at);
        return a;
    }
    if (type == "polyline") {
        only_keys(j, {"type", "vertices", "count_per_side"}, at);
        Polyline p;
        const json &v = need(j, "vertices", at);
        if (!v.is_array()) { fail(at + ".vertices must be a list"); }
        for (std::size_t i = 0; i < v.size(); ++i) { p.vertices.push_back(complex_of(v[i], at + ".vertices[" + std::to_string(i) + "]")); }
        optional_int(j, "count_per_side", p.count_per_side, at);
        return p;
    }
    if (type == "graded_ray") {
        only_keys(j, {"type", "anchor", "decade_start", "decade_end", "count"}, at);
        GradedRay g;
        g.anchor = complex_of(need(j, "anchor", at), at + ".anchor");
        g.decade_start = real_of(need(j, "decade_start", at), at + ".decade_start");
        g.decade_end = real_of(need(j, "decade_end", at), at + ".decade_end");
        optional_int(j, "count", g.count, at);
        return g;
    }
    if (type == "transform") {
        only_keys(j, {"type", "inner", "scale", "shift"}, at);
        const ShapeSpec inner = parse_shape_at(need(j, "inner", at), at + ".inner");
        const Complex scale = j.contains("scale") ? complex_of(j.at("scale"), at + ".scale") : Complex(1.0);
        const Complex shift = j.contains("shift") ? complex_of(j.at("shift"), at + ".shift") : Complex(0.0);
        return transformed(inner, scale, shift);
    }
    fail(where + ": unknown shape type \"" + type + "\"");
}

void apply_settings(const json &doc, RunConfig &cfg) {
    optional_int(doc, "degree", cfg.degree, "config");
    optional_int(doc, "lawson_steps", cfg.lawson_steps, "config");
    optional_real(doc, "damping", cfg.damping, "config");
    if (doc.contains("sign_blend")) {
        if (!doc.at("sign_blend").is_boolean()) { fail("config.sign_blend must be true or false"); }
        cfg.sign_blend = doc.at("sign_blend").get<bool>();
    }
    if (doc.contains("capacity")) { cfg.capacity = real_of(doc.at("capacity"), "config.capacity"); }

    if (cfg.degree < 0) { fail("config.degree must be >= 0"); }
    if (cfg.lawson_steps < 0) { fail("config.lawson_steps must be >= 0"); }
    if (!(cfg.damping > 0.0 && cfg.damping <= 1.0)) { fail("config.damping must lie in (0, 1]"); }
    if (cfg.capacity && !(*cfg.capacity > 0.0)) { fail("config.capacity must be positive"); }
}

} // namespace

ShapeSpec parse_shape(const json &j) {
    ShapeSpec s = parse_shape_at(j, "shape");
    validate(s);
    return s;
}

ProblemSpec RunConfig::problem() const {
    ProblemSpec spec{build_sample_set(shapes_E, shapes_F), degree, AaaOptions{}, LawsonOptions{}};
    spec.aaa.sign_blend = sign_blend;
    spec.lawson.steps = lawson_steps;
    spec.lawson.delta = damping;
    spec.lawson.sign_blend = sign_blend;
    return spec;
}

RunConfig preset_config(const std::string &name) {
    const Preset &p = preset(name);
    RunConfig cfg;
    cfg.preset = p.name;
    cfg.shapes_E = p.shapes_E;
    cfg.shapes_F = p.shapes_F;
    cfg.degree = p.degree;
    cfg.lawson_steps = p.lawson_steps;
    cfg.damping = p.damping;
    cfg.capacity = p.capacity;
    return cfg;
}

RunConfig parse_config(const json &doc) {
    if (!doc.is_object()) { fail("config must be a JSON object"); }
    only_keys(doc, {"preset", "geometry", "degree", "lawson_steps", "damping", "sign_blend", "capacity", "description"}, "config");
    const bool has_preset = doc.contains("preset");
    if (has_preset == doc.contains("geometry")) { fail("config needs exactly one of \"preset\" and \"geometry\""); }

    RunConfig cfg;
    if (has_preset) {
        if (!doc.at("preset").is_string()) { fail("config.preset must be a string"); }
        cfg = preset_config(doc.at("preset").get<std::string>());
    } else {
        const json &g = doc.at("geometry");
        if (!g.is_object()) { fail("config.geometry must be an object"); }
        only_keys(g, {"E", "F"}, "config.geometry");
        cfg.shapes_E = shape_list(need(g, "E", "config.geometry"), "config.geometry.E");
        cfg.shapes_F = shape_list(need(g, "F", "config.geometry"), "config.geometry.F");
    }
    apply_settings(doc, cfg);
    return cfg;
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) { fail("cannot read config file " + path.string()); }
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error &e) {
        fail("malformed JSON in " + path.string() + ": " + e.what());
    }
    return parse_config(doc);
}

json shape_to_json(const ShapeSpec &shape) {
    return std::visit(
        [](const auto &s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return {{"type", "circle"}, {"center", complex_json(s.center)}, {"radius", s.radius}, {"count", s.count}, {"orientation", s.orientation}};
            } else if constexpr (std::is_same_v<T, Interval>) {
                return {{"type", "interval"}, {"endpoint_a", complex_json(s.endpoint_a)}, {"endpoint_b", complex_json(s.endpoint_b)}, {"count", s.count}};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return {{"type", "ellipse"}, {"center", complex_json(s.center)}, {"semi_x", s.semi_x}, {"semi_y", s.semi_y},
                        {"rotation", s.rotation}, {"count", s.count}, {"orientation", s.orientation}};
            } else if constexpr (std::is_same_v<T, Arc>) {
                return {{"type", "arc"}, {"center", complex_json(s.center)}, {"radius", s.radius}, {"angle_start", s.angle_start},
                        {"angle_end", s.angle_end}, {"count", s.count}};
            } else if constexpr (std::is_same_v<T, Polyline>) {
                json v = json::array();
                for (Complex z : s.vertices) { v.push_back(complex_json(z)); }
                return {{"type", "polyline"}, {"vertices", v}, {"count_per_side", s.count_per_side}};
            } else if constexpr (std::is_same_v<T, GradedRay>) {
                return {{"type", "graded_ray"}, {"anchor", complex_json(s.anchor)}, {"decade_start", s.decade_start},
                        {"decade_end", s.decade_end}, {"count", s.count}};
            } else {
                return {{"type", "transform"}, {"inner", shape_to_json(*s.inner)}, {"scale", complex_json(s.scale)}, {"shift", complex_json(s.shift)}};
            }
        },
        shape.variant());
}

json config_to_json(const RunConfig &config) {
    json e = json::array(), f = json::array();
    for (const auto &s : config.shapes_E) { e.push_back(shape_to_json(s)); }
    for (const auto &s : config.shapes_F) { f.push_back(shape_to_json(s)); }
    json doc{{"geometry", {{"E", e}, {"F", f}}},
             {"degree", config.degree},
             {"lawson_steps", config.lawson_steps},
             {"damping", config.damping},
             {"sign_blend", config.sign_blend}};
    if (config.capacity) { doc["capacity"] = *config.capacity; }
    return doc;
}

} // namespace zolo::cli
