#include "zolo/cli/result.hpp"

#include <algorithm>

#include <cmath>

#include "schema_text.hpp"
#include "zolo/barycentric.hpp"

namespace zolo::cli {
namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json complex_list(std::span<const Complex> zs) {
    json out = json::array();
    for (Complex z : zs) { out.push_back(complex_json(z)); }
    return out;
}

// --- a small JSON Schema interpreter covering the keywords the result schema uses ---

class Validator {
  public:
    explicit Validator(const json &root) : root_(root) {}

    void check(const json &inst, const json &schema, const std::string &path) {
        if (schema.contains("$ref")) {
            check(inst, resolve(schema.at("$ref").get<std::string>()), path);
            return;
        }
        if (schema.contains("type") && !type_matches(inst, schema.at("type"))) {
            report(path, "expected type " + schema.at("type").dump());
            return;
        }
        if (inst.is_number()) { check_number(inst.get<double>(), schema, path); }
        if (inst.is_array()) { check_array(inst, schema, path); }
        if (inst.is_object()) { check_object(inst, schema, path); }
    }

    std::vector<std::string> errors;

  private:
    void report(const std::string &path, const std::string &msg) { errors.push_back((path.empty() ? "/" : path) + ": " + msg); }

    const json &resolve(const std::string &ref) {
        const std::string prefix = "#/$defs/";
        if (ref.rfind(prefix, 0) != 0) { throw std::logic_error("unsupported $ref " + ref); }
        return root_.at("$defs").at(ref.substr(prefix.size()));
    }

    static bool one_type(const json &inst, const std::string &t) {
        if (t == "object") { return inst.is_object(); }
        if (t == "array") { return inst.is_array(); }
        if (t == "string") { return inst.is_string(); }
        if (t == "boolean") { return inst.is_boolean(); }
        if (t == "null") { return inst.is_null(); }
        if (t == "number") { return inst.is_number(); }
        if (t == "integer") {
            if (inst.is_number_integer()) { return true; }
            if (!inst.is_number_float()) { return false; }
            const double v = inst.get<double>();
            return std::isfinite(v) && v == std::floor(v);
        }
        return false;
    }

    static bool type_matches(const json &inst, const json &type) {
        if (type.is_string()) { return one_type(inst, type.get<std::string>()); }
        for (const auto &t : type) {
            if (one_type(inst, t.get<std::string>())) { return true; }
        }
        return false;
    }

    void check_number(double v, const json &s, const std::string &path) {
        if (s.contains("minimum") && !(v >= s.at("minimum").get<double>())) { report(path, "below minimum"); }
        if (s.contains("maximum") && !(v <= s.at("maximum").get<double>())) { report(path, "above maximum"); }
        if (s.contains("exclusiveMinimum") && !(v > s.at("exclusiveMinimum").get<double>())) { report(path, "not above exclusiveMinimum"); }
    }

    void check_array(const json &inst, const json &s, const std::string &path) {
        if (s.contains("minItems") && inst.size() < s.at("minItems").get<std::size_t>()) { report(path, "too few items"); }
        if (s.contains("maxItems") && inst.size() > s.at("maxItems").get<std::size_t>()) { report(path, "too many items"); }
        if (s.contains("items")) {
            for (std::size_t i = 0; i < inst.size(); ++i) { check(inst[i], s.at("items"), path + "/" + std::to_string(i)); }
        }
    }

    void check_object(const json &inst, const json &s, const std::string &path) {
        if (s.contains("required")) {
            for (const auto &key : s.at("required")) {
                if (!inst.contains(key.get<std::string>())) { report(path, "missing required \"" + key.get<std::string>() + "\""); }
            }
        }
        if (s.contains("dependentRequired")) {
            for (const auto &[key, deps] : s.at("dependentRequired").items()) {
                if (!inst.contains(key)) { continue; }
                for (const auto &d : deps) {
                    if (!inst.contains(d.get<std::string>())) { report(path, "\"" + key + "\" requires \"" + d.get<std::string>() + "\""); }
                }
            }
        }
        const json *props = s.contains("properties") ? &s.at("properties") : nullptr;
        for (const auto &[key, value] : inst.items()) {
            if (props && props->contains(key)) {
                check(value, props->at(key), path + "/" + key);
            } else if (s.contains("additionalProperties") && s.at("additionalProperties") == false) {
                report(path, "unexpected property \"" + key + "\"");
            }
        }
    }

    const json &root_;
};

} // namespace

json result_document(const Solution &solution) {
    const Z4Solution &z4 = solution.z4;
    json doc;
    doc["degree"] = z4.degree;
    doc["tau"] = z4.tau;
    doc["support_points"] = complex_list(z4.r_hat.nodes());
    doc["node_values"] = complex_list(z4.r_hat.values());
    doc["weights"] = complex_list(z4.r_hat.weights());
    doc["poles_rhat"] = complex_list(poles(z4.r_hat));
    // r̂ ≡ 0 (degree 0) has no isolated zeros to list
    const auto alpha = z4.r_hat.numerator_weights();
    const bool zero_fn = std::all_of(alpha.begin(), alpha.end(), [](Complex a) { return a == Complex(0.0); });
    doc["zeros_rhat"] = complex_list(zero_fn ? std::vector<Complex>{} : zeros(z4.r_hat));
    doc["tau_history"] = z4.tau_history;
    json aaa = json::array();
    for (const auto &[n, err] : z4.aaa_history) { aaa.push_back(json::array({n, err})); }
    doc["aaa_history"] = aaa;
    doc["samples"] = {{"E", z4.samples.size_E()}, {"F", z4.samples.size_F()}};
    doc["warnings"] = solution.warnings;
    if (solution.z3) {
        const Z3Solution &z3 = *solution.z3;
        doc["sigma"] = z3.sigma;
        doc["p"] = z3.p;
        doc["poles_rstar"] = complex_list(z3.poles);
        doc["zeros_rstar"] = complex_list(z3.zeros);
        doc["min_on_F"] = z3.min_on_F;
        doc["max_on_E"] = z3.max_on_E;
    }
    return doc;
}

const json &result_schema() {
    static const json schema = json::parse(detail::kResultSchemaText);
    return schema;
}

std::vector<std::string> validate_result_document(const json &doc) {
    // Non-finite doubles are written as null, so validate what a reader would see.
    const json as_read = json::parse(doc.dump(-1, ' ', false, json::error_handler_t::replace));
    Validator v(result_schema());
    v.check(as_read, result_schema(), "");
    return v.errors;
}

} // namespace zolo::cli
