#include "zolo/cli/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "zolo/error.hpp"

namespace zolo::cli {
namespace {

using nlohmann::json;

void dump_value(const json &j, std::string &out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case json::value_t::number_float: {
        const double v = j.get<double>();
        out += std::isfinite(v) ? format_double(v) : "null";
        break;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            break;
        }
        // short numeric rows ([re, im] pairs, history entries) stay on one line
        const bool flat = j.size() <= 2 && std::all_of(j.begin(), j.end(), [](const json &e) { return e.is_primitive(); });
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) { out += flat ? ", " : ","; }
            if (!flat) { out += "\n" + inner; }
            dump_value(j[i], out, indent + 1);
        }
        if (!flat) { out += "\n" + pad; }
        out += ']';
        break;
    }
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            break;
        }
        out += '{';
        bool first = true;
        for (const auto &[key, value] : j.items()) {
            out += first ? "\n" : ",\n";
            first = false;
            out += inner + json(key).dump() + ": ";
            dump_value(value, out, indent + 1);
        }
        out += "\n" + pad + '}';
        break;
    }
    default:
        out += j.dump();
    }
}

std::string svg_number(double x) {
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::fixed, 2);
    return std::string(buf.data(), res.ptr);
}

} // namespace

std::string format_double(double x) {
    std::array<char, 40> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string dump_json(const json &doc) {
    std::string out;
    dump_value(doc, out, 0);
    out += '\n';
    return out;
}

std::string sweep_csv(const std::vector<SweepEntry> &entries, std::optional<double> capacity) {
    std::string out = capacity ? "n,tau,sigma,lower_bound\n" : "n,tau,sigma\n";
    for (const auto &e : entries) {
        if (!e.failure.empty()) {
            out += "# n=" + std::to_string(e.degree) + " failed: " + e.failure + "\n";
            continue;
        }
        out += std::to_string(e.degree) + "," + format_double(*e.tau) + "," + format_double(*e.sigma);
        if (capacity) { out += "," + format_double(capacity_bound(e.degree, *capacity)); }
        out += "\n";
    }
    return out;
}

json sweep_json(const std::vector<SweepEntry> &entries, std::optional<double> capacity) {
    json rows = json::array();
    for (const auto &e : entries) {
        json row{{"n", e.degree}};
        if (e.failure.empty()) {
            row["tau"] = *e.tau;
            row["sigma"] = *e.sigma;
        } else {
            row["failure"] = e.failure;
        }
        if (capacity) { row["lower_bound"] = capacity_bound(e.degree, *capacity); }
        rows.push_back(row);
    }
    json doc{{"sweep", rows}};
    if (capacity) { doc["capacity"] = *capacity; }
    return doc;
}

std::string field_csv(const std::vector<std::pair<std::string, FieldGrid>> &grids) {
    std::string out;
    for (const auto &[name, g] : grids) {
        out += "# grid=" + name + "\n";
        out += "# bbox=" + format_double(g.box.x_min) + "," + format_double(g.box.x_max) + "," + format_double(g.box.y_min) + "," +
               format_double(g.box.y_max) + "\n";
        out += "# nx=" + std::to_string(g.nx) + ",ny=" + std::to_string(g.ny) + ",pole_hits=" + std::to_string(g.pole_hits) + "\n";
        for (int j = 0; j < g.ny; ++j) {
            for (int i = 0; i < g.nx; ++i) {
                if (i) { out += ','; }
                out += format_double(g.at(i, j));
            }
            out += '\n';
        }
    }
    return out;
}

std::string field_svg(const SvgScene &scene) {
    if (scene.grids.empty()) { throw ValidationError(ErrorCode::kConfig, "nothing to draw"); }
    const BoundingBox box = scene.grids.front().second.box;
    const double width = 800.0;
    const double height = width * (box.y_max - box.y_min) / (box.x_max - box.x_min);
    auto px = [&](Complex z) {
        return std::pair{(z.real() - box.x_min) / (box.x_max - box.x_min) * width, (box.y_max - z.imag()) / (box.y_max - box.y_min) * height};
    };
    auto dot = [&](Complex z, double r, const char *fill) {
        const auto [x, y] = px(z);
        return "<circle cx=\"" + svg_number(x) + "\" cy=\"" + svg_number(y) + "\" r=\"" + svg_number(r) + "\" fill=\"" + fill + "\"/>\n";
    };
    static constexpr std::array<const char *, 2> kColours{"#333333", "#1b7837"};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_number(width) << "\" height=\"" << svg_number(height)
        << "\" viewBox=\"0 0 " << svg_number(width) << ' ' << svg_number(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t g = 0; g < scene.grids.size(); ++g) {
        svg << "<g id=\"" << scene.grids[g].first << "\" stroke=\"" << kColours[g % kColours.size()] << "\" stroke-width=\"0.8\" fill=\"none\">\n";
        for (double level : scene.levels) {
            const auto segs = contour_segments(scene.grids[g].second, level);
            if (segs.empty()) { continue; }
            svg << "<path data-level=\"" << format_double(level) << "\" d=\"";
            for (const auto &s : segs) {
                const auto [x0, y0] = px(s.a);
                const auto [x1, y1] = px(s.b);
                svg << 'M' << svg_number(x0) << ' ' << svg_number(y0) << 'L' << svg_number(x1) << ' ' << svg_number(y1);
            }
            svg << "\"/>\n";
        }
        svg << "</g>\n";
    }
    svg << "<g id=\"samples\">\n";
    for (Complex z : scene.points_E) { svg << dot(z, 0.8, "#888888"); }
    for (Complex z : scene.points_F) { svg << dot(z, 0.8, "#888888"); }
    svg << "</g>\n<g id=\"poles\">\n";
    for (Complex z : scene.poles) { svg << dot(z, 3.0, "#d62728"); }
    svg << "</g>\n<g id=\"zeros\">\n";
    for (Complex z : scene.zeros) { svg << dot(z, 3.0, "#1f77b4"); }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

} // namespace zolo::cli
