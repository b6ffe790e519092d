#include "zolo/presets.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "zolo/error.hpp"

namespace zolo {
namespace {

using std::numbers::pi;
constexpr Complex I{0.0, 1.0};

// 200 roots of unity scaled and shifted.
ShapeSpec circle(Complex center, double radius, int count = 200) { return Circle{center, radius, count}; }

ShapeSpec interval(Complex a, Complex b, int count) { return Interval{a, b, count}; }

// The 101 points of the 200 roots of unity with Re z >= 0.
ShapeSpec right_semicircle() { return Arc{0.0, 1.0, -pi / 2, pi / 2, 101}; }

ShapeSpec closed_polygon(std::vector<Complex> vertices, int per_side) {
    vertices.push_back(vertices.front());
    return Polyline{std::move(vertices), per_side};
}

// Equilateral triangle inscribed in the circle |z - center| = 0.5, first vertex at angle `phase`.
ShapeSpec triangle(Complex center, double phase, int per_side) {
    std::vector<Complex> v;
    for (int k = 0; k < 3; ++k) { v.push_back(center + std::polar(0.5, phase + 2.0 * pi * k / 3.0)); }
    return closed_polygon(std::move(v), per_side);
}

// Axis-aligned rectangle with `end_count` points on horizontal sides and `side_count` on vertical ones.
std::vector<ShapeSpec> rectangle(double x0, double x1, double y0, double y1, int end_count, int side_count) {
    const Complex a{x0, y0}, b{x1, y0}, c{x1, y1}, d{x0, y1};
    return {interval(a, b, end_count), interval(b, c, side_count), interval(c, d, end_count), interval(d, a, side_count)};
}

std::map<std::string, Preset, std::less<>> make_presets() {
    std::map<std::string, Preset, std::less<>> out;
    auto add = [&out](Preset p) { out.emplace(p.name, std::move(p)); };

    add({"fig1a", "circles -1+0.5S and 1+0.5S", {circle(-1.0, 0.5)}, {circle(1.0, 0.5)}});
    add({"fig1b", "intervals [-1.5,-0.5] and [0.5,1.5]", {interval(-1.5, -0.5, 200)}, {interval(0.5, 1.5, 200)}});
    add({"fig1c",
         "segment [-1-0.75i,-1+0.75i] and ellipse 1+(0.2Re S+i Im S)/sqrt(i)",
         {interval(Complex(-1.0, -0.75), Complex(-1.0, 0.75), 200)},
         {Ellipse{1.0, 0.2, 1.0, -pi / 4, 200}}});
    {
        const ShapeSpec t = right_semicircle();
        // yin: left half of the unit circle, the right half of the upper small circle and the
        // left half of the lower one, all moved left by 0.5; yang is its negative
        const std::array<std::pair<Complex, Complex>, 3> yin{{{-1.0, -0.5}, {0.5, -0.5 + 0.5 * I}, {-0.5, -0.5 - 0.5 * I}}};
        Preset p{"fig1d", "yin and yang", {}, {}};
        for (auto [scale, shift] : yin) {
            p.shapes_E.push_back(transformed(t, scale, shift));
            p.shapes_F.push_back(transformed(t, -scale, -shift));
        }
        add(std::move(p));
    }
    {
        const double h = 0.375;
        add({"fig1e",
             "three sides of a square centered at -1 and the semicircle 1-0.74T",
             {Polyline{{Complex(-1 + h, h), Complex(-1 - h, h), Complex(-1 - h, -h), Complex(-1 + h, -h)}, 100}},
             {transformed(right_semicircle(), -0.74, 1.0)}});
    }
    add({"fig1f", "graded ray (-inf,0] and interval [1,2]", {GradedRay{1.0, 0.0, 5.0, 200}}, {interval(1.0, 2.0, 200)}});

    add({"fig2a",
         "circle -1+0.5S and circles 0.8+0.3S+-0.6i",
         {circle(-1.0, 0.5)},
         {circle(Complex(0.8, 0.6), 0.3), circle(Complex(0.8, -0.6), 0.3)},
         12,
         400});
    add({"fig2b",
         "intervals [-2,-1] and [1,2] against [-0.5,0.5]",
         {interval(-2.0, -1.0, 100), interval(1.0, 2.0, 100)},
         {interval(-0.5, 0.5, 100)},
         12,
         400});
    {
        const ShapeSpec horiz = interval(-0.5, 0.5, 100);
        const ShapeSpec vert = interval(-0.5 * I, 0.5 * I, 100);
        const Complex rot = std::polar(1.0, pi / 4);
        Preset p{"fig2c", "four crosses at +-1+-i, lower-right one rotated by pi/4", {}, {}, 12, 400};
        for (const auto &arm : {horiz, vert}) {
            p.shapes_E.push_back(transformed(arm, 1.0, Complex(-1.0, 1.0)));
            p.shapes_E.push_back(transformed(arm, rot, Complex(1.0, -1.0)));
            p.shapes_F.push_back(transformed(arm, 1.0, Complex(1.0, 1.0)));
            p.shapes_F.push_back(transformed(arm, 1.0, Complex(-1.0, -1.0)));
        }
        add(std::move(p));
    }
    {
        const double s3 = 1.0 / std::sqrt(3.0);
        Preset p{"fig2d", "six equilateral triangles", {}, {}, 12, 400};
        for (Complex c : {Complex(1.0), Complex(1.0, 1.0), Complex(1.0, -1.0)}) { p.shapes_F.push_back(triangle(c, pi / 2, 100)); }
        for (Complex c : {Complex(-1.0), Complex(-1.0 - s3, 1.0), Complex(-1.0 + s3, -1.0)}) {
            p.shapes_E.push_back(triangle(c, pi / 2 + pi / 6, 100));
        }
        add(std::move(p));
    }

    add({"fig3a", "circle 0.2+0.5S inside the unit circle", {circle(0.2, 0.5)}, {circle(0.0, 1.0)}, 12, 400});
    {
        const Complex rot = std::polar(1.0, pi / 8);
        std::vector<Complex> sq;
        for (Complex v : {Complex(0.5, 0.5), Complex(-0.5, 0.5), Complex(-0.5, -0.5), Complex(0.5, -0.5)}) { sq.push_back(rot * v); }
        add({"fig3b",
             "rotated unit square inside the ellipse 1.5Re S+i Im S",
             {closed_polygon(std::move(sq), 100)},
             {Ellipse{0.0, 1.5, 1.0, 0.0, 200}},
             12,
             400});
    }
    add({"fig3c",
         "ellipse exp(0.2i)(0.4Re S+0.7i Im S) inside the unit circle",
         {Ellipse{0.0, 0.4, 0.7, 0.2, 200}},
         {circle(0.0, 1.0)},
         12,
         400});
    add({"fig3d",
         "circles 0.1+-0.5i+0.3S inside the unit circle",
         {circle(Complex(0.1, 0.5), 0.3), circle(Complex(0.1, -0.5), 0.3)},
         {circle(0.0, 1.0)},
         12,
         400});

    add({"fig5", "intervals [-1.5,-0.5] and [0.5,1.5]", {interval(-1.5, -0.5, 200)}, {interval(0.5, 1.5, 200)}, 13});
    add({"fig6", "intervals [-1.8,-0.2] and [0.5,1.5]", {interval(-1.8, -0.2, 100)}, {interval(0.5, 1.5, 100)}, 15, 150, 0.8});
    {
        Preset p{"fig7", "rectangles with outer corners +-1+-i and inner corners +-1/4+-i", rectangle(-1.0, -0.25, -1.0, 1.0, 50, 100),
                 rectangle(0.25, 1.0, -1.0, 1.0, 50, 100)};
        p.capacity = 2.78805;
        add(std::move(p));
    }
    return out;
}

const std::map<std::string, Preset, std::less<>> &registry() {
    static const auto presets = make_presets();
    return presets;
}

} // namespace

const Preset &preset(std::string_view name) {
    const auto &reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) { throw ValidationError(ErrorCode::kConfig, "unknown preset '" + std::string(name) + "'"); }
    return it->second;
}

const std::vector<std::string> &preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto &[k, v] : registry()) { n.push_back(k); }
        return n;
    }();
    return names;
}

} // namespace zolo
