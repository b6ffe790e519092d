#include "zolo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zolo/error.hpp"

namespace zolo {
namespace {

template<class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template<class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_count(int count, const char *what) {
    if (count < 1) { throw ValidationError(ErrorCode::kInvalidShape, std::string(what) + ": count must be >= 1"); }
}

void require_positive(double v, const char *what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ValidationError(ErrorCode::kInvalidShape, std::string(what) + " must be positive and finite");
    }
}

void require_orientation(int o) {
    if (o != 1 && o != -1) { throw ValidationError(ErrorCode::kInvalidShape, "orientation must be +1 or -1"); }
}

void require_finite(Complex z, const char *what) {
    if (!finite(z)) { throw ValidationError(ErrorCode::kInvalidShape, std::string(what) + " must be finite"); }
}

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) { throw ValidationError(ErrorCode::kInvalidShape, std::string(what) + " must be finite"); }
}

// cos θ + i·orientation·sin θ with θ = 2πk/m
Complex root_of_unity(int k, int m, int orientation) {
    const double theta = 2.0 * std::numbers::pi * k / m;
    return {std::cos(theta), orientation * std::sin(theta)};
}

} // namespace

std::vector<Complex> chebyshev_points(Complex a, Complex b, int m) {
    if (m < 1) { throw ValidationError(ErrorCode::kEmptySet, "chebyshev_points needs m >= 1"); }
    if (a == b) { throw ValidationError(ErrorCode::kDegenerateSegment, "segment endpoints coincide"); }
    if (!finite(a) || !finite(b)) { throw ValidationError(ErrorCode::kNonFinite, "segment endpoints must be finite"); }
    std::vector<Complex> pts;
    pts.reserve(m);
    if (m == 1) {
        pts.push_back(0.5 * (a + b));
        return pts;
    }
    // sin form keeps the reference points exactly antisymmetric about 0
    for (int k = 0; k < m; ++k) {
        const double x = std::sin(std::numbers::pi * (2 * k - (m - 1)) / (2.0 * (m - 1)));
        pts.push_back(0.5 * (a * (1.0 - x) + b * (1.0 + x)));
    }
    return pts;
}

std::vector<Complex> unit_circle_points(int m) {
    if (m < 1) { throw ValidationError(ErrorCode::kEmptySet, "unit_circle_points needs m >= 1"); }
    std::vector<Complex> pts;
    pts.reserve(m);
    for (int k = 1; k <= m; ++k) { pts.push_back(root_of_unity(k, m, 1)); }
    return pts;
}

ShapeSpec transformed(ShapeSpec inner, Complex scale, Complex shift) {
    return Transform{std::make_shared<const ShapeSpec>(std::move(inner)), scale, shift};
}

void validate(const ShapeSpec &shape) {
    std::visit(Overloaded{
                 [](const Circle &c) {
                     require_count(c.count, "circle");
                     require_positive(c.radius, "circle radius");
                     require_finite(c.center, "circle center");
                     require_orientation(c.orientation);
                 },
                 [](const Interval &s) {
                     require_count(s.count, "interval");
                     require_finite(s.endpoint_a, "interval endpoint");
                     require_finite(s.endpoint_b, "interval endpoint");
                     if (s.endpoint_a == s.endpoint_b) {
                         throw ValidationError(ErrorCode::kDegenerateSegment, "interval endpoints coincide");
                     }
                 },
                 [](const Ellipse &e) {
                     require_count(e.count, "ellipse");
                     require_positive(e.semi_x, "ellipse semi_x");
                     require_positive(e.semi_y, "ellipse semi_y");
                     require_finite(e.center, "ellipse center");
                     require_finite(e.rotation, "ellipse rotation");
                     require_orientation(e.orientation);
                 },
                 [](const Arc &a) {
                     require_count(a.count, "arc");
                     require_positive(a.radius, "arc radius");
                     require_finite(a.center, "arc center");
                     require_finite(a.angle_start, "arc angle_start");
                     require_finite(a.angle_end, "arc angle_end");
                 },
                 [](const Polyline &p) {
                     require_count(p.count_per_side, "polyline");
                     if (p.vertices.size() < 2) {
                         throw ValidationError(ErrorCode::kInvalidShape, "polyline needs at least two vertices");
                     }
                     for (std::size_t i = 0; i < p.vertices.size(); ++i) {
                         require_finite(p.vertices[i], "polyline vertex");
                         if (i > 0 && p.vertices[i] == p.vertices[i - 1]) {
                             throw ValidationError(ErrorCode::kDegenerateSegment, "polyline has a zero-length side");
                         }
                     }
                 },
                 [](const GradedRay &g) {
                     require_count(g.count, "graded_ray");
                     require_finite(g.anchor, "graded_ray anchor");
                     require_finite(g.decade_start, "graded_ray decade_start");
                     require_finite(g.decade_end, "graded_ray decade_end");
                     if (std::max(g.decade_start, g.decade_end) > 300.0) {
                         throw ValidationError(ErrorCode::kInvalidShape, "graded_ray decades overflow");
                     }
                 },
                 [](const Transform &t) {
                     if (!t.inner) { throw ValidationError(ErrorCode::kInvalidShape, "transform without inner shape"); }
                     require_finite(t.scale, "transform scale");
                     require_finite(t.shift, "transform shift");
                     if (t.scale == Complex(0.0)) {
                         throw ValidationError(ErrorCode::kInvalidShape, "transform scale must be nonzero");
                     }
                     validate(*t.inner);
                 },
               },
               shape.variant());
}

std::vector<Complex> generate_points(const ShapeSpec &shape) {
    validate(shape);
    return std::visit(
      Overloaded{
        [](const Circle &c) {
            std::vector<Complex> pts;
            pts.reserve(c.count);
            for (int k = 1; k <= c.count; ++k) { pts.push_back(c.center + c.radius * root_of_unity(k, c.count, c.orientation)); }
            return pts;
        },
        [](const Interval &s) { return chebyshev_points(s.endpoint_a, s.endpoint_b, s.count); },
        [](const Ellipse &e) {
            const Complex rot{std::cos(e.rotation), std::sin(e.rotation)};
            std::vector<Complex> pts;
            pts.reserve(e.count);
            for (int k = 1; k <= e.count; ++k) {
                const Complex u = root_of_unity(k, e.count, e.orientation);
                pts.push_back(e.center + rot * Complex(e.semi_x * u.real(), e.semi_y * u.imag()));
            }
            return pts;
        },
        [](const Arc &a) {
            std::vector<Complex> pts;
            pts.reserve(a.count);
            for (int j = 0; j < a.count; ++j) {
                const double frac = a.count == 1 ? 0.0 : static_cast<double>(j) / (a.count - 1);
                const double theta = a.angle_start + (a.angle_end - a.angle_start) * frac;
                pts.push_back(a.center + a.radius * Complex(std::cos(theta), std::sin(theta)));
            }
            return pts;
        },
        [](const Polyline &p) {
            std::vector<Complex> pts;
            pts.reserve((p.vertices.size() - 1) * p.count_per_side);
            for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
                auto side = chebyshev_points(p.vertices[i], p.vertices[i + 1], p.count_per_side);
                pts.insert(pts.end(), side.begin(), side.end());
            }
            return pts;
        },
        [](const GradedRay &g) {
            std::vector<Complex> pts;
            pts.reserve(g.count);
            for (int j = 0; j < g.count; ++j) {
                const double frac = g.count == 1 ? 0.0 : static_cast<double>(j) / (g.count - 1);
                const double t = g.decade_start + (g.decade_end - g.decade_start) * frac;
                pts.push_back(g.anchor - std::pow(10.0, t));
            }
            return pts;
        },
        [](const Transform &t) {
            auto pts = generate_points(*t.inner);
            for (auto &z : pts) { z = t.scale * z + t.shift; }
            return pts;
        },
      },
      shape.variant());
}

ShapeSpec conjugate(const ShapeSpec &shape) {
    return std::visit(Overloaded{
                        [](const Circle &c) -> ShapeSpec {
                            return Circle{std::conj(c.center), c.radius, c.count, -c.orientation};
                        },
                        [](const Interval &s) -> ShapeSpec {
                            return Interval{std::conj(s.endpoint_a), std::conj(s.endpoint_b), s.count};
                        },
                        [](const Ellipse &e) -> ShapeSpec {
                            return Ellipse{std::conj(e.center), e.semi_x, e.semi_y, -e.rotation, e.count, -e.orientation};
                        },
                        [](const Arc &a) -> ShapeSpec {
                            return Arc{std::conj(a.center), a.radius, -a.angle_start, -a.angle_end, a.count};
                        },
                        [](const Polyline &p) -> ShapeSpec {
                            Polyline out = p;
                            for (auto &v : out.vertices) { v = std::conj(v); }
                            return out;
                        },
                        [](const GradedRay &g) -> ShapeSpec {
                            return GradedRay{std::conj(g.anchor), g.decade_start, g.decade_end, g.count};
                        },
                        [](const Transform &t) -> ShapeSpec {
                            if (!t.inner) { throw ValidationError(ErrorCode::kInvalidShape, "transform without inner shape"); }
                            return transformed(conjugate(*t.inner), std::conj(t.scale), std::conj(t.shift));
                        },
                      },
                      shape.variant());
}

std::size_t point_count(const ShapeSpec &shape) {
    return std::visit(Overloaded{
                        [](const Polyline &p) -> std::size_t {
                            return p.vertices.size() < 2 ? 0 : (p.vertices.size() - 1) * p.count_per_side;
                        },
                        [](const Transform &t) -> std::size_t { return t.inner ? point_count(*t.inner) : 0; },
                        [](const auto &s) -> std::size_t { return static_cast<std::size_t>(std::max(s.count, 0)); },
                      },
                      shape.variant());
}

SampleSet::SampleSet(std::span<const Complex> points_e, std::span<const Complex> points_f) {
    if (points_e.empty() || points_f.empty()) {
        throw ValidationError(ErrorCode::kEmptySet, "both E and F need at least one point");
    }
    double scale = 0.0;
    for (auto side : {points_e, points_f}) {
        for (Complex z : side) {
            if (!finite(z)) { throw ValidationError(ErrorCode::kNonFinite, "sample points must be finite"); }
            scale = std::max(scale, std::abs(z));
        }
    }
    const double tol = kMergeRelTol * std::max(scale, 1.0);

    auto near = [tol](Complex a, Complex b) { return a == b || std::abs(a - b) <= tol; };

    auto append_unique = [&](std::span<const Complex> side, Side label) {
        const std::size_t begin = points_.size();
        for (Complex z : side) {
            const bool dup = std::any_of(points_.begin() + begin, points_.end(), [&](Complex w) { return near(z, w); });
            if (!dup) {
                points_.push_back(z);
                sides_.push_back(label);
            }
        }
    };
    append_unique(points_e, Side::E);
    size_e_ = points_.size();
    append_unique(points_f, Side::F);

    for (std::size_t i = 0; i < size_e_; ++i) {
        for (std::size_t j = size_e_; j < points_.size(); ++j) {
            if (near(points_[i], points_[j])) {
                throw ValidationError(ErrorCode::kDisjointness, "E and F share the point (" + std::to_string(points_[i].real()) +
                                                                  ", " + std::to_string(points_[i].imag()) + ")");
            }
        }
    }
}

std::vector<Complex> SampleSet::points_E() const {
    std::vector<Complex> out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (sides_[i] == Side::E) { out.push_back(points_[i]); }
    }
    return out;
}

std::vector<Complex> SampleSet::points_F() const {
    std::vector<Complex> out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (sides_[i] == Side::F) { out.push_back(points_[i]); }
    }
    return out;
}

std::vector<Complex> SampleSet::targets() const {
    std::vector<Complex> out(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) { out[i] = sides_[i] == Side::E ? -1.0 : 1.0; }
    return out;
}

SampleSet SampleSet::swapped() const {
    SampleSet out = *this;
    for (auto &s : out.sides_) { s = s == Side::E ? Side::F : Side::E; }
    out.size_e_ = points_.size() - size_e_;
    return out;
}

SampleSet SampleSet::conjugated() const {
    SampleSet out = *this;
    for (auto &z : out.points_) { z = std::conj(z); }
    return out;
}

SampleSet build_sample_set(std::span<const ShapeSpec> shapes_e, std::span<const ShapeSpec> shapes_f) {
    if (shapes_e.empty() || shapes_f.empty()) {
        throw ValidationError(ErrorCode::kEmptySet, "both E and F need at least one shape");
    }
    auto collect = [](std::span<const ShapeSpec> shapes) {
        std::vector<Complex> pts;
        for (const auto &s : shapes) {
            auto p = generate_points(s);
            pts.insert(pts.end(), p.begin(), p.end());
        }
        return pts;
    };
    const auto e = collect(shapes_e);
    const auto f = collect(shapes_f);
    return SampleSet(e, f);
}

} // namespace zolo
