#ifndef ZOLO_GEOMETRY_HPP
#define ZOLO_GEOMETRY_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

namespace zolo {

using Complex = std::complex<double>;

// Shape primitives. Each one expands to a finite list of boundary samples.
// `orientation` is +1 for counterclockwise traversal and -1 for clockwise; conjugating a
// shape flips it so that conjugated parameters give bitwise-conjugated points.

// center + radius * exp(±2πik/count), k = 1..count.
struct Circle {
    Complex center{0.0};
    double radius = 1.0;
    int count = 200;
    int orientation = 1;
};

// Chebyshev points of the second kind on the segment [endpoint_a, endpoint_b].
struct Interval {
    Complex endpoint_a{-1.0};
    Complex endpoint_b{1.0};
    int count = 200;
};

// center + exp(i·rotation) * (semi_x cos θ + i·semi_y sin θ), θ = ±2πk/count, k = 1..count.
struct Ellipse {
    Complex center{0.0};
    double semi_x = 1.0;
    double semi_y = 1.0;
    double rotation = 0.0;
    int count = 200;
    int orientation = 1;
};

// center + radius * exp(iθ) for count equispaced θ from angle_start to angle_end inclusive.
struct Arc {
    Complex center{0.0};
    double radius = 1.0;
    double angle_start = 0.0;
    double angle_end = 0.0;
    int count = 101;
};

// Open polyline through `vertices`; each side carries count_per_side Chebyshev points.
// Repeat the first vertex at the end to close it.
struct Polyline {
    std::vector<Complex> vertices;
    int count_per_side = 100;
};

// anchor - 10^t for count values of t equispaced in [decade_start, decade_end].
struct GradedRay {
    Complex anchor{1.0};
    double decade_start = 0.0;
    double decade_end = 5.0;
    int count = 200;
};

class ShapeSpec;

// scale * z + shift applied to every point of `inner`.
struct Transform {
    std::shared_ptr<const ShapeSpec> inner;
    Complex scale{1.0};
    Complex shift{0.0};
};

class ShapeSpec {
  public:
    using Variant = std::variant<Circle, Interval, Ellipse, Arc, Polyline, GradedRay, Transform>;

    ShapeSpec(Circle s) : shape_(std::move(s)) {}
    ShapeSpec(Interval s) : shape_(std::move(s)) {}
    ShapeSpec(Ellipse s) : shape_(std::move(s)) {}
    ShapeSpec(Arc s) : shape_(std::move(s)) {}
    ShapeSpec(Polyline s) : shape_(std::move(s)) {}
    ShapeSpec(GradedRay s) : shape_(std::move(s)) {}
    ShapeSpec(Transform s) : shape_(std::move(s)) {}

    const Variant &variant() const noexcept { return shape_; }

  private:
    Variant shape_;
};

ShapeSpec transformed(ShapeSpec inner, Complex scale, Complex shift);

// Throws ValidationError(kInvalidShape) when a count or radius is out of range.
void validate(const ShapeSpec &shape);

std::vector<Complex> generate_points(const ShapeSpec &shape);

// Conjugates every parameter; generate_points(conjugate(s)) == conj(generate_points(s)) bitwise.
ShapeSpec conjugate(const ShapeSpec &shape);

// Number of points generate_points will produce (before any deduplication).
std::size_t point_count(const ShapeSpec &shape);

std::vector<Complex> chebyshev_points(Complex a, Complex b, int m);
std::vector<Complex> unit_circle_points(int m);

enum class Side : std::uint8_t { E, F };

// Labeled samples of E (target -1) and F (target +1).
//
// Points are stored in one ordered list. The order is fixed at construction (E first,
// then F) and swapped() only relabels, so downstream algorithms see the same sequence.
// Points on one side closer than `merge_tolerance()` are merged (first one kept); a point
// of E that close to a point of F is a disjointness error.
class SampleSet {
  public:
    SampleSet(std::span<const Complex> points_e, std::span<const Complex> points_f);

    std::span<const Complex> points() const noexcept { return points_; }
    std::span<const Side> sides() const noexcept { return sides_; }

    std::vector<Complex> points_E() const;
    std::vector<Complex> points_F() const;
    std::size_t size_E() const noexcept { return size_e_; }
    std::size_t size_F() const noexcept { return points_.size() - size_e_; }
    std::size_t size() const noexcept { return points_.size(); }

    // -1 on E, +1 on F, in points() order.
    std::vector<Complex> targets() const;

    SampleSet swapped() const;
    SampleSet conjugated() const;

    // Relative merge distance; scaled by max |z| over all points.
    static constexpr double kMergeRelTol = 1e-14;

  private:
    SampleSet() = default;

    std::vector<Complex> points_;
    std::vector<Side> sides_;
    std::size_t size_e_ = 0;
};

SampleSet build_sample_set(std::span<const ShapeSpec> shapes_e, std::span<const ShapeSpec> shapes_f);

} // namespace zolo

#endif // ZOLO_GEOMETRY_HPP
