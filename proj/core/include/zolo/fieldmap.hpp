#ifndef ZOLO_FIELDMAP_HPP
#define ZOLO_FIELDMAP_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zolo/barycentric.hpp"

namespace zolo {

struct BoundingBox {
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = -1.0;
    double y_max = 1.0;
};

// Rectangular grid of log10 magnitudes. Node (i, j) sits at x_i + i·y_j with
// x_i = x_min + i (x_max − x_min)/(nx − 1), and likewise for y.
struct FieldGrid {
    BoundingBox box;
    int nx = 0;
    int ny = 0;
    std::vector<double> values; // x-major: values[i * ny + j]
    std::size_t pole_hits = 0;  // nodes where the function was infinite or NaN (stored as +kClamp)

    static constexpr double kClamp = 300.0;

    double x(int i) const { return box.x_min + (box.x_max - box.x_min) * i / (nx - 1); }
    double y(int j) const { return box.y_min + (box.y_max - box.y_min) * j / (ny - 1); }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * ny + j]; }
};

using Evaluable = std::function<Complex(Complex)>;

// log10|r(z)| on an nx × ny grid, clamped to [−300, 300].
FieldGrid magnitude_field(const Evaluable &r, const BoundingBox &box, int nx, int ny);

// (log10|r̂ − 1|, log10|r̂ + 1|): distance of the sign approximant to +1 and to −1.
std::pair<FieldGrid, FieldGrid> sign_distance_fields(const BarycentricRational &r_hat, const BoundingBox &box, int nx, int ny);

// Lower bound e^{−n/cap} on the ratio minimum from the condenser capacity.
double capacity_bound(int n, double cap);

struct Segment {
    Complex a;
    Complex b;
};

// Marching-squares pieces of the level set {value = level}. Saddle cells are resolved
// by the cell-center average.
std::vector<Segment> contour_segments(const FieldGrid &grid, double level);

// Contour levels for display: −1, −2, … (step 1) or −1/3, −2/3, … (step 1/3), stopping
// before `floor` (typically log10 σ).
std::vector<double> contour_levels(double step, double floor, int max_levels = 60);

// Bounding box of `points` padded by `pad` times its extent on every side.
BoundingBox padded_box(const std::vector<Complex> &points, double pad);

} // namespace zolo

#endif // ZOLO_FIELDMAP_HPP
