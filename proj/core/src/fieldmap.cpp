#include "zolo/fieldmap.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "zolo/error.hpp"

namespace zolo {
namespace {

void check_grid(const BoundingBox &box, int nx, int ny) {
    if (nx < 2 || ny < 2) { throw ValidationError(ErrorCode::kDomain, "grid needs nx, ny >= 2"); }
    if (!(box.x_min < box.x_max) || !(box.y_min < box.y_max)) {
        throw ValidationError(ErrorCode::kDomain, "bounding box must satisfy x_min < x_max and y_min < y_max");
    }
    if (!std::isfinite(box.x_min) || !std::isfinite(box.x_max) || !std::isfinite(box.y_min) || !std::isfinite(box.y_max)) {
        throw ValidationError(ErrorCode::kNonFinite, "bounding box must be finite");
    }
}

template<class F>
FieldGrid sample(const BoundingBox &box, int nx, int ny, F &&log_magnitude) {
    check_grid(box, nx, ny);
    FieldGrid g{box, nx, ny, std::vector<double>(static_cast<std::size_t>(nx) * ny), 0};
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            double v = log_magnitude(Complex(g.x(i), g.y(j)));
            if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
                v = FieldGrid::kClamp;
                ++g.pole_hits;
            }
            g.values[static_cast<std::size_t>(i) * ny + j] = std::clamp(v, -FieldGrid::kClamp, FieldGrid::kClamp);
        }
    }
    return g;
}

} // namespace

FieldGrid magnitude_field(const Evaluable &r, const BoundingBox &box, int nx, int ny) {
    return sample(box, nx, ny, [&r](Complex z) { return std::log10(std::abs(r(z))); });
}

std::pair<FieldGrid, FieldGrid> sign_distance_fields(const BarycentricRational &r_hat, const BoundingBox &box, int nx, int ny) {
    auto minus_one = sample(box, nx, ny, [&r_hat](Complex z) { return std::log10(std::abs(r_hat(z) - 1.0)); });
    auto plus_one = sample(box, nx, ny, [&r_hat](Complex z) { return std::log10(std::abs(r_hat(z) + 1.0)); });
    return {std::move(minus_one), std::move(plus_one)};
}

double capacity_bound(int n, double cap) {
    if (n < 0) { throw ValidationError(ErrorCode::kDomain, "degree must be >= 0"); }
    if (!(cap > 0.0) || !std::isfinite(cap)) { throw ValidationError(ErrorCode::kDomain, "capacity must be positive"); }
    return std::exp(-n / cap);
}

std::vector<Segment> contour_segments(const FieldGrid &grid, double level) {
    std::vector<Segment> out;
    auto point = [&](int i, int j) { return Complex(grid.x(i), grid.y(j)); };
    // Crossing on the edge between two nodes with values on opposite sides of `level`.
    auto cross = [&](Complex p, double vp, Complex q, double vq) { return p + (q - p) * ((level - vp) / (vq - vp)); };

    for (int i = 0; i + 1 < grid.nx; ++i) {
        for (int j = 0; j + 1 < grid.ny; ++j) {
            // corners counterclockwise from (i, j)
            const std::array<Complex, 4> p{point(i, j), point(i + 1, j), point(i + 1, j + 1), point(i, j + 1)};
            const std::array<double, 4> v{grid.at(i, j), grid.at(i + 1, j), grid.at(i + 1, j + 1), grid.at(i, j + 1)};
            int mask = 0;
            for (int c = 0; c < 4; ++c) {
                if (v[c] > level) { mask |= 1 << c; }
            }
            if (mask == 0 || mask == 15) { continue; }
            std::array<Complex, 4> e{}; // crossing on edge c: corner c -> corner c+1
            for (int c = 0; c < 4; ++c) {
                const int d = (c + 1) % 4;
                if (((mask >> c) & 1) != ((mask >> d) & 1)) { e[c] = cross(p[c], v[c], p[d], v[d]); }
            }
            switch (mask) {
            case 1: case 14: out.push_back({e[3], e[0]}); break;
            case 2: case 13: out.push_back({e[0], e[1]}); break;
            case 3: case 12: out.push_back({e[3], e[1]}); break;
            case 4: case 11: out.push_back({e[1], e[2]}); break;
            case 6: case 9: out.push_back({e[0], e[2]}); break;
            case 7: case 8: out.push_back({e[2], e[3]}); break;
            case 5: case 10: {
                const double centre = 0.25 * (v[0] + v[1] + v[2] + v[3]);
                const bool centre_high = centre > level;
                // corners 0 and 2 share a state; join each crossing to the one around the
                // corner whose state differs from the centre
                if ((mask == 5) == centre_high) {
                    out.push_back({e[0], e[1]});
                    out.push_back({e[2], e[3]});
                } else {
                    out.push_back({e[3], e[0]});
                    out.push_back({e[1], e[2]});
                }
                break;
            }
            default: break;
            }
        }
    }
    return out;
}

std::vector<double> contour_levels(double step, double floor, int max_levels) {
    std::vector<double> out;
    for (int k = 1; k <= max_levels; ++k) {
        const double lvl = -step * k;
        if (lvl <= floor) { break; }
        out.push_back(lvl);
    }
    return out;
}

BoundingBox padded_box(const std::vector<Complex> &points, double pad) {
    if (points.empty()) { throw ValidationError(ErrorCode::kEmptySet, "no points to bound"); }
    BoundingBox b{points[0].real(), points[0].real(), points[0].imag(), points[0].imag()};
    for (Complex z : points) {
        b.x_min = std::min(b.x_min, z.real());
        b.x_max = std::max(b.x_max, z.real());
        b.y_min = std::min(b.y_min, z.imag());
        b.y_max = std::max(b.y_max, z.imag());
    }
    const double wx = std::max(b.x_max - b.x_min, 1e-3);
    const double wy = std::max(b.y_max - b.y_min, 1e-3);
    // degenerate extents (all points on a horizontal line) borrow the other dimension
    const double ex = std::max(wx, 0.5 * wy), ey = std::max(wy, 0.5 * wx);
    const double cx = 0.5 * (b.x_min + b.x_max), cy = 0.5 * (b.y_min + b.y_max);
    return {cx - 0.5 * ex - pad * ex, cx + 0.5 * ex + pad * ex, cy - 0.5 * ey - pad * ey, cy + 0.5 * ey + pad * ey};
}

} // namespace zolo
