#include "zolo/aaa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zolo/error.hpp"
#include "zolo/linalg.hpp"

namespace zolo {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_inputs(std::span<const Complex> points, std::span<const Complex> data, const AaaOptions &opts) {
    if (opts.degree < 0) { throw ValidationError(ErrorCode::kDomain, "degree must be >= 0"); }
    if (!(opts.tolerance >= 0.0)) { throw ValidationError(ErrorCode::kDomain, "tolerance must be >= 0"); }
    if (points.size() != data.size()) { throw ValidationError(ErrorCode::kSizeMismatch, "points and data differ in length"); }
    if (points.size() < static_cast<std::size_t>(opts.degree) + 2) {
        throw ValidationError(ErrorCode::kTooFewSamples, "need at least degree + 2 samples");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!finite(points[i]) || !finite(data[i])) { throw ValidationError(ErrorCode::kNonFinite, "samples must be finite"); }
    }
    std::vector<Complex> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError(ErrorCode::kRepeatedPoints, "sample points must be distinct");
    }
}

} // namespace

AaaReport aaa_fit(std::span<const Complex> points, std::span<const Complex> data, const AaaOptions &opts) {
    check_inputs(points, data, opts);
    const std::size_t m_samples = points.size();

    const Complex mean = std::accumulate(data.begin(), data.end(), Complex(0.0)) / static_cast<double>(m_samples);
    std::vector<Complex> approx(m_samples, mean);
    std::vector<bool> is_support(m_samples, false);

    std::vector<Complex> nodes, values;
    std::vector<std::size_t> support;
    std::vector<std::pair<int, double>> history;
    std::vector<Complex> weights;

    const bool constant = std::all_of(data.begin(), data.end(), [&](Complex f) { return f == data[0]; });
    const int max_degree = constant ? 0 : opts.degree;

    for (int step = 0; step <= max_degree; ++step) {
        std::size_t pick = m_samples;
        double worst = -1.0;
        for (std::size_t i = 0; i < m_samples; ++i) {
            if (is_support[i]) { continue; }
            const double e = std::abs(data[i] - approx[i]);
            if (e > worst) {
                worst = e;
                pick = i;
            }
        }
        is_support[pick] = true;
        support.push_back(pick);
        nodes.push_back(points[pick]);
        values.push_back(data[pick]);

        const auto cols = static_cast<Eigen::Index>(nodes.size());
        if (cols == 1) {
            weights.assign(1, Complex(1.0));
        } else {
            const auto rows = static_cast<Eigen::Index>(m_samples - nodes.size());
            // Missing rows (fewer samples than unknowns) are zero rows: they add null directions.
            linalg::Matrix loewner = linalg::Matrix::Zero(std::max(rows, cols), cols);
            Eigen::Index r = 0;
            for (std::size_t i = 0; i < m_samples; ++i) {
                if (is_support[i]) { continue; }
                for (Eigen::Index k = 0; k < cols; ++k) { loewner(r, k) = (data[i] - values[k]) / (points[i] - nodes[k]); }
                ++r;
            }
            const auto svd = linalg::svd_right(loewner);
            const linalg::Vector w = opts.sign_blend ? linalg::blended_weight_vector(svd) : linalg::min_singular_vector(svd);
            weights.assign(w.data(), w.data() + w.size());
        }

        BarycentricRational fit(nodes, values, weights);
        double err = 0.0;
        for (std::size_t i = 0; i < m_samples; ++i) {
            approx[i] = fit(points[i]);
            const double e = std::abs(data[i] - approx[i]);
            if (!std::isfinite(e)) {
                err = e;
                break;
            }
            err = std::max(err, e);
        }
        if (!std::isfinite(err)) { throw NumericalError("AAA error became non-finite at degree " + std::to_string(step)); }
        history.emplace_back(step, err);
        if (err <= opts.tolerance) { break; }
    }

    BarycentricRational fit(nodes, values, weights);
    const double final_error = history.back().second;
    return {std::move(fit), std::move(history), final_error, std::move(support)};
}

} // namespace zolo
