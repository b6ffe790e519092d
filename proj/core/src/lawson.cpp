#include "zolo/lawson.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>

#include "zolo/error.hpp"
#include "zolo/linalg.hpp"

namespace zolo {
namespace {

double max_error(const BarycentricRational &r, std::span<const Complex> points, std::span<const Complex> data,
                 std::vector<double> &abs_err) {
    double worst = 0.0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        abs_err[j] = std::abs(r(points[j]) - data[j]);
        if (std::isnan(abs_err[j])) { abs_err[j] = std::numeric_limits<double>::infinity(); }
        worst = std::max(worst, abs_err[j]);
    }
    return worst;
}

std::optional<Eigen::Index> node_index(const std::vector<Complex> &nodes, Complex z) {
    auto hit = std::find(nodes.begin(), nodes.end(), z);
    if (hit == nodes.end()) { return std::nullopt; }
    return static_cast<Eigen::Index>(hit - nodes.begin());
}

// Rows D(z) f − N(z) in the unknowns (α, β). At z = tₖ the row is multiplied through by
// (z − tₖ), leaving −αₖ + f βₖ.
class JointSolver {
public:
    JointSolver(const std::vector<Complex> &nodes, std::span<const Complex> points, std::span<const Complex> data)
        : base_(linalg::Matrix::Zero(static_cast<Eigen::Index>(points.size()), 2 * static_cast<Eigen::Index>(nodes.size()))) {
        const auto n = static_cast<Eigen::Index>(nodes.size());
        for (std::size_t j = 0; j < points.size(); ++j) {
            const auto row = static_cast<Eigen::Index>(j);
            if (auto k = node_index(nodes, points[j])) {
                base_(row, *k) = -1.0;
                base_(row, n + *k) = data[j];
                continue;
            }
            for (Eigen::Index k = 0; k < n; ++k) {
                const Complex c = 1.0 / (points[j] - nodes[static_cast<std::size_t>(k)]);
                base_(row, k) = -c;
                base_(row, n + k) = data[j] * c;
            }
        }
    }

    linalg::Vector operator()(const std::vector<double> &weights) const {
        linalg::Matrix weighted(base_.rows(), base_.cols());
        for (Eigen::Index row = 0; row < base_.rows(); ++row) {
            weighted.row(row) = std::sqrt(weights[static_cast<std::size_t>(row)]) * base_.row(row);
        }
        return linalg::min_singular_vector(linalg::svd_right(weighted));
    }

private:
    linalg::Matrix base_;
};

// Data with exactly two values f₁ ≠ f₂. In u = f₁β − α and v = f₂β − α the residual at a
// sample with value f₁ is Σ uₖ/(z − tₖ) and at a sample with value f₂ it is Σ vₖ/(z − tₖ), so
// the problem is block diagonal. Each block's minimal vector makes r constant, equal to the
// other value, so the two are blended as u/s_u² ⊕ v/s_v².
class SplitSolver {
public:
    SplitSolver(const std::vector<Complex> &nodes, std::span<const Complex> points, std::span<const Complex> data, Complex f1,
                Complex f2)
        : f1_(f1), f2_(f2) {
        for (std::size_t j = 0; j < points.size(); ++j) { (data[j] == f1 ? rows1_ : rows2_).push_back(j); }
        block1_ = cauchy_block(nodes, points, rows1_);
        block2_ = cauchy_block(nodes, points, rows2_);
    }

    linalg::Vector operator()(const std::vector<double> &weights) const {
        const auto s1 = linalg::svd_right(weighted(block1_, rows1_, weights));
        const auto s2 = linalg::svd_right(weighted(block2_, rows2_, weights));
        const Eigen::Index n = block1_.cols();
        const double top = std::max(s1.singular_values.maxCoeff(), s2.singular_values.maxCoeff());
        if (!(top > 0.0)) { throw NumericalError("Lawson blocks vanished"); }
        auto inv2 = [&](const linalg::SvdResult &s) {
            const double x = std::max(s.singular_values(n - 1), linalg::kBlendFloor * top) / top;
            return 1.0 / (x * x);
        };
        const linalg::Vector u = linalg::min_singular_vector(s1) * inv2(s1);
        const linalg::Vector v = linalg::min_singular_vector(s2) * inv2(s2);
        linalg::Vector c(2 * n);
        for (Eigen::Index k = 0; k < n; ++k) {
            const Complex beta = (u(k) - v(k)) / (f1_ - f2_);
            c(k) = f1_ * beta - u(k);
            c(n + k) = beta;
        }
        return c / c.norm();
    }

private:
    static linalg::Matrix cauchy_block(const std::vector<Complex> &nodes, std::span<const Complex> points,
                                       const std::vector<std::size_t> &rows) {
        const auto n = static_cast<Eigen::Index>(nodes.size());
        // zero padding keeps rows >= cols; it does not change the singular vectors
        linalg::Matrix m = linalg::Matrix::Zero(std::max(static_cast<Eigen::Index>(rows.size()), n), n);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto row = static_cast<Eigen::Index>(r);
            const Complex z = points[rows[r]];
            if (auto k = node_index(nodes, z)) {
                m(row, *k) = 1.0;
                continue;
            }
            for (Eigen::Index k = 0; k < n; ++k) { m(row, k) = 1.0 / (z - nodes[static_cast<std::size_t>(k)]); }
        }
        return m;
    }

    static linalg::Matrix weighted(const linalg::Matrix &block, const std::vector<std::size_t> &rows,
                                   const std::vector<double> &weights) {
        linalg::Matrix out = block;
        for (std::size_t r = 0; r < rows.size(); ++r) { out.row(static_cast<Eigen::Index>(r)) *= std::sqrt(weights[rows[r]]); }
        return out;
    }

    Complex f1_;
    Complex f2_;
    std::vector<std::size_t> rows1_;
    std::vector<std::size_t> rows2_;
    linalg::Matrix block1_;
    linalg::Matrix block2_;
};

// The two distinct values of `data` in order of first appearance, if there are exactly two.
std::optional<std::pair<Complex, Complex>> two_values(std::span<const Complex> data) {
    if (data.empty()) { return std::nullopt; }
    const Complex first = data[0];
    std::optional<Complex> second;
    for (Complex f : data) {
        if (f == first) { continue; }
        if (!second) {
            second = f;
        } else if (f != *second) {
            return std::nullopt;
        }
    }
    if (!second) { return std::nullopt; }
    return std::pair{first, *second};
}

} // namespace

std::vector<double> damped_weight_update(std::span<const double> weights, std::span<const double> abs_errors, double delta) {
    if (weights.size() != abs_errors.size()) { throw ValidationError(ErrorCode::kSizeMismatch, "weights/errors length mismatch"); }
    if (!(delta >= 0.0 && delta <= 1.0)) { throw ValidationError(ErrorCode::kDomain, "damping must lie in [0, 1]"); }
    const double emax = abs_errors.empty() ? 0.0 : *std::max_element(abs_errors.begin(), abs_errors.end());
    std::vector<double> out(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const double rel = emax > 0.0 && std::isfinite(emax) ? abs_errors[j] / emax : 1.0;
        out[j] = ((1.0 - delta) + delta * rel) * weights[j];
    }
    const double sum = std::accumulate(out.begin(), out.end(), 0.0);
    if (!(sum > 0.0) || !std::isfinite(sum)) { throw NumericalError("Lawson weights collapsed"); }
    for (auto &w : out) { w = std::max(w / sum, std::numeric_limits<double>::min()); }
    return out;
}

LawsonState lawson_refine(const BarycentricRational &fit, std::span<const Complex> points, std::span<const Complex> data,
                          const LawsonOptions &opts) {
    if (opts.steps < 0) { throw ValidationError(ErrorCode::kDomain, "Lawson steps must be >= 0"); }
    if (!(opts.delta > 0.0 && opts.delta <= 1.0)) { throw ValidationError(ErrorCode::kDomain, "damping must lie in (0, 1]"); }
    if (points.size() != data.size()) { throw ValidationError(ErrorCode::kSizeMismatch, "points and data differ in length"); }
    for (Complex f : data) {
        if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
            throw ValidationError(ErrorCode::kNonFinite, "data must be finite");
        }
    }
    const std::size_t m_samples = points.size();
    const auto nodes = fit.nodes();
    if (opts.steps > 0 && m_samples < 2 * nodes.size()) {
        throw ValidationError(ErrorCode::kTooFewSamples, "fewer samples than barycentric coefficients");
    }

    std::vector<double> weights(m_samples, m_samples ? 1.0 / static_cast<double>(m_samples) : 0.0);
    std::vector<double> abs_err(m_samples);
    LawsonState state{weights, fit, {}, max_error(fit, points, data, abs_err), 0};
    if (opts.steps == 0) { return state; }

    const std::vector<Complex> node_list(nodes.begin(), nodes.end());
    const auto pair = opts.sign_blend ? two_values(data) : std::nullopt;
    const auto solver = pair ? std::function<linalg::Vector(const std::vector<double> &)>(
                                   SplitSolver(node_list, points, data, pair->first, pair->second))
                             : std::function<linalg::Vector(const std::vector<double> &)>(JointSolver(node_list, points, data));
    const auto n_nodes = static_cast<Eigen::Index>(node_list.size());

    for (int step = 1; step <= opts.steps; ++step) {
        const linalg::Vector c = solver(weights);
        std::vector<Complex> alpha(c.data(), c.data() + n_nodes);
        std::vector<Complex> beta(c.data() + n_nodes, c.data() + 2 * n_nodes);
        if (std::all_of(beta.begin(), beta.end(), [](Complex b) { return b == Complex(0.0); })) {
            throw NumericalError("Lawson step produced an all-zero denominator");
        }
        auto iterate = BarycentricRational::from_coefficients(node_list, std::move(alpha), std::move(beta));
        const double tau = max_error(iterate, points, data, abs_err);
        state.tau_history.push_back(tau);
        if (tau < state.tau) {
            state.tau = tau;
            state.fit = iterate;
            state.sample_weights = weights;
            state.best_step = step;
        }
        if (!std::isfinite(tau)) { break; }
        weights = damped_weight_update(weights, abs_err, opts.delta);
    }
    return state;
}

} // namespace zolo
