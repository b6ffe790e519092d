#include "zolo/barycentric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "zolo/error.hpp"
#include "zolo/linalg.hpp"

namespace zolo {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double max_abs(std::span<const Complex> v) {
    double m = 0.0;
    for (Complex c : v) { m = std::max(m, std::abs(c)); }
    return m;
}

// Roots of Σ primary/(z − t) that land on a node where the companion sum's coefficient is also
// zero are shared factors of numerator and denominator, not genuine roots.
std::vector<Complex> filtered_roots(std::span<const Complex> nodes, std::span<const Complex> primary,
                                    std::span<const Complex> companion) {
    auto roots = partial_fraction_roots(nodes, primary);
    const double scale_c = max_abs(companion);
    double node_scale = 0.0;
    for (Complex t : nodes) { node_scale = std::max(node_scale, std::abs(t)); }
    const double dist_tol = 1e-8 * std::max(node_scale, 1.0);
    const double coef_tol = 1e-13 * scale_c;

    std::vector<Complex> out;
    for (Complex z : roots) {
        bool spurious = false;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (std::abs(z - nodes[k]) <= dist_tol && std::abs(companion[k]) <= coef_tol) {
                spurious = true;
                break;
            }
        }
        if (!spurious) { out.push_back(z); }
    }
    return out;
}

} // namespace

BarycentricRational::BarycentricRational(std::vector<Complex> nodes, std::vector<Complex> values, std::vector<Complex> weights) {
    if (nodes.size() != values.size() || nodes.size() != weights.size()) {
        throw ValidationError(ErrorCode::kSizeMismatch, "nodes, values and weights must have equal length");
    }
    nodes_ = std::move(nodes);
    beta_ = std::move(weights);
    alpha_.resize(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) { alpha_[k] = beta_[k] * values[k]; }
    check();
}

BarycentricRational BarycentricRational::from_coefficients(std::vector<Complex> nodes, std::vector<Complex> numerator,
                                                           std::vector<Complex> denominator) {
    if (nodes.size() != numerator.size() || nodes.size() != denominator.size()) {
        throw ValidationError(ErrorCode::kSizeMismatch, "nodes and coefficient lists must have equal length");
    }
    BarycentricRational r;
    r.nodes_ = std::move(nodes);
    r.alpha_ = std::move(numerator);
    r.beta_ = std::move(denominator);
    r.check();
    return r;
}

void BarycentricRational::check() const {
    if (nodes_.empty()) { throw ValidationError(ErrorCode::kEmptySet, "a barycentric rational needs at least one node"); }
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (!finite(nodes_[k]) || !finite(alpha_[k]) || !finite(beta_[k])) {
            throw ValidationError(ErrorCode::kNonFinite, "barycentric data must be finite");
        }
    }
    auto sorted = nodes_;
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError(ErrorCode::kRepeatedPoints, "support points must be distinct");
    }
    if (std::all_of(beta_.begin(), beta_.end(), [](Complex b) { return b == Complex(0.0); })) {
        throw ValidationError(ErrorCode::kDegenerate, "all barycentric weights are zero");
    }
}

BarycentricRational::Evaluation BarycentricRational::evaluate(Complex z) const {
    if (!finite(z)) { throw ValidationError(ErrorCode::kNonFinite, "evaluation point must be finite"); }
    auto quotient = [this](Complex x) {
        Complex num{0.0}, den{0.0};
        for (std::size_t k = 0; k < nodes_.size(); ++k) {
            const Complex c = 1.0 / (x - nodes_[k]);
            num += alpha_[k] * c;
            den += beta_[k] * c;
        }
        return std::pair{num, den};
    };
    // One step off z along the real axis, for points where the quotient has no usable value.
    auto nearby = [&quotient, z] {
        const auto [num, den] = quotient(z + 1e-8 * std::max(1.0, std::abs(z)));
        return Evaluation{num / den, true};
    };
    if (nodes_.size() == 1 && beta_[0] != Complex(0.0)) { return {alpha_[0] / beta_[0], false}; }
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (z == nodes_[k]) { return beta_[k] != Complex(0.0) ? Evaluation{alpha_[k] / beta_[k], false} : nearby(); }
    }
    const auto [num, den] = quotient(z);
    // Both sums cancelled exactly: a common factor of numerator and denominator vanishes here.
    if (num == Complex(0.0) && den == Complex(0.0)) { return nearby(); }
    return {num / den, false};
}

Complex BarycentricRational::operator()(Complex z) const { return evaluate(z).value; }

std::vector<Complex> BarycentricRational::operator()(std::span<const Complex> z) const {
    std::vector<Complex> out(z.size());
    std::transform(z.begin(), z.end(), out.begin(), [this](Complex x) { return (*this)(x); });
    return out;
}

std::vector<Complex> BarycentricRational::values() const {
    std::vector<Complex> out(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        out[k] = beta_[k] == Complex(0.0) ? Complex(std::numeric_limits<double>::infinity()) : alpha_[k] / beta_[k];
    }
    return out;
}

std::vector<Complex> partial_fraction_roots(std::span<const Complex> nodes, std::span<const Complex> coeffs) {
    if (nodes.size() != coeffs.size()) { throw ValidationError(ErrorCode::kSizeMismatch, "nodes/coefficients length mismatch"); }
    const double scale = max_abs(coeffs);
    if (!(scale > 0.0)) { throw ValidationError(ErrorCode::kDegenerate, "all coefficients are zero"); }
    const auto n = static_cast<Eigen::Index>(nodes.size());
    if (n < 2) { return {}; }

    // [0 cᵀ; 1 diag(t)] − λ diag(0, 1, …, 1)
    linalg::Matrix m = linalg::Matrix::Zero(n + 1, n + 1);
    linalg::Matrix b = linalg::Matrix::Zero(n + 1, n + 1);
    for (Eigen::Index k = 0; k < n; ++k) {
        m(0, k + 1) = coeffs[k] / scale;
        m(k + 1, 0) = 1.0;
        m(k + 1, k + 1) = nodes[k];
        b(k + 1, k + 1) = 1.0;
    }
    return linalg::generalized_eigenvalues(m, b);
}

std::vector<Complex> poles(const BarycentricRational &r) {
    return filtered_roots(r.nodes(), r.weights(), r.numerator_weights());
}

std::vector<Complex> zeros(const BarycentricRational &r) {
    if (std::all_of(r.numerator_weights().begin(), r.numerator_weights().end(), [](Complex a) { return a == Complex(0.0); })) {
        throw ValidationError(ErrorCode::kDegenerate, "r is identically zero");
    }
    return filtered_roots(r.nodes(), r.numerator_weights(), r.weights());
}

BarycentricRational shift_values(const BarycentricRational &r, Complex c) {
    std::vector<Complex> alpha(r.numerator_weights().begin(), r.numerator_weights().end());
    const auto beta = r.weights();
    for (std::size_t k = 0; k < alpha.size(); ++k) { alpha[k] += c * beta[k]; }
    return BarycentricRational::from_coefficients({r.nodes().begin(), r.nodes().end()}, std::move(alpha), {beta.begin(), beta.end()});
}

} // namespace zolo
