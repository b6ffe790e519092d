#include "zolo/zolotarev.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "zolo/error.hpp"

namespace zolo {

double tau_to_sigma(double tau) {
    if (!(tau > 0.0 && tau <= 1.0)) { throw ValidationError(ErrorCode::kDomain, "tau must lie in (0, 1]"); }
    const double q = tau / (1.0 + std::sqrt((1.0 - tau) * (1.0 + tau)));
    return q * q;
}

double sigma_to_tau(double sigma) {
    if (!(sigma > 0.0 && sigma <= 1.0)) { throw ValidationError(ErrorCode::kDomain, "sigma must lie in (0, 1]"); }
    return 2.0 * std::sqrt(sigma) / (1.0 + sigma);
}

Complex Z3Solution::operator()(Complex z) const {
    const Complex q = r_hat(z);
    return std::sqrt(sigma) * (p + q) / (p - q);
}

Z4Solution solve_z4(const ProblemSpec &spec) {
    if (spec.degree < 0) { throw ValidationError(ErrorCode::kDomain, "degree must be >= 0"); }
    const auto points = spec.samples.points();
    if (points.size() < static_cast<std::size_t>(spec.degree) + 2) {
        throw ValidationError(ErrorCode::kTooFewSamples, "need at least degree + 2 samples");
    }
    const auto targets = spec.samples.targets();

    Z4Solution out{.samples = spec.samples,
                   .degree = spec.degree,
                   .r_hat = BarycentricRational({points[0]}, {0.0}, {1.0}),
                   .tau = 1.0,
                   .error_curve = {},
                   .extremal_indices = {},
                   .aaa_history = {},
                   .tau_history = {}};

    if (spec.degree == 0) {
        // The best constant approximation of ∓1 is 0, with error exactly 1 everywhere.
        out.aaa_history.emplace_back(0, 1.0);
    } else {
        AaaOptions aaa = spec.aaa;
        aaa.degree = spec.degree;
        AaaReport report = aaa_fit(points, targets, aaa);
        out.aaa_history = std::move(report.error_history);
        LawsonState refined = lawson_refine(report.fit, points, targets, spec.lawson);
        out.r_hat = std::move(refined.fit);
        out.tau_history = std::move(refined.tau_history);
    }

    out.error_curve.resize(points.size());
    double tau = 0.0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        out.error_curve[j] = std::abs(out.r_hat(points[j]) - targets[j]);
        tau = std::max(tau, out.error_curve[j]);
    }
    if (!std::isfinite(tau)) { throw NumericalError("sign approximation has a non-finite error"); }
    out.tau = tau;
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (out.error_curve[j] >= Z4Solution::kExtremalBand * tau) { out.extremal_indices.push_back(j); }
    }
    out.degree_too_low = tau >= 1.0;
    return out;
}

Z3Solution z4_to_z3(const Z4Solution &z4) {
    if (!(z4.tau > 0.0 && z4.tau < 1.0)) {
        throw ValidationError(ErrorCode::kDomain, "conversion needs 0 < tau < 1 (tau = " + std::to_string(z4.tau) + ")");
    }
    Z3Solution out{.r_hat = z4.r_hat, .sigma = tau_to_sigma(z4.tau), .p = 0.0, .poles = {}, .zeros = {}, .min_on_F = 0.0, .max_on_E = 0.0};
    out.p = (1.0 - out.sigma) / (1.0 + out.sigma);
    out.poles = zeros(shift_values(z4.r_hat, -out.p));
    out.zeros = zeros(shift_values(z4.r_hat, out.p));

    double min_f = std::numeric_limits<double>::infinity();
    double max_e = 0.0;
    const auto points = z4.samples.points();
    const auto sides = z4.samples.sides();
    for (std::size_t j = 0; j < points.size(); ++j) {
        const double mag = std::abs(out(points[j]));
        if (sides[j] == Side::F) {
            min_f = std::min(min_f, mag);
        } else {
            max_e = std::max(max_e, mag);
        }
    }
    out.min_on_F = min_f;
    out.max_on_E = max_e;
    return out;
}

Solution solve(const ProblemSpec &spec) {
    Solution out{solve_z4(spec), std::nullopt, {}};
    if (out.z4.degree_too_low) {
        out.warnings.emplace_back(kDegreeTooLowWarning);
        return out;
    }
    out.z3 = z4_to_z3(out.z4);
    if (out.z3->min_on_F < 0.9 || out.z3->min_on_F > 1.1) {
        out.warnings.push_back("min |r*| on F = " + std::to_string(out.z3->min_on_F) + " is far from 1: solution not near-optimal");
    }
    return out;
}

std::vector<SweepEntry> degree_sweep(const ProblemSpec &base, const std::vector<int> &degrees) {
    if (degrees.empty()) { throw ValidationError(ErrorCode::kConfig, "degree list is empty"); }
    if (!std::is_sorted(degrees.begin(), degrees.end())) { throw ValidationError(ErrorCode::kConfig, "degrees must be ascending"); }
    std::vector<SweepEntry> out;
    out.reserve(degrees.size());
    for (int n : degrees) {
        SweepEntry entry{.degree = n, .tau = std::nullopt, .sigma = std::nullopt, .failure = {}};
        try {
            ProblemSpec spec = base;
            spec.degree = n;
            const Z4Solution z4 = solve_z4(spec);
            entry.tau = z4.tau;
            entry.sigma = z4.tau >= 1.0 ? 1.0 : tau_to_sigma(z4.tau);
        } catch (const std::exception &e) {
            entry.failure = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace zolo
