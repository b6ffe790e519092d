#ifndef ZOLO_ZOLOTAREV_HPP
#define ZOLO_ZOLOTAREV_HPP

#include <optional>
#include <string>
#include <vector>

#include "zolo/aaa.hpp"
#include "zolo/barycentric.hpp"
#include "zolo/geometry.hpp"
#include "zolo/lawson.hpp"

namespace zolo {

struct ProblemSpec {
    SampleSet samples;
    int degree = 12;
    AaaOptions aaa{};         // aaa.degree is ignored in favour of `degree`
    LawsonOptions lawson{};
};

// Best rational approximation of sign_{E/F} on the samples (the sign problem).
struct Z4Solution {
    SampleSet samples;
    int degree = 0;
    BarycentricRational r_hat;
    double tau = 1.0;                       // max over samples of |r̂ − sign|
    std::vector<double> error_curve;        // |r̂(z) − sign(z)| in samples.points() order
    std::vector<std::size_t> extremal_indices; // samples with error >= kExtremalBand · tau
    std::vector<std::pair<int, double>> aaa_history;
    std::vector<double> tau_history;        // per Lawson step
    bool degree_too_low = false;            // tau >= 1: no better than the constant 0

    static constexpr double kExtremalBand = 0.99;
};

// Ratio function r* = √σ (p + r̂)/(p − r̂), p = (1 − σ)/(1 + σ), normalized so min_F |r*| ≈ 1.
struct Z3Solution {
    BarycentricRational r_hat;
    double sigma = 1.0;
    double p = 0.0;
    std::vector<Complex> poles; // where r̂ = +p
    std::vector<Complex> zeros; // where r̂ = −p
    double min_on_F = 0.0;
    double max_on_E = 0.0;

    Complex operator()(Complex z) const;
};

struct Solution {
    Z4Solution z4;
    std::optional<Z3Solution> z3; // withheld when tau >= 1
    std::vector<std::string> warnings;
};

// σ = (τ/(1 + √(1 − τ²)))², for τ ∈ (0, 1].
double tau_to_sigma(double tau);

// τ = 2√σ/(1 + σ), for σ ∈ (0, 1].
double sigma_to_tau(double sigma);

Z4Solution solve_z4(const ProblemSpec &spec);

// Throws ValidationError(kDomain) unless 0 < tau < 1.
Z3Solution z4_to_z3(const Z4Solution &z4);

Solution solve(const ProblemSpec &spec);

inline constexpr const char *kDegreeTooLowWarning = "tau=1: degree too low";

struct SweepEntry {
    int degree = 0;
    std::optional<double> tau;
    std::optional<double> sigma;
    std::string failure; // nonempty when this degree could not be solved
};

// Independent solves per degree. Entries with tau >= 1 report sigma = 1.
// `base` supplies samples and options; its degree field is overwritten.
std::vector<SweepEntry> degree_sweep(const ProblemSpec &base, const std::vector<int> &degrees);

} // namespace zolo

#endif // ZOLO_ZOLOTAREV_HPP
