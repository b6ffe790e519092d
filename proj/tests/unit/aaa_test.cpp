#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zolo/aaa.hpp"
#include "zolo/error.hpp"
#include "zolo/geometry.hpp"

namespace zolo {
namespace {

std::vector<Complex> sign_data(std::size_t n_minus, std::size_t n_plus) {
    std::vector<Complex> d(n_minus, -1.0);
    d.insert(d.end(), n_plus, 1.0);
    return d;
}

std::vector<Complex> two_intervals() {
    auto pts = chebyshev_points(-1.5, -0.5, 200);
    const auto f = chebyshev_points(0.5, 1.5, 200);
    pts.insert(pts.end(), f.begin(), f.end());
    return pts;
}

TEST(AaaFit, ConstantData) {
    std::mt19937_64 rng(1);
    const auto pts = testing::random_points(rng, 10);
    const std::vector<Complex> data(10, 3.0);
    const auto rep = aaa_fit(pts, data, AaaOptions{0, true, 0.0});
    EXPECT_EQ(rep.final_error, 0.0);
    EXPECT_EQ(rep.fit.degree(), 0u);
    EXPECT_EQ(rep.fit(Complex(0.1, 7.0)), Complex(3.0));
}

TEST(AaaFit, ConstantDataStopsAtDegreeZeroEvenWhenMoreIsAsked) {
    std::mt19937_64 rng(2);
    const auto pts = testing::random_points(rng, 10);
    const std::vector<Complex> data(10, Complex(-2.0, 1.0));
    const auto rep = aaa_fit(pts, data, AaaOptions{5, true, 0.0});
    EXPECT_EQ(rep.final_error, 0.0);
    EXPECT_EQ(rep.fit.degree(), 0u);
}

TEST(AaaFit, IdentityAtDegreeOne) {
    std::mt19937_64 rng(3);
    const auto pts = testing::random_points(rng, 20);
    for (bool blend : {false, true}) {
        const auto rep = aaa_fit(pts, pts, AaaOptions{1, blend, 0.0});
        EXPECT_LE(rep.final_error, 1e-12) << "blend=" << blend;
        const auto z = zeros(rep.fit);
        ASSERT_EQ(z.size(), 1u);
        EXPECT_LT(std::abs(z[0]), 1e-12);
    }
}

TEST(AaaFit, TwoIntervalsSignBlendBeatsPlainVector) {
    const auto pts = two_intervals();
    const auto data = sign_data(200, 200);
    const auto blended = aaa_fit(pts, data, AaaOptions{13, true, 0.0});
    const auto plain = aaa_fit(pts, data, AaaOptions{13, false, 0.0});
    EXPECT_LT(blended.final_error, 1e-2);
    EXPECT_LE(blended.final_error, plain.final_error);
}

TEST(AaaFit, HistoryAndSupportInvariants) {
    const auto pts = two_intervals();
    const auto data = sign_data(200, 200);
    const auto rep = aaa_fit(pts, data, AaaOptions{10, true, 0.0});
    ASSERT_EQ(rep.fit.size(), 11u);
    ASSERT_EQ(rep.support_indices.size(), 11u);
    ASSERT_EQ(rep.error_history.size(), 11u);
    auto idx = rep.support_indices;
    std::sort(idx.begin(), idx.end());
    EXPECT_EQ(std::adjacent_find(idx.begin(), idx.end()), idx.end());
    for (std::size_t k = 0; k < rep.support_indices.size(); ++k) { EXPECT_EQ(rep.fit.nodes()[k], pts[rep.support_indices[k]]); }
    for (std::size_t m = 0; m < rep.error_history.size(); ++m) {
        EXPECT_EQ(rep.error_history[m].first, static_cast<int>(m));
        EXPECT_TRUE(std::isfinite(rep.error_history[m].second));
    }
    EXPECT_EQ(rep.final_error, rep.error_history.back().second);
}

TEST(AaaFit, NextSupportPointAttainsThePreviousMaxError) {
    const auto pts = two_intervals();
    const auto data = sign_data(200, 200);
    for (int n = 1; n <= 6; ++n) {
        const auto prev = aaa_fit(pts, data, AaaOptions{n - 1, true, 0.0});
        const auto next = aaa_fit(pts, data, AaaOptions{n, true, 0.0});
        const std::size_t chosen = next.support_indices.back();
        const double e_chosen = std::abs(prev.fit(pts[chosen]) - data[chosen]);
        EXPECT_NEAR(e_chosen, prev.final_error, 1e-12 * std::max(1.0, prev.final_error)) << "n=" << n;
    }
}

TEST(AaaFit, ConjugationEquivariance) {
    const auto s = build_sample_set(std::vector<ShapeSpec>{Circle{{-1.0, 0.3}, 0.5, 60}},
                                    std::vector<ShapeSpec>{Ellipse{{1.0, -0.2}, 0.4, 0.2, 0.5, 60}});
    const auto c = s.conjugated();
    const auto rep = aaa_fit(s.points(), s.targets(), AaaOptions{8, true, 0.0});
    const auto crep = aaa_fit(c.points(), c.targets(), AaaOptions{8, true, 0.0});
    ASSERT_EQ(rep.error_history.size(), crep.error_history.size());
    for (std::size_t m = 0; m < rep.error_history.size(); ++m) {
        EXPECT_NEAR(rep.error_history[m].second, crep.error_history[m].second, 1e-12);
    }
    EXPECT_EQ(rep.support_indices, crep.support_indices);
    for (std::size_t k = 0; k < rep.fit.size(); ++k) { EXPECT_EQ(crep.fit.nodes()[k], std::conj(rep.fit.nodes()[k])); }
}

TEST(AaaFit, AffineEquivariance) {
    const auto pts = two_intervals();
    const auto data = sign_data(200, 200);
    std::vector<Complex> moved;
    const Complex a(0.5, 1.5), b(-2.0, 0.25);
    for (Complex z : pts) { moved.push_back(a * z + b); }
    const auto rep = aaa_fit(pts, data, AaaOptions{9, true, 0.0});
    const auto mrep = aaa_fit(moved, data, AaaOptions{9, true, 0.0});
    EXPECT_EQ(rep.support_indices, mrep.support_indices);
    for (std::size_t m = 0; m < rep.error_history.size(); ++m) {
        const double e = rep.error_history[m].second;
        EXPECT_NEAR(e, mrep.error_history[m].second, 1e-9 * std::max(1.0, e));
    }
}

TEST(AaaFit, ToleranceStopsEarly) {
    std::mt19937_64 rng(4);
    const auto pts = testing::random_points(rng, 30);
    std::vector<Complex> data;
    for (Complex z : pts) { data.push_back(1.0 / (z - 3.0)); }
    const auto rep = aaa_fit(pts, data, AaaOptions{10, false, 1e-10});
    EXPECT_LE(rep.final_error, 1e-10);
    EXPECT_LE(rep.fit.degree(), 2u);
}

TEST(AaaFit, Errors) {
    std::mt19937_64 rng(5);
    const auto pts = testing::random_points(rng, 5);
    const std::vector<Complex> data(5, 1.0);
    EXPECT_THROW(aaa_fit(pts, data, AaaOptions{4, true, 0.0}), ValidationError); // needs degree + 2 samples
    auto dup = pts;
    dup[3] = dup[1];
    EXPECT_THROW(aaa_fit(dup, data, AaaOptions{1, true, 0.0}), ValidationError);
    auto bad = data;
    bad[0] = Complex(NAN, 0.0);
    EXPECT_THROW(aaa_fit(pts, bad, AaaOptions{1, true, 0.0}), ValidationError);
    EXPECT_THROW(aaa_fit(pts, std::vector<Complex>(4, 1.0), AaaOptions{1, true, 0.0}), ValidationError);
    EXPECT_THROW(aaa_fit(pts, data, AaaOptions{-1, true, 0.0}), ValidationError);
    EXPECT_THROW(aaa_fit(pts, data, AaaOptions{1, true, -1.0}), ValidationError);
}

} // namespace
} // namespace zolo
