#ifndef ZOLO_LAWSON_HPP
#define ZOLO_LAWSON_HPP

#include <span>
#include <vector>

#include "zolo/barycentric.hpp"

namespace zolo {

struct LawsonOptions {
    int steps = 200;
    double delta = 0.95; // damping; 1 is the undamped classical update
    // For data taking exactly two values the least-squares problem splits into one block per
    // value, and its minimal vector degenerates to r ≡ one of the two values. With this flag
    // each block is solved separately and the two minimal vectors are blended with 1/s²
    // weights. Data with any other value set always uses the plain minimal vector.
    bool sign_blend = true;
};

struct LawsonState {
    std::vector<double> sample_weights; // weights that produced `fit`, summing to 1
    BarycentricRational fit;
    std::vector<double> tau_history; // max error of the iterate produced at each step
    double tau = 0.0;                // max error of `fit`
    int best_step = 0;               // 0 means the input fit was never improved on
};

// One damped weight update, wⱼ ← ((1 − δ) + δ|eⱼ|/maxₖ|eₖ|) wⱼ, renormalized to sum 1.
// Accepts δ ∈ [0, 1]; δ = 0 returns the normalized input. Weights are floored at the
// smallest normal double so they never underflow to zero.
std::vector<double> damped_weight_update(std::span<const double> weights, std::span<const double> abs_errors, double delta);

// Damped Lawson iteration on the fixed support points of `fit`.
//
// Each step solves min Σ wⱼ |D(zⱼ) fⱼ − N(zⱼ)|² over unit-norm (α, β), with rows at support
// points in their limiting form (see LawsonOptions::sign_blend for two-valued data), measures
// eⱼ = r(zⱼ) − fⱼ and updates the weights. The returned fit is the best iterate by max error,
// the input fit included.
LawsonState lawson_refine(const BarycentricRational &fit, std::span<const Complex> points, std::span<const Complex> data,
                          const LawsonOptions &opts);

} // namespace zolo

#endif // ZOLO_LAWSON_HPP
