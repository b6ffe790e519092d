#ifndef ZOLO_AAA_HPP
#define ZOLO_AAA_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "zolo/barycentric.hpp"

namespace zolo {

struct AaaOptions {
    int degree = 12;
    // Take barycentric weights from the 1/s² blend of all right singular vectors instead of
    // the single minimal one. Helps a lot on sign-type data.
    bool sign_blend = true;
    // Stop early once the max error over the samples is <= tolerance.
    double tolerance = 0.0;
};

struct AaaReport {
    BarycentricRational fit;
    std::vector<std::pair<int, double>> error_history; // (degree, max |r − f|) after each greedy step
    double final_error = 0.0;
    std::vector<std::size_t> support_indices; // indices into the sample list, in selection order
};

// Greedy AAA fit of `data` sampled at `points`, stopping at the requested degree.
//
// Step m adds the non-support sample with the largest current error (lowest index on ties;
// the starting approximation is the mean of the data), then takes the barycentric weights
// from the SVD of the Loewner matrix (fⱼ − fₖ)/(zⱼ − tₖ) over the remaining samples.
AaaReport aaa_fit(std::span<const Complex> points, std::span<const Complex> data, const AaaOptions &opts);

} // namespace zolo

#endif // ZOLO_AAA_HPP
