#include "zolo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "zolo/error.hpp"

namespace zolo::linalg {
namespace {

void require_finite(const Matrix &a, const char *what) {
    if (!a.allFinite()) { throw ValidationError(ErrorCode::kNonFinite, std::string(what) + " has non-finite entries"); }
}

void normalize_phase(Matrix &v) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        Eigen::Index best = 0;
        double best_abs = -1.0;
        for (Eigen::Index r = 0; r < v.rows(); ++r) {
            const double a = std::abs(v(r, c));
            if (a > best_abs) {
                best_abs = a;
                best = r;
            }
        }
        if (best_abs > 0.0) { v.col(c) *= std::conj(v(best, c)) / best_abs; }
    }
}

} // namespace

SvdResult svd_right(const Matrix &a) {
    if (a.rows() == 0 || a.cols() == 0) { throw ValidationError(ErrorCode::kEmptySet, "svd_right of an empty matrix"); }
    if (a.rows() < a.cols()) { throw ValidationError(ErrorCode::kSizeMismatch, "svd_right needs rows >= cols"); }
    require_finite(a, "svd_right input");

    Eigen::JacobiSVD<Matrix, Eigen::ColPivHouseholderQRPreconditioner> svd(a, Eigen::ComputeFullV);
    SvdResult out{svd.singularValues(), svd.matrixV()};
    if (!out.singular_values.allFinite() || !out.right_vectors.allFinite()) {
        throw NumericalError("svd_right produced non-finite output");
    }
    normalize_phase(out.right_vectors);
    return out;
}

Vector blended_weight_vector(const SvdResult &svd) {
    const auto &s = svd.singular_values;
    if (s.size() == 0 || !s.allFinite()) { throw ValidationError(ErrorCode::kDegenerate, "blend needs finite singular values"); }
    const double smax = s.maxCoeff();
    if (!(smax > 0.0)) { throw ValidationError(ErrorCode::kDegenerate, "all singular values are zero"); }
    const double floor = kBlendFloor * smax;
    // Work with s/smax so 1/s² stays in range: the floor caps it at 1e28.
    Eigen::VectorXd inv2(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        const double si = std::max(s(i), floor) / smax;
        inv2(i) = 1.0 / (si * si);
    }
    Vector w = svd.right_vectors * inv2.cast<Complex>();
    const double nrm = w.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm)) { throw NumericalError("blended weight vector vanished"); }
    return w / nrm;
}

Vector min_singular_vector(const SvdResult &svd) {
    if (svd.right_vectors.cols() == 0) { throw ValidationError(ErrorCode::kEmptySet, "no singular vectors"); }
    return svd.right_vectors.col(svd.right_vectors.cols() - 1);
}

std::vector<Complex> generalized_eigenvalues(const Matrix &m, const Matrix &b) {
    if (m.rows() != m.cols() || b.rows() != b.cols() || m.rows() != b.rows()) {
        throw ValidationError(ErrorCode::kSizeMismatch, "pencil matrices must be square and of equal size");
    }
    require_finite(m, "pencil matrix M");
    require_finite(b, "pencil matrix B");
    const auto n = static_cast<lapack_int>(m.rows());
    if (n == 0) { return {}; }

    Matrix a_work = m;
    Matrix b_work = b;
    std::vector<Complex> alpha(n), beta(n);
    Complex dummy{};
    const lapack_int info = LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', n, a_work.data(), n, b_work.data(), n, alpha.data(),
                                          beta.data(), &dummy, 1, &dummy, 1);
    if (info != 0) { throw NumericalError("QZ iteration failed (zggev info " + std::to_string(info) + ")"); }

    const double norm_m = m.norm();
    const double norm_b = b.norm();
    const double inv_sqrt_eps = 1.0 / std::sqrt(std::numeric_limits<double>::epsilon());
    std::vector<Complex> out;
    for (lapack_int i = 0; i < n; ++i) {
        const double abs_a = std::abs(alpha[i]);
        const double abs_b = std::abs(beta[i]);
        if (abs_b == 0.0) { continue; }
        if (norm_m > 0.0 && abs_a * norm_b > inv_sqrt_eps * abs_b * norm_m) { continue; }
        if (norm_m == 0.0 && abs_a > 0.0) { continue; }
        out.push_back(alpha[i] / beta[i]);
    }
    return out;
}

} // namespace zolo::linalg
