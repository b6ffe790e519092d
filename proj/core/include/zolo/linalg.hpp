#ifndef ZOLO_LINALG_HPP
#define ZOLO_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace zolo::linalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct SvdResult {
    Eigen::VectorXd singular_values; // descending, >= 0
    Matrix right_vectors;            // columns are the right singular vectors (V)
};

// Full set of right singular vectors of a tall (rows >= cols) matrix.
//
// Column phases are normalized so the largest-modulus entry of every column is real and
// positive (lowest index on ties). This makes the output independent of the arbitrary
// phase the factorization would otherwise return, and keeps it exactly equivariant under
// negation and conjugation of the input.
SvdResult svd_right(const Matrix &a);

// Singular values below this fraction of the largest one are floored before forming 1/s².
inline constexpr double kBlendFloor = 1e-14;

// w = V * (1/s²), normalized to unit 2-norm. Throws ValidationError(kDegenerate) if every
// singular value is zero.
Vector blended_weight_vector(const SvdResult &svd);

// Right singular vector of the smallest singular value (last column of V).
Vector min_singular_vector(const SvdResult &svd);

// Finite generalized eigenvalues of the pencil (m, b), computed by the QZ algorithm.
// Eigenvalues with |λ|·‖b‖/‖m‖ > 1/sqrt(ε) are treated as infinite and dropped.
std::vector<Complex> generalized_eigenvalues(const Matrix &m, const Matrix &b);

} // namespace zolo::linalg

#endif // ZOLO_LINALG_HPP
