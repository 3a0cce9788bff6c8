#pragma once

#include <cstddef>
#include <vector>

#include "curskel/matrix.hpp"

namespace curskel {

/// Default relative threshold for every rank decision: singular values
/// >= tol * sigma_1 count toward the numerical rank.
inline constexpr double kDefaultRankTol = 1e-10;

/// Thin SVD A = W * diag(sigma) * V^T with p = min(rows, cols) columns.
/// sigma is nonincreasing; W and V have orthonormal columns (columns paired
/// with an exactly zero singular value are completed to an orthonormal set).
/// rank counts the singular values at or above tol * sigma[0] (0 for the
/// zero matrix).
struct SvdFactors {
    Matrix w;
    std::vector<double> sigma;
    Matrix v;
    std::size_t rank;
};

/// One-sided Jacobi SVD. Deterministic; throws svd_convergence_error if the
/// column orthogonalization has not settled after a fixed sweep budget.
SvdFactors svd(const Matrix& a, double tol = kDefaultRankTol);

/// Top-k factors of the SVD; the reconstruction is the best rank-<=k
/// approximation in every Schatten p-norm. Throws std::invalid_argument
/// unless 1 <= k <= min(rows, cols).
SvdFactors truncated_svd(const Matrix& a, std::size_t k);

/// Count of singular values >= tol * sigma_1; 0 for the zero matrix.
std::size_t numerical_rank(const Matrix& a, double tol = kDefaultRankTol);

/// Moore-Penrose pseudoinverse via the SVD: reciprocates the singular values
/// above the rank threshold. The zero matrix maps to the zero matrix of
/// transposed shape.
Matrix pinv(const Matrix& a, double tol = kDefaultRankTol);

/// Pseudoinverse assembled from already-computed factors (reciprocates the
/// first f.rank singular values).
Matrix pinv(const SvdFactors& f);

/// W * diag(sigma) * V^T.
Matrix reconstruct(const SvdFactors& f);

}  // namespace curskel
