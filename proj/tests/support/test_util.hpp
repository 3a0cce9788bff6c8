#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "curskel/index_set.hpp"
#include "curskel/matrix.hpp"
#include "curskel/norms.hpp"
#include "curskel/rng.hpp"

// Hand-rolled oracles, independent of the library's SVD/pinv code paths.
namespace testutil {

using curskel::IndexSet;
using curskel::Matrix;

inline double fro(const Matrix& a) { return curskel::frobenius_norm(a); }

inline double fro_diff(const Matrix& a, const Matrix& b) {
    return curskel::frobenius_residual(a, b);
}

// Closed-form 2x2 inverse.
inline Matrix oracle_inv_2x2(const Matrix& a) {
    const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    return Matrix::from_rows({{a(1, 1) / det, -a(0, 1) / det},
                              {-a(1, 0) / det, a(0, 0) / det}});
}

// Singular values of a 2x2 matrix from the characteristic polynomial of A^T A.
struct SingularPair {
    double s1;
    double s2;
};

inline SingularPair oracle_singular_values_2x2(const Matrix& a) {
    const double g11 = a(0, 0) * a(0, 0) + a(1, 0) * a(1, 0);
    const double g22 = a(0, 1) * a(0, 1) + a(1, 1) * a(1, 1);
    const double g12 = a(0, 0) * a(0, 1) + a(1, 0) * a(1, 1);
    const double tr = g11 + g22;
    const double det = g11 * g22 - g12 * g12;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    const double l1 = (tr + disc) / 2.0;
    const double l2 = (tr - disc) / 2.0;
    return SingularPair{std::sqrt(std::max(0.0, l1)), std::sqrt(std::max(0.0, l2))};
}

// Spectral norm of a symmetric 2x2 matrix via its eigenvalues.
inline double oracle_spectral_sym_2x2(const Matrix& a) {
    const double p = a(0, 0), q = a(0, 1), r = a(1, 1);
    const double disc = std::sqrt((p - r) * (p - r) + 4.0 * q * q);
    const double l1 = (p + r + disc) / 2.0;
    const double l2 = (p + r - disc) / 2.0;
    return std::max(std::abs(l1), std::abs(l2));
}

// Pseudoinverse of the rank-1 matrix u v^T: v u^T / (||u||^2 ||v||^2).
inline Matrix oracle_rank1_pinv(const std::vector<double>& u, const std::vector<double>& v) {
    double nu = 0.0, nv = 0.0;
    for (double x : u) nu += x * x;
    for (double x : v) nv += x * x;
    std::vector<double> entries(v.size() * u.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) entries[i * u.size() + j] = v[i] * u[j] / (nu * nv);
    return Matrix::from_data(v.size(), u.size(), std::move(entries));
}

// Frobenius projection error ||A - Q Q^T A||_F where Q is a Gram-Schmidt
// orthonormal basis of the selected columns (no pseudoinverse involved).
inline double oracle_projection_error(const Matrix& a, const std::vector<std::size_t>& cols) {
    const std::size_t m = a.rows();
    std::vector<std::vector<double>> basis;
    for (std::size_t j : cols) {
        std::vector<double> v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = a(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) {
                double dot = 0.0;
                for (std::size_t i = 0; i < m; ++i) dot += q[i] * v[i];
                for (std::size_t i = 0; i < m; ++i) v[i] -= dot * q[i];
            }
        }
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm > 1e-12) {
            for (double& x : v) x /= nrm;
            basis.push_back(std::move(v));
        }
    }
    double err_sq = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<double> v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = a(i, j);
        for (const auto& q : basis) {
            double dot = 0.0;
            for (std::size_t i = 0; i < m; ++i) dot += q[i] * v[i];
            for (std::size_t i = 0; i < m; ++i) v[i] -= dot * q[i];
        }
        for (double x : v) err_sq += x * x;
    }
    return std::sqrt(err_sq);
}

struct SubsetPick {
    std::vector<std::size_t> indices;
    double error;
};

// Independent exhaustive search (recursive enumeration + the Gram-Schmidt
// error oracle; plain strict-< update).
inline void enumerate_subsets(const Matrix& a, std::size_t k, std::size_t start,
                              std::vector<std::size_t>& current, SubsetPick& best) {
    if (current.size() == k) {
        const double err = oracle_projection_error(a, current);
        if (best.indices.empty() || err < best.error) {
            best.indices = current;
            best.error = err;
        }
        return;
    }
    for (std::size_t j = start; j + (k - current.size()) <= a.cols(); ++j) {
        current.push_back(j);
        enumerate_subsets(a, k, j + 1, current, best);
        current.pop_back();
    }
}

inline SubsetPick oracle_best_subset(const Matrix& a, std::size_t k) {
    SubsetPick best{{}, 0.0};
    std::vector<std::size_t> current;
    enumerate_subsets(a, k, 0, current, best);
    return best;
}

// 4x4 block matrix [[0, I], [I, 0]]: full rank, yet selecting the first two
// rows and columns gives U = 0. Refutes the converse of the mixing identity.
inline Matrix block_counterexample() {
    return Matrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
}

}  // namespace testutil
