#include "curskel/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "curskel/errors.hpp"

namespace curskel {

namespace {

constexpr int kMaxSweeps = 64;
// Two columns count as orthogonal once |<p,q>| <= kOrthEps * ||p|| * ||q||.
constexpr double kOrthEps = 1e-15;

double column_dot(const std::vector<double>& m, std::size_t rows, std::size_t i, std::size_t j) {
    const double* a = &m[i * rows];
    const double* b = &m[j * rows];
    double s = 0.0;
    for (std::size_t k = 0; k < rows; ++k) s += a[k] * b[k];
    return s;
}

void rotate_columns(std::vector<double>& m, std::size_t rows, std::size_t i, std::size_t j,
                    double c, double s) {
    double* a = &m[i * rows];
    double* b = &m[j * rows];
    for (std::size_t k = 0; k < rows; ++k) {
        const double t1 = a[k];
        const double t2 = b[k];
        a[k] = c * t1 - s * t2;
        b[k] = s * t1 + c * t2;
    }
}

// Orthogonalizes the columns of B in place (one-sided Jacobi / Hestenes),
// accumulating the rotations into V. Returns false if the sweep budget ran out.
bool orthogonalize_columns(std::vector<double>& b, std::size_t rows, std::size_t cols,
                           std::vector<double>& v) {
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t j = 1; j < cols; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                const double aii = column_dot(b, rows, i, i);
                const double ajj = column_dot(b, rows, j, j);
                if (aii == 0.0 || ajj == 0.0) continue;
                const double g = column_dot(b, rows, i, j);
                if (std::abs(g) <= kOrthEps * std::sqrt(aii) * std::sqrt(ajj)) continue;
                rotated = true;
                // Diagonalize the 2x2 Gram block [[aii, g], [g, ajj]].
                const double zeta = (ajj - aii) / (2.0 * g);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                rotate_columns(b, rows, i, j, c, s);
                rotate_columns(v, cols, i, j, c, s);
            }
        }
        if (!rotated) return true;
    }
    return false;
}

// Fills any exactly-zero column of W (sigma == 0) with a unit vector
// orthogonal to every other column, chosen deterministically from the
// canonical basis.
void complete_zero_columns(std::vector<double>& w, std::size_t rows, std::size_t cols,
                           const std::vector<double>& sigma) {
    for (std::size_t j = 0; j < cols; ++j) {
        if (sigma[j] != 0.0) continue;
        std::size_t best_l = 0;
        double best_norm = -1.0;
        std::vector<double> best(rows, 0.0);
        std::vector<double> cand(rows);
        for (std::size_t l = 0; l < rows; ++l) {
            std::fill(cand.begin(), cand.end(), 0.0);
            cand[l] = 1.0;
            for (std::size_t q = 0; q < cols; ++q) {
                if (q == j) continue;
                const double* wq = &w[q * rows];
                double dot = 0.0;
                for (std::size_t k = 0; k < rows; ++k) dot += wq[k] * cand[k];
                for (std::size_t k = 0; k < rows; ++k) cand[k] -= dot * wq[k];
            }
            double nrm = 0.0;
            for (double x : cand) nrm += x * x;
            nrm = std::sqrt(nrm);
            if (nrm > best_norm) {
                best_norm = nrm;
                best_l = l;
                best = cand;
            }
        }
        (void)best_l;
        for (std::size_t k = 0; k < rows; ++k) w[j * rows + k] = best[k] / best_norm;
    }
}

Matrix from_col_major(const std::vector<double>& m, std::size_t rows, std::size_t cols) {
    std::vector<double> entries(rows * cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) entries[i * cols + j] = m[j * rows + i];
    return Matrix::from_data(rows, cols, std::move(entries));
}

std::size_t rank_from_sigma(const std::vector<double>& sigma, double tol) {
    if (sigma.empty() || sigma[0] == 0.0) return 0;
    const double threshold = tol * sigma[0];
    std::size_t r = 0;
    while (r < sigma.size() && sigma[r] >= threshold) ++r;
    return r;
}

}  // namespace

SvdFactors svd(const Matrix& a, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("rank tolerance must be positive");
    // Keep rows >= cols for the column sweep; undo by swapping the factors.
    if (a.rows() < a.cols()) {
        SvdFactors f = svd(a.transposed(), tol);
        return SvdFactors{std::move(f.v), std::move(f.sigma), std::move(f.w), f.rank};
    }

    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    std::vector<double> b(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) b[j * m + i] = a(i, j);
    std::vector<double> v(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) v[j * n + j] = 1.0;

    if (!orthogonalize_columns(b, m, n, v)) {
        throw svd_convergence_error("one-sided Jacobi SVD did not converge within " +
                                    std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(column_dot(b, m, j, j));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    std::vector<double> w_sorted(m * n);
    std::vector<double> v_sorted(n * n);
    std::vector<double> sigma_sorted(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        sigma_sorted[j] = sigma[src];
        if (sigma[src] > 0.0) {
            for (std::size_t k = 0; k < m; ++k) w_sorted[j * m + k] = b[src * m + k] / sigma[src];
        }
        for (std::size_t k = 0; k < n; ++k) v_sorted[j * n + k] = v[src * n + k];
    }
    complete_zero_columns(w_sorted, m, n, sigma_sorted);

    const std::size_t rank = rank_from_sigma(sigma_sorted, tol);
    return SvdFactors{from_col_major(w_sorted, m, n), std::move(sigma_sorted),
                      from_col_major(v_sorted, n, n), rank};
}

SvdFactors truncated_svd(const Matrix& a, std::size_t k) {
    const std::size_t p = std::min(a.rows(), a.cols());
    if (k < 1 || k > p) {
        throw std::invalid_argument("truncation order " + std::to_string(k) +
                                    " out of range [1, " + std::to_string(p) + "]");
    }
    SvdFactors f = svd(a);
    std::vector<double> w(a.rows() * k);
    std::vector<double> v(a.cols() * k);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < k; ++j) w[i * k + j] = f.w(i, j);
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < k; ++j) v[i * k + j] = f.v(i, j);
    std::vector<double> sigma(f.sigma.begin(), f.sigma.begin() + k);
    const std::size_t rank = std::min(f.rank, k);
    return SvdFactors{Matrix::from_data(a.rows(), k, std::move(w)), std::move(sigma),
                      Matrix::from_data(a.cols(), k, std::move(v)), rank};
}

std::size_t numerical_rank(const Matrix& a, double tol) { return svd(a, tol).rank; }

Matrix pinv(const SvdFactors& f) {
    const std::size_t m = f.w.rows();
    const std::size_t n = f.v.rows();
    std::vector<double> entries(n * m, 0.0);
    for (std::size_t t = 0; t < f.rank; ++t) {
        const double inv_sigma = 1.0 / f.sigma[t];
        for (std::size_t i = 0; i < n; ++i) {
            const double vi = f.v(i, t) * inv_sigma;
            if (vi == 0.0) continue;
            for (std::size_t j = 0; j < m; ++j) entries[i * m + j] += vi * f.w(j, t);
        }
    }
    return Matrix::from_data(n, m, std::move(entries));
}

Matrix pinv(const Matrix& a, double tol) { return pinv(svd(a, tol)); }

Matrix reconstruct(const SvdFactors& f) {
    const std::size_t m = f.w.rows();
    const std::size_t n = f.v.rows();
    const std::size_t p = f.sigma.size();
    std::vector<double> entries(m * n, 0.0);
    for (std::size_t t = 0; t < p; ++t) {
        if (f.sigma[t] == 0.0) continue;
        for (std::size_t i = 0; i < m; ++i) {
            const double wi = f.w(i, t) * f.sigma[t];
            for (std::size_t j = 0; j < n; ++j) entries[i * n + j] += wi * f.v(j, t);
        }
    }
    return Matrix::from_data(m, n, std::move(entries));
}

}  // namespace curskel
