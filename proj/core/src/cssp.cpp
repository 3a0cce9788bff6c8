#include "curskel/cssp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "curskel/errors.hpp"
#include "curskel/rng.hpp"

namespace curskel {

namespace {

constexpr double kGreedyStopNorm = 1e-12;
// Singular values within this relative distance of sigma_k join the sampling
// subspace, so degenerate spectra are not tie-broken by SVD column order.
constexpr double kLeverageTieTol = 1e-10;

SelectionResult finish(const Matrix& a, IndexSet indices, std::uint64_t subsets, double tol) {
    const double err_f = cssp_error(a, indices, NormKind::frobenius(), tol);
    const double err_2 = cssp_error(a, indices, NormKind::spectral(), tol);
    return SelectionResult{std::move(indices), err_f, err_2, subsets};
}

void check_k_distinct(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("subset size " + std::to_string(k) + " out of range [1, " +
                                    std::to_string(n) + "]");
    }
}

// C(n, k) capped at budget + 1 to avoid overflow.
std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
    if (k > n - k) k = n - k;
    std::uint64_t count = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        if (count > cap) return cap + 1;
        count = count * (n - k + i) / i;
    }
    return std::min<std::uint64_t>(count, cap + 1);
}

IndexSet greedy_pivot(const Matrix& a, std::size_t k) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    check_k_distinct(k, n);

    // Residual columns, updated by modified Gram-Schmidt against each pick.
    std::vector<std::vector<double>> res(n, std::vector<double>(m));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) res[j][i] = a(i, j);

    std::vector<std::size_t> picks;
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t pivot = 0;
        double best_sq = -1.0;
        for (std::size_t j = 0; j < n; ++j) {
            double sq = 0.0;
            for (double x : res[j]) sq += x * x;
            if (sq > best_sq) {
                best_sq = sq;
                pivot = j;
            }
        }
        if (std::sqrt(best_sq) < kGreedyStopNorm) break;  // result shrinks
        picks.push_back(pivot);

        std::vector<double> q = res[pivot];
        const double nrm = std::sqrt(best_sq);
        for (double& x : q) x /= nrm;
        for (std::size_t j = 0; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = 0; i < m; ++i) dot += q[i] * res[j][i];
            for (std::size_t i = 0; i < m; ++i) res[j][i] -= dot * q[i];
        }
    }
    if (picks.empty()) {
        throw std::invalid_argument("greedy selection found no column above the residual floor");
    }
    return IndexSet(std::move(picks));
}

IndexSet uniform_random(SeededRng& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> picks;
    picks.reserve(k);
    for (std::size_t i = 0; i < k; ++i) picks.push_back(rng.uniform_index(n));
    return IndexSet(std::move(picks));
}

IndexSet leverage_sample(const Matrix& a, std::size_t k, SeededRng& rng, double tol) {
    if (k < 1) throw std::invalid_argument("sample size must be at least 1");
    const SvdFactors f = svd(a, tol);
    if (f.rank == 0) {
        throw std::invalid_argument("leverage-score sampling is undefined for the zero matrix");
    }
    std::size_t subspace = std::min(k, f.rank);
    // Extend past ties with sigma_k so equal directions get equal weight.
    const double floor = f.sigma[subspace - 1] - kLeverageTieTol * f.sigma[0];
    while (subspace < f.sigma.size() && f.sigma[subspace] >= floor) ++subspace;

    const std::size_t n = a.cols();
    std::vector<double> scores(n, 0.0);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < subspace; ++t) scores[j] += f.v(j, t) * f.v(j, t);
        total += scores[j];
    }

    std::vector<std::size_t> picks;
    picks.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double u = rng.uniform01() * total;
        double acc = 0.0;
        std::size_t chosen = n - 1;
        for (std::size_t j = 0; j < n; ++j) {
            acc += scores[j];
            if (u < acc) {
                chosen = j;
                break;
            }
        }
        picks.push_back(chosen);
    }
    return IndexSet(std::move(picks));
}

}  // namespace

double cssp_error(const Matrix& a, const IndexSet& cols, NormKind kind, double tol) {
    cols.validate_bound(a.cols(), "column");
    const Matrix c = a.gather_cols(cols);
    const Matrix residual = a - c * (pinv(c, tol) * a);
    return norm(residual, kind);
}

SelectionResult exhaustive_cssp(const Matrix& a, std::size_t k, NormKind kind,
                                std::uint64_t budget) {
    const std::size_t n = a.cols();
    check_k_distinct(k, n);
    if (binomial_capped(n, k, budget) > budget) {
        throw budget_exceeded_error("C(" + std::to_string(n) + ", " + std::to_string(k) +
                                    ") subsets exceed the enumeration budget of " +
                                    std::to_string(budget));
    }

    const double tie_slack = 1e-12 * std::max(1.0, frobenius_norm(a));
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;

    std::vector<std::size_t> best;
    double best_err = 0.0;
    std::uint64_t examined = 0;
    while (true) {
        const double err = cssp_error(a, IndexSet(subset), kind);
        ++examined;
        if (best.empty() || err < best_err - tie_slack) {
            best = subset;
            best_err = err;
        }
        // Advance to the next lexicographic combination.
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return finish(a, IndexSet(std::move(best)), examined, kDefaultRankTol);
}

SelectionResult select_columns(const Matrix& a, std::size_t k, SelectionStrategy strategy,
                               NormKind kind) {
    switch (strategy.kind) {
        case Strategy::Exhaustive:
            return exhaustive_cssp(a, k, kind);
        case Strategy::GreedyPivot:
            return finish(a, greedy_pivot(a, k), 0, kDefaultRankTol);
        case Strategy::UniformRandom: {
            if (k < 1) throw std::invalid_argument("sample size must be at least 1");
            SeededRng rng(strategy.seed);
            return finish(a, uniform_random(rng, a.cols(), k), 0, kDefaultRankTol);
        }
        case Strategy::LeverageScore: {
            SeededRng rng(strategy.seed);
            return finish(a, leverage_sample(a, k, rng, kDefaultRankTol), 0, kDefaultRankTol);
        }
    }
    throw std::logic_error("unreachable strategy tag");
}

SelectionResult select_rows(const Matrix& a, std::size_t k, SelectionStrategy strategy,
                            NormKind kind) {
    return select_columns(a.transposed(), k, strategy, kind);
}

std::vector<double> leverage_scores(const Matrix& a, std::size_t k, double tol) {
    if (k < 1) throw std::invalid_argument("subspace order must be at least 1");
    const std::size_t rank = numerical_rank(a, tol);
    if (k > rank) {
        throw std::invalid_argument("subspace order " + std::to_string(k) +
                                    " exceeds the numerical rank " + std::to_string(rank));
    }
    const SvdFactors f = truncated_svd(a, k);
    std::vector<double> scores(a.cols(), 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t t = 0; t < k; ++t) scores[j] += f.v(j, t) * f.v(j, t);
    return scores;
}

}  // namespace curskel
