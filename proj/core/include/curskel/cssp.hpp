#pragma once

#include <cstdint>
#include <vector>

#include "curskel/index_set.hpp"
#include "curskel/matrix.hpp"
#include "curskel/norms.hpp"
#include "curskel/svd.hpp"

namespace curskel {

/// Column (or, via transposition, row) subset selection strategies.
/// Exhaustive and GreedyPivot are deterministic and ignore the seed; the
/// randomized strategies are fully determined by (A, k, seed).
enum class Strategy { Exhaustive, GreedyPivot, UniformRandom, LeverageScore };

struct SelectionStrategy {
    Strategy kind;
    std::uint64_t seed = 0;

    static SelectionStrategy exhaustive() { return {Strategy::Exhaustive, 0}; }
    static SelectionStrategy greedy() { return {Strategy::GreedyPivot, 0}; }
    static SelectionStrategy uniform(std::uint64_t seed) { return {Strategy::UniformRandom, seed}; }
    static SelectionStrategy leverage(std::uint64_t seed) { return {Strategy::LeverageScore, seed}; }
};

/// Selected indices plus the projection errors recomputed on (A, indices).
/// subsets_examined is nonzero only for exhaustive search.
struct SelectionResult {
    IndexSet indices;
    double error_frobenius;
    double error_spectral;
    std::uint64_t subsets_examined = 0;
};

/// ||A - C C^dagger A|| in the requested norm, C = A(:, J).
double cssp_error(const Matrix& a, const IndexSet& cols, NormKind kind,
                  double tol = kDefaultRankTol);

inline constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000;

/// Globally minimal distinct-index subset of size k by enumeration.
/// Ties resolve to the lexicographically smallest J: a candidate replaces the
/// incumbent only when its error improves by more than 1e-12 * max(1, ||A||_F),
/// so float noise between mathematically equal subsets cannot reorder them.
/// Throws budget_exceeded_error when C(n, k) exceeds the budget.
SelectionResult exhaustive_cssp(const Matrix& a, std::size_t k, NormKind kind,
                                std::uint64_t budget = kDefaultSubsetBudget);

/// Runs the chosen strategy; `kind` is the objective for exhaustive search
/// (the other strategies are norm-free by construction).
///
/// GreedyPivot repeatedly picks the column with the largest Euclidean
/// residual after projecting out the previous picks (modified Gram-Schmidt),
/// lowest index on ties, and stops early once the largest residual drops
/// below 1e-12 (the result shrinks; nothing is padded).
///
/// LeverageScore draws k columns i.i.d. with probabilities proportional to
/// the leverage scores of the top-k singular subspace, extended to include
/// any singular values tied with sigma_k so degenerate spectra sample their
/// whole eigenspace evenly; k is capped at the numerical rank for scoring.
SelectionResult select_columns(const Matrix& a, std::size_t k, SelectionStrategy strategy,
                               NormKind kind = NormKind::frobenius());

/// select_columns on the transpose, index-for-index with the same seed.
SelectionResult select_rows(const Matrix& a, std::size_t k, SelectionStrategy strategy,
                            NormKind kind = NormKind::frobenius());

/// l_j = ||V_k(j, :)||^2 from the truncated SVD; nonnegative, sums to k.
/// Throws std::invalid_argument when k exceeds the numerical rank.
std::vector<double> leverage_scores(const Matrix& a, std::size_t k,
                                    double tol = kDefaultRankTol);

}  // namespace curskel
