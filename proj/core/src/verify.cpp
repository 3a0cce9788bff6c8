#include "curskel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "curskel/norms.hpp"
#include "curskel/svd.hpp"

namespace curskel {

namespace {

constexpr std::uint64_t kSweepStream = 1;
constexpr std::uint64_t kOpenQuestionStream = 2;
constexpr std::uint64_t kOptimalityStream = 3;

std::vector<std::size_t> distinct_indices(SeededRng& rng, std::size_t dim, std::size_t count) {
    // Partial Fisher-Yates over [0, dim).
    std::vector<std::size_t> pool(dim);
    for (std::size_t i = 0; i < dim; ++i) pool[i] = i;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.uniform_index(dim - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

std::vector<std::size_t> duplicate_pass(SeededRng& rng, std::vector<std::size_t> picks,
                                        double repeat_prob) {
    const std::size_t original = picks.size();
    for (std::size_t i = 0; i < original; ++i) {
        if (rng.bernoulli(repeat_prob)) picks.push_back(picks[i]);
    }
    return picks;
}

}  // namespace

void SweepConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (max_rows < 1 || max_cols < 1) throw std::invalid_argument("dimensions must be positive");
    if (max_rank < 1 || max_rank > std::min(max_rows, max_cols)) {
        throw std::invalid_argument("max_rank must lie in [1, min(max_rows, max_cols)]");
    }
    if (!(repeat_prob >= 0.0 && repeat_prob <= 1.0)) {
        throw std::invalid_argument("repeat_prob must lie in [0, 1]");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
}

Matrix gaussian_matrix(SeededRng& rng, std::size_t rows, std::size_t cols) {
    std::vector<double> entries(rows * cols);
    for (double& x : entries) x = rng.normal();
    return Matrix::from_data(rows, cols, std::move(entries));
}

Matrix planted_rank_matrix(SeededRng& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
    const Matrix g = gaussian_matrix(rng, rows, rank);
    const Matrix h = gaussian_matrix(rng, cols, rank);
    return g * h.transposed();
}

IndexSet sample_rank_capturing(SeededRng& rng, std::size_t dim, std::size_t rank,
                               double repeat_prob) {
    std::vector<std::size_t> picks = distinct_indices(rng, dim, std::min(rank, dim));
    const std::size_t extra = rng.uniform_index(3);
    for (std::size_t i = 0; i < extra; ++i) picks.push_back(rng.uniform_index(dim));
    return IndexSet(duplicate_pass(rng, std::move(picks), repeat_prob));
}

IndexSet sample_undersampled(SeededRng& rng, std::size_t dim, std::size_t rank,
                             double repeat_prob) {
    if (rank < 2) throw std::invalid_argument("under-sampling needs planted rank >= 2");
    const std::size_t size = 1 + rng.uniform_index(rank - 1);
    std::vector<std::size_t> picks;
    picks.reserve(size);
    for (std::size_t i = 0; i < size; ++i) picks.push_back(rng.uniform_index(dim));
    return IndexSet(duplicate_pass(rng, std::move(picks), repeat_prob));
}

SweepReport equivalence_sweep(const SweepConfig& cfg) {
    cfg.validate();
    SweepReport report;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        SeededRng rng = SeededRng::for_trial(cfg.seed, kSweepStream, t);
        const std::size_t m = 1 + rng.uniform_index(cfg.max_rows);
        const std::size_t n = 1 + rng.uniform_index(cfg.max_cols);
        const std::size_t k = 1 + rng.uniform_index(std::min({cfg.max_rank, m, n}));
        const Matrix a = planted_rank_matrix(rng, m, n, k);

        const bool undersample = (t % 2 == 1) && k >= 2;
        const IndexSet rows = undersample ? sample_undersampled(rng, m, k, cfg.repeat_prob)
                                          : sample_rank_capturing(rng, m, k, cfg.repeat_prob);
        const IndexSet cols = undersample ? sample_undersampled(rng, n, k, cfg.repeat_prob)
                                          : sample_rank_capturing(rng, n, k, cfg.repeat_prob);

        const CharacterizationReport rep = characterize(a, rows, cols, cfg.tol);
        if (!rep.all_agree()) {
            report.agreement_failures.push_back(SweepFailure{t, m, n, rows, cols});
        }

        const CurFactors f = extract(a, rows, cols);
        const Matrix urac = u_from_global(a, f, cfg.tol);
        const double u_norm = std::max(1.0, frobenius_norm(f.u));
        const double rel_residual = frobenius_residual(f.u, urac) / u_norm;
        report.max_u_rac_residual = std::max(report.max_u_rac_residual, rel_residual);
        if (rel_residual > cfg.tol) {
            report.identity_failures.push_back(SweepFailure{t, m, n, rows, cols});
        }

        if (rep.rank_condition) {
            const double a_norm = std::max(1.0, frobenius_norm(a));
            report.max_exact_cur_residual =
                std::max(report.max_exact_cur_residual, rep.residuals[1] / a_norm);
            report.max_exact_projection_residual =
                std::max(report.max_exact_projection_residual, rep.residuals[2] / a_norm);
        }
        ++report.trials_run;
    }
    return report;
}

OpenQuestionCheck evaluate_open_question_trial(const Matrix& a, const IndexSet& rows,
                                               const IndexSet& cols, double tol) {
    const CurFactors f = extract(a, rows, cols);
    const Matrix u_dag = pinv(f.u, tol);
    const Matrix optimal = mixing_optimal(a, f, tol);
    const Matrix lhs = f.c * u_dag * f.r;
    const Matrix rhs = f.c * optimal * f.r;

    OpenQuestionCheck check{};
    check.premise_residual = frobenius_residual(lhs, rhs);
    check.premise_holds = check.premise_residual <= tol * std::max(1.0, frobenius_norm(rhs));
    check.conclusion_residual = frobenius_residual(u_dag, optimal);
    check.conclusion_holds =
        check.conclusion_residual <= tol * std::max(1.0, frobenius_norm(u_dag));
    return check;
}

OpenQuestionReport open_question_experiment(const SweepConfig& cfg, bool invert_conclusion) {
    cfg.validate();
    OpenQuestionReport report;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        SeededRng rng = SeededRng::for_trial(cfg.seed, kOpenQuestionStream, t);
        const std::size_t m = 1 + rng.uniform_index(cfg.max_rows);
        const std::size_t n = 1 + rng.uniform_index(cfg.max_cols);
        // Mix full-rank matrices in alongside the capped planted ranks.
        const bool full_rank = rng.uniform_index(4) == 0;
        const std::size_t k = full_rank ? std::min(m, n)
                                        : 1 + rng.uniform_index(std::min({cfg.max_rank, m, n}));
        const Matrix a = planted_rank_matrix(rng, m, n, k);

        // Bias toward under-sampled selections so A != C U^dagger R is common.
        const bool undersample = k >= 2 && rng.uniform_index(10) < 7;
        const IndexSet rows = undersample ? sample_undersampled(rng, m, k, cfg.repeat_prob)
                                          : sample_rank_capturing(rng, m, k, cfg.repeat_prob);
        const IndexSet cols = undersample ? sample_undersampled(rng, n, k, cfg.repeat_prob)
                                          : sample_rank_capturing(rng, n, k, cfg.repeat_prob);

        const OpenQuestionCheck check = evaluate_open_question_trial(a, rows, cols, cfg.tol);
        if (check.premise_holds) {
            ++report.premise_count;
            const bool conclusion =
                invert_conclusion ? !check.conclusion_holds : check.conclusion_holds;
            if (!conclusion) {
                report.counterexamples.push_back(OpenQuestionWitness{
                    t, a, rows, cols, check.premise_residual, check.conclusion_residual});
            }
        }
        ++report.trials_run;
    }
    return report;
}

OptimalityCheck optimality_check(const Matrix& a, const CurFactors& f, std::uint64_t trials,
                                 std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    const Matrix optimal = mixing_optimal(a, f);
    const double base = frobenius_norm(a - f.c * optimal * f.r);
    const std::size_t zr = f.c.cols();
    const std::size_t zc = f.r.rows();

    double worst = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SeededRng rng = SeededRng::for_trial(seed, kOptimalityStream, t);
        Matrix z = Matrix::zeros(zr, zc);
        switch (t % 3) {
            case 0:
                // Includes the optimum itself on the first trial (zero margin).
                z = t == 0 ? optimal : gaussian_matrix(rng, zr, zc);
                break;
            case 1: {
                const double scale = std::pow(10.0, -static_cast<double>(rng.uniform_index(6)));
                z = optimal + scale * gaussian_matrix(rng, zr, zc);
                break;
            }
            case 2:
                z = (2.0 * rng.uniform01()) * optimal;
                break;
        }
        const double err = frobenius_norm(a - f.c * z * f.r);
        worst = std::min(worst, err - base);
    }
    return OptimalityCheck{worst >= -1e-9, worst};
}

}  // namespace curskel
