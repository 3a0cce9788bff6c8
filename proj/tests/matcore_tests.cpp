#include <cmath>
#include <limits>
#include <stdexcept>

#include "curskel/matrix.hpp"
#include "curskel/norms.hpp"
#include "curskel/rng.hpp"
#include "curskel/svd.hpp"
#include "curskel/verify.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace curskel;
using testutil::fro;
using testutil::fro_diff;

namespace {

Matrix diag(std::initializer_list<double> values) {
    const std::size_t n = values.size();
    std::vector<double> entries(n * n, 0.0);
    std::size_t i = 0;
    for (double v : values) entries[i * n + i] = v, ++i;
    return Matrix::from_data(n, n, std::move(entries));
}

void check_orthonormal_columns(const Matrix& m, double tol) {
    for (std::size_t a = 0; a < m.cols(); ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            double dot = 0.0;
            for (std::size_t i = 0; i < m.rows(); ++i) dot += m(i, a) * m(i, b);
            CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < tol);
        }
    }
}

Matrix random_matrix(SeededRng& rng, std::size_t max_dim) {
    const std::size_t m = 1 + rng.uniform_index(max_dim);
    const std::size_t n = 1 + rng.uniform_index(max_dim);
    // Half the draws get a planted (usually deficient) rank.
    if (rng.bernoulli(0.5)) {
        const std::size_t k = 1 + rng.uniform_index(std::min(m, n));
        return planted_rank_matrix(rng, m, n, k);
    }
    return gaussian_matrix(rng, m, n);
}

}  // namespace

TEST_CASE("matrix construction rejects bad input") {
    CHECK_THROWS_AS(Matrix::zeros(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Matrix::from_data(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(Matrix::from_data(1, 2, {1.0, std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Matrix::from_data(1, 2, {1.0, std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Matrix::from_rows({{1.0, 2.0}, {3.0}}), std::invalid_argument);
}

TEST_CASE("matrix gather preserves order and repeats") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    const Matrix c = a.gather_cols(IndexSet{0, 0});
    CHECK(c == Matrix::from_rows({{1, 1}, {3, 3}}));
    const Matrix r = a.gather_rows(IndexSet{1, 0});
    CHECK(r == Matrix::from_rows({{3, 4}, {1, 2}}));
    CHECK_THROWS_AS(a.gather_rows(IndexSet{2}), std::out_of_range);
}

TEST_CASE("index sets are nonempty and convert 1-based") {
    CHECK_THROWS_AS(IndexSet(std::vector<std::size_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet::from_one_based({0}), std::out_of_range);
    const IndexSet s = IndexSet::from_one_based({1, 3, 3});
    CHECK(s.indices() == std::vector<std::size_t>{0, 2, 2});
    CHECK(s.to_one_based() == std::vector<std::size_t>{1, 3, 3});
}

TEST_CASE("svd of a diagonal matrix is its own factorization") {
    const SvdFactors f = svd(diag({3, 2}));
    REQUIRE(f.sigma.size() == 2);
    CHECK(f.sigma[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(f.sigma[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f.rank == 2);
}

TEST_CASE("svd of a rank-1 outer product") {
    const Matrix a = Matrix::from_rows({{1, 2}, {2, 4}});
    const SvdFactors f = svd(a);
    REQUIRE(f.sigma.size() == 2);
    // sigma_1 = ||[1;2]|| * ||[1,2]|| = 5 by hand.
    CHECK(f.sigma[0] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(f.sigma[1] <= 1e-14);
    CHECK(f.rank == 1);
}

TEST_CASE("svd of the zero matrix has rank 0 and orthonormal factors") {
    const SvdFactors f = svd(Matrix::zeros(2, 2));
    CHECK(f.rank == 0);
    CHECK(f.sigma[0] == 0.0);
    CHECK(f.sigma[1] == 0.0);
    check_orthonormal_columns(f.w, 1e-12);
    check_orthonormal_columns(f.v, 1e-12);
    CHECK(fro(reconstruct(f)) == 0.0);
}

TEST_CASE("svd invariants on random matrices") {
    SeededRng rng(20240801);
    for (int trial = 0; trial < 60; ++trial) {
        const Matrix a = random_matrix(rng, 20);
        const SvdFactors f = svd(a);
        for (std::size_t i = 0; i + 1 < f.sigma.size(); ++i) {
            CHECK(f.sigma[i] >= f.sigma[i + 1]);
            CHECK(f.sigma[i + 1] >= 0.0);
        }
        check_orthonormal_columns(f.w, 1e-12);
        check_orthonormal_columns(f.v, 1e-12);
        CHECK(fro_diff(reconstruct(f), a) <= 1e-13 * std::max(1.0, fro(a)));
    }
}

TEST_CASE("factoring a reconstruction returns the same singular values") {
    SeededRng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix a = random_matrix(rng, 12);
        const SvdFactors f = svd(a);
        const SvdFactors g = svd(reconstruct(f));
        REQUIRE(f.sigma.size() == g.sigma.size());
        for (std::size_t i = 0; i < f.sigma.size(); ++i) {
            CHECK(std::abs(f.sigma[i] - g.sigma[i]) <= 1e-9 * std::max(1.0, f.sigma[0]));
        }
    }
}

TEST_CASE("pinv of a diagonal matrix reciprocates nonzero entries") {
    const Matrix p = pinv(diag({2, 0}));
    CHECK(fro_diff(p, diag({0.5, 0})) <= 1e-14);
}

TEST_CASE("pinv of a full-column-rank vector matches the normal-equations oracle") {
    const Matrix c = Matrix::from_rows({{1}, {1}});
    // C^dagger = (C^T C)^{-1} C^T = [0.5, 0.5] by hand.
    CHECK(fro_diff(pinv(c), Matrix::from_rows({{0.5, 0.5}})) <= 1e-14);
}

TEST_CASE("pinv of an invertible matrix is its inverse") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    CHECK(fro_diff(pinv(a), testutil::oracle_inv_2x2(a)) <= 1e-12);
}

TEST_CASE("pinv of the zero matrix is the zero matrix of transposed shape") {
    const Matrix p = pinv(Matrix::zeros(2, 3));
    CHECK(p.rows() == 3);
    CHECK(p.cols() == 2);
    CHECK(fro(p) == 0.0);
}

TEST_CASE("Penrose identities hold on random matrices") {
    SeededRng rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        const Matrix a = random_matrix(rng, 20);
        const Matrix ad = pinv(a);
        CHECK(fro_diff(a * ad * a, a) <= 1e-8 * std::max(1.0, fro(a)));
        CHECK(fro_diff(ad * a * ad, ad) <= 1e-8 * std::max(1.0, fro(ad)));
        const Matrix aad = a * ad;
        const Matrix ada = ad * a;
        CHECK(fro_diff(aad, aad.transposed()) <= 1e-8);
        CHECK(fro_diff(ada, ada.transposed()) <= 1e-8);
    }
}

TEST_CASE("truncated svd keeps the top factors") {
    const Matrix a = diag({3, 2, 1});
    const SvdFactors f = truncated_svd(a, 2);
    CHECK(fro_diff(reconstruct(f), diag({3, 2, 0})) <= 1e-12);

    const Matrix b = Matrix::from_rows({{1, 2}, {3, 4}});
    const SvdFactors g = truncated_svd(b, 1);
    const double spectral_err = norm(b - reconstruct(g), NormKind::spectral());
    const auto oracle = testutil::oracle_singular_values_2x2(b);
    CHECK(spectral_err == doctest::Approx(oracle.s2).epsilon(1e-9));
    CHECK(oracle.s2 == doctest::Approx(0.36597).epsilon(1e-4));

    CHECK_THROWS_AS(truncated_svd(b, 0), std::invalid_argument);
    CHECK_THROWS_AS(truncated_svd(b, 3), std::invalid_argument);
}

TEST_CASE("truncation at the full rank reproduces the matrix") {
    SeededRng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_matrix(rng, 10);
        const std::size_t r = numerical_rank(a);
        if (r == 0) continue;
        const SvdFactors f = truncated_svd(a, r);
        CHECK(fro_diff(reconstruct(f), a) <= 1e-10 * std::max(1.0, fro(a)));
    }
}

TEST_CASE("numerical rank thresholds") {
    CHECK(numerical_rank(diag({1, 1e-14}), 1e-10) == 1);
    CHECK(numerical_rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(numerical_rank(Matrix::identity(3)) == 3);
    CHECK(numerical_rank(Matrix::zeros(4, 2)) == 0);
    // A value sitting exactly on tol * sigma_1 counts as above it.
    CHECK(numerical_rank(diag({1, 1e-10}), 1e-10) == 2);
}

TEST_CASE("norm examples") {
    CHECK(norm(Matrix::from_rows({{0, 0}, {0, -2}}), NormKind::frobenius()) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(norm(Matrix::from_rows({{1, 1}, {1, 1}}), NormKind::spectral()) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(norm(diag({3, 4}), NormKind::schatten(1)) == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("schatten(2) agrees with the entrywise Frobenius norm") {
    SeededRng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const Matrix a = random_matrix(rng, 12);
        const double f = norm(a, NormKind::frobenius());
        const double s2 = norm(a, NormKind::schatten(2));
        CHECK(std::abs(f - s2) <= 1e-10 * std::max(1.0, f));
    }
}

TEST_CASE("schatten norm validation and infinity convention") {
    CHECK_THROWS_AS(NormKind::schatten(0.5), std::invalid_argument);
    CHECK_THROWS_AS(NormKind::schatten(std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
    const NormKind inf = NormKind::schatten(std::numeric_limits<double>::infinity());
    CHECK(inf == NormKind::spectral());
}

TEST_CASE("truncated svd is the best rank-k approximation") {
    SeededRng rng(555);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 2 + rng.uniform_index(11);
        const std::size_t n = 2 + rng.uniform_index(11);
        const std::size_t k = 1 + rng.uniform_index(std::min(m, n));
        const Matrix a = gaussian_matrix(rng, m, n);
        const Matrix ak = reconstruct(truncated_svd(a, k));
        const Matrix b = planted_rank_matrix(rng, m, n, k);
        CHECK(fro(a - ak) <= fro(a - b) + 1e-9);
        CHECK(norm(a - ak, NormKind::spectral()) <= norm(a - b, NormKind::spectral()) + 1e-9);
    }
}

TEST_CASE("seeded rng is deterministic and in range") {
    SeededRng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    SeededRng c = SeededRng::for_trial(7, 1, 0);
    SeededRng d = SeededRng::for_trial(7, 1, 1);
    CHECK(c.next_u64() != d.next_u64());
    SeededRng e(99);
    for (int i = 0; i < 1000; ++i) {
        const double u = e.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(e.uniform_index(7) < 7);
    }
}
