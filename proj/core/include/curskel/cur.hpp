#pragma once

#include <array>
#include <cstddef>

#include "curskel/index_set.hpp"
#include "curskel/matrix.hpp"
#include "curskel/svd.hpp"

namespace curskel {

/// Skeleton factors of a source matrix A: C = A(:, J), R = A(I, :) and their
/// intersection U = A(I, J), with the index multisets that produced them.
/// Built by extract(), which gathers all three from the same source so the
/// cross-consistency invariants hold by construction.
struct CurFactors {
    Matrix c;
    Matrix u;
    Matrix r;
    IndexSet row_set;
    IndexSet col_set;
};

CurFactors extract(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

/// C * U^dagger * R together with the rank-based exactness verdict
/// rank(U) == rank(A). The verdict is decided by the rank predicate alone;
/// residuals stay an independent check.
struct CurExact {
    Matrix approx;
    CurFactors factors;
    bool exact;
};

CurExact cur_exact(const Matrix& a, const IndexSet& rows, const IndexSet& cols,
                   double tol = kDefaultRankTol);

/// C * (C^dagger A R^dagger) * R, the Frobenius-optimal approximation for the
/// given row/column selection.
Matrix cur_projection(const Matrix& a, const IndexSet& rows, const IndexSet& cols,
                      double tol = kDefaultRankTol);

/// The two mixing matrices: U^dagger (exact form) and C^dagger A R^dagger
/// (Frobenius-optimal form).
Matrix mixing_u_dagger(const CurFactors& f, double tol = kDefaultRankTol);
Matrix mixing_optimal(const Matrix& a, const CurFactors& f, double tol = kDefaultRankTol);

/// R * A^dagger * C; equals U for every selection, no rank assumption needed.
Matrix u_from_global(const Matrix& a, const CurFactors& f, double tol = kDefaultRankTol);

/// R^dagger * U * C^dagger; equals pinv(A) exactly when the characterization
/// conditions hold.
Matrix pinv_via_cur(const CurFactors& f, double tol = kDefaultRankTol);

/// Does U^dagger equal C^dagger A R^dagger within tol? Guaranteed when
/// rank(U) == rank(A); may also hold otherwise.
struct MixingIdentity {
    bool holds;
    double residual;
};

MixingIdentity mixing_udagger_identity(const Matrix& a, const CurFactors& f, double tol);

/// The five equivalent exactness conditions, each evaluated independently:
///   (i)   rank(U) == rank(A)
///   (ii)  A == C U^dagger R
///   (iii) A == C C^dagger A R^dagger R
///   (iv)  A^dagger == R^dagger U C^dagger
///   (v)   rank(C) == rank(R) == rank(A)
/// residuals[i] holds the tolerance-tested quantity behind each verdict
/// (absolute rank differences for (i)/(v), Frobenius residuals otherwise).
struct CharacterizationReport {
    bool rank_condition;
    bool exact_cur;
    bool exact_projection;
    bool pinv_identity;
    bool rank_cr;
    std::array<double, 5> residuals;
    std::size_t rank_a;
    std::size_t rank_c;
    std::size_t rank_u;
    std::size_t rank_r;

    bool all_agree() const {
        return rank_condition == exact_cur && exact_cur == exact_projection &&
               exact_projection == pinv_identity && pinv_identity == rank_cr;
    }
};

CharacterizationReport characterize(const Matrix& a, const IndexSet& rows, const IndexSet& cols,
                                    double tol = kDefaultRankTol);

/// Frobenius residuals of the four projector identities
/// C^dagger C = U^dagger U, R R^dagger = U U^dagger, A A^dagger = C C^dagger,
/// A^dagger A = R^dagger R; all vanish when rank(U) == rank(A).
struct ProjectorResiduals {
    double cdc_udu;
    double rrd_uud;
    double aad_ccd;
    double ada_rdr;
};

ProjectorResiduals projector_identities(const Matrix& a, const CurFactors& f,
                                        double tol = kDefaultRankTol);

}  // namespace curskel
