#include "curskel/cur.hpp"

#include <cmath>
#include <cstdlib>

#include "curskel/norms.hpp"

namespace curskel {

CurFactors extract(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
    rows.validate_bound(a.rows(), "row");
    cols.validate_bound(a.cols(), "column");
    Matrix c = a.gather_cols(cols);
    Matrix r = a.gather_rows(rows);
    Matrix u = r.gather_cols(cols);
    return CurFactors{std::move(c), std::move(u), std::move(r), rows, cols};
}

CurExact cur_exact(const Matrix& a, const IndexSet& rows, const IndexSet& cols, double tol) {
    CurFactors f = extract(a, rows, cols);
    Matrix approx = f.c * pinv(f.u, tol) * f.r;
    const bool exact = numerical_rank(f.u, tol) == numerical_rank(a, tol);
    return CurExact{std::move(approx), std::move(f), exact};
}

Matrix cur_projection(const Matrix& a, const IndexSet& rows, const IndexSet& cols, double tol) {
    CurFactors f = extract(a, rows, cols);
    return f.c * mixing_optimal(a, f, tol) * f.r;
}

Matrix mixing_u_dagger(const CurFactors& f, double tol) { return pinv(f.u, tol); }

Matrix mixing_optimal(const Matrix& a, const CurFactors& f, double tol) {
    return pinv(f.c, tol) * a * pinv(f.r, tol);
}

Matrix u_from_global(const Matrix& a, const CurFactors& f, double tol) {
    return f.r * pinv(a, tol) * f.c;
}

Matrix pinv_via_cur(const CurFactors& f, double tol) {
    return pinv(f.r, tol) * f.u * pinv(f.c, tol);
}

MixingIdentity mixing_udagger_identity(const Matrix& a, const CurFactors& f, double tol) {
    const Matrix u_dag = pinv(f.u, tol);
    const Matrix optimal = mixing_optimal(a, f, tol);
    const double residual = frobenius_residual(u_dag, optimal);
    const bool holds = residual <= tol * std::max(1.0, frobenius_norm(u_dag));
    return MixingIdentity{holds, residual};
}

CharacterizationReport characterize(const Matrix& a, const IndexSet& rows, const IndexSet& cols,
                                    double tol) {
    const CurFactors f = extract(a, rows, cols);

    const SvdFactors fa = svd(a, tol);
    const SvdFactors fc = svd(f.c, tol);
    const SvdFactors fu = svd(f.u, tol);
    const SvdFactors fr = svd(f.r, tol);

    CharacterizationReport rep{};
    rep.rank_a = fa.rank;
    rep.rank_c = fc.rank;
    rep.rank_u = fu.rank;
    rep.rank_r = fr.rank;

    const Matrix a_dag = pinv(fa);
    const Matrix c_dag = pinv(fc);
    const Matrix u_dag = pinv(fu);
    const Matrix r_dag = pinv(fr);

    // Each condition is evaluated independently; none is derived from another.
    rep.rank_condition = rep.rank_u == rep.rank_a;
    rep.residuals[0] = std::abs(static_cast<double>(rep.rank_a) - static_cast<double>(rep.rank_u));

    const Matrix cur_approx = f.c * u_dag * f.r;
    rep.residuals[1] = frobenius_residual(a, cur_approx);
    rep.exact_cur = rep.residuals[1] <= tol * std::max(1.0, frobenius_norm(a));

    const Matrix projection = f.c * (c_dag * a * r_dag) * f.r;
    rep.residuals[2] = frobenius_residual(a, projection);
    rep.exact_projection = rep.residuals[2] <= tol * std::max(1.0, frobenius_norm(a));

    const Matrix pinv_cur = r_dag * f.u * c_dag;
    rep.residuals[3] = frobenius_residual(a_dag, pinv_cur);
    rep.pinv_identity = rep.residuals[3] <= tol * std::max(1.0, frobenius_norm(a_dag));

    rep.rank_cr = rep.rank_c == rep.rank_a && rep.rank_r == rep.rank_a;
    rep.residuals[4] =
        std::max(std::abs(static_cast<double>(rep.rank_a) - static_cast<double>(rep.rank_c)),
                 std::abs(static_cast<double>(rep.rank_a) - static_cast<double>(rep.rank_r)));

    return rep;
}

ProjectorResiduals projector_identities(const Matrix& a, const CurFactors& f, double tol) {
    const Matrix a_dag = pinv(a, tol);
    const Matrix c_dag = pinv(f.c, tol);
    const Matrix u_dag = pinv(f.u, tol);
    const Matrix r_dag = pinv(f.r, tol);
    return ProjectorResiduals{
        frobenius_residual(c_dag * f.c, u_dag * f.u),
        frobenius_residual(f.r * r_dag, f.u * u_dag),
        frobenius_residual(a * a_dag, f.c * c_dag),
        frobenius_residual(a_dag * a, r_dag * f.r),
    };
}

}  // namespace curskel
