#pragma once

#include "curskel/matrix.hpp"

namespace curskel {

/// Norm selector: Frobenius (entrywise), spectral (sigma_1), or Schatten-p
/// (the l_p norm of the singular value vector, p >= 1). schatten(2) is the
/// Frobenius norm computed via singular values; an infinite p selects the
/// spectral norm by the usual convention.
class NormKind {
public:
    enum class Tag { Frobenius, Spectral, Schatten };

    static NormKind frobenius() { return NormKind(Tag::Frobenius, 2.0); }
    static NormKind spectral() { return NormKind(Tag::Spectral, 0.0); }
    static NormKind schatten(double p);

    Tag tag() const { return tag_; }
    double p() const { return p_; }

    bool operator==(const NormKind& other) const = default;

private:
    NormKind(Tag tag, double p) : tag_(tag), p_(p) {}
    Tag tag_;
    double p_;
};

double norm(const Matrix& a, NormKind kind);

/// Entrywise Frobenius norm (no SVD involved).
double frobenius_norm(const Matrix& a);

/// ||x - y||_F.
double frobenius_residual(const Matrix& x, const Matrix& y);

/// Tolerance-relative matrix equality used throughout:
/// ||x - y||_F <= tol * max(1, ||y||_F).
bool tol_equal(const Matrix& x, const Matrix& y, double tol);

}  // namespace curskel
