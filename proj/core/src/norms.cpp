#include "curskel/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "curskel/svd.hpp"

namespace curskel {

NormKind NormKind::schatten(double p) {
    if (std::isnan(p) || p < 1.0) {
        throw std::invalid_argument("Schatten norms require p >= 1");
    }
    if (std::isinf(p)) return spectral();
    return NormKind(Tag::Schatten, p);
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

double frobenius_residual(const Matrix& x, const Matrix& y) { return frobenius_norm(x - y); }

bool tol_equal(const Matrix& x, const Matrix& y, double tol) {
    return frobenius_residual(x, y) <= tol * std::max(1.0, frobenius_norm(y));
}

double norm(const Matrix& a, NormKind kind) {
    switch (kind.tag()) {
        case NormKind::Tag::Frobenius:
            return frobenius_norm(a);
        case NormKind::Tag::Spectral:
            return svd(a).sigma[0];
        case NormKind::Tag::Schatten: {
            const SvdFactors f = svd(a);
            double s = 0.0;
            for (double sv : f.sigma) s += std::pow(sv, kind.p());
            return std::pow(s, 1.0 / kind.p());
        }
    }
    throw std::logic_error("unreachable norm tag");
}

}  // namespace curskel
