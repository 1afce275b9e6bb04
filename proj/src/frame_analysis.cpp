#include "gframe/frame_analysis.hpp"

#include <cmath>

#include "gframe/linalg.hpp"

namespace gframe {

ComplexMatrix frame_operator(const GFrameFamily& fam) {
    require_valid(fam);
    ComplexMatrix s = ComplexMatrix::Zero(fam.domain_dim, fam.domain_dim);
    for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
        s += fam.space.weights[i] * (fam.blocks[i].adjoint() * fam.blocks[i]);
    }
    return hermitian_part(s);
}

FrameReport frame_bounds(const GFrameFamily& fam, const TolerancePolicy& tol) {
    tol.check();
    FrameReport report;
    report.frame_operator = frame_operator(fam);
    const auto spec = hermitian_spectrum(report.frame_operator);
    report.lower_bound = spec.values(0);
    report.upper_bound = spec.values(spec.values.size() - 1);
    report.frame_threshold = spectral_floor(report.upper_bound, fam.domain_dim, tol);
    report.is_frame = report.lower_bound > report.frame_threshold;
    report.is_tight = report.is_frame &&
                      std::abs(report.upper_bound - report.lower_bound) <=
                          tol.rel_eps * report.upper_bound;
    report.is_parseval = report.is_tight && std::abs(report.lower_bound - 1.0) <= tol.rel_eps &&
                         std::abs(report.upper_bound - 1.0) <= tol.rel_eps;
    return report;
}

GFrameFamily canonical_dual(const GFrameFamily& fam, const TolerancePolicy& tol) {
    tol.check();
    return right_multiply(fam, hermitian_inverse(frame_operator(fam), tol));
}

GFrameFamily parseval_normalize(const GFrameFamily& fam, const TolerancePolicy& tol) {
    tol.check();
    return right_multiply(fam, hermitian_inverse_sqrt(frame_operator(fam), tol));
}

ComplexMatrix cross_operator(const GFrameFamily& theta, const GFrameFamily& lambda) {
    require_compatible(theta, lambda);
    ComplexMatrix s = ComplexMatrix::Zero(theta.domain_dim, lambda.domain_dim);
    for (std::size_t i = 0; i < lambda.blocks.size(); ++i) {
        s += lambda.space.weights[i] * (theta.blocks[i].adjoint() * lambda.blocks[i]);
    }
    return s;
}

bool is_dual_pair(const GFrameFamily& theta, const GFrameFamily& lambda,
                  const TolerancePolicy& tol) {
    tol.check();
    require_compatible(theta, lambda);
    if (theta.domain_dim != lambda.domain_dim) {
        throw ShapeError("dual pair check needs families on the same domain");
    }
    if (!approx_identity(cross_operator(theta, lambda), tol.rel_eps) ||
        !approx_identity(cross_operator(lambda, theta), tol.rel_eps)) {
        return false;
    }
    return frame_bounds(theta, tol).is_frame && frame_bounds(lambda, tol).is_frame;
}

} // namespace gframe
