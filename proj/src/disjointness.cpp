#include "gframe/disjointness.hpp"

#include <cmath>
#include <limits>

#include "gframe/frame_analysis.hpp"
#include "gframe/linalg.hpp"

namespace gframe {

DisjointnessReport classify(const GFrameFamily& lambda, const GFrameFamily& theta,
                            const TolerancePolicy& tol) {
    tol.check();
    require_compatible(lambda, theta);
    const FrameReport fl = frame_bounds(lambda, tol);
    const FrameReport ft = frame_bounds(theta, tol);
    if (!fl.is_frame) {
        throw PreconditionError("classify: Lambda is not a continuous g-frame");
    }
    if (!ft.is_frame) {
        throw PreconditionError("classify: Theta is not a continuous g-frame");
    }

    DisjointnessReport report;
    report.khat_dim = lambda.khat_dim();

    // <T*_Lambda h, T*_Theta k> = <S_{Theta Lambda} h, k>, so the cross
    // operator certifies orthogonality of the two ranges.
    report.cross_operator_norm = operator_norm(cross_operator(theta, lambda));
    report.orthogonality_threshold = tol.rel_eps * std::sqrt(fl.upper_bound * ft.upper_bound);
    report.strongly_disjoint = report.cross_operator_norm <= report.orthogonality_threshold;

    const ComplexMatrix a = analysis_matrix(lambda);
    const ComplexMatrix b = analysis_matrix(theta);
    ComplexMatrix ab(a.rows(), a.cols() + b.cols());
    ab << a, b;
    report.lambda_rank = numerical_rank(a, tol);
    report.theta_rank = numerical_rank(b, tol);
    report.range_sum_dim = numerical_rank(ab, tol);
    report.range_intersection_dim = report.lambda_rank + report.theta_rank - report.range_sum_dim;

    report.disjoint = report.range_intersection_dim == 0;
    report.weakly_disjoint = kernel_triviality(gamma_family(lambda, theta), tol);
    report.complementary_pair = report.disjoint && report.range_sum_dim == report.khat_dim;
    report.strongly_complementary_pair =
        report.strongly_disjoint &&
        report.lambda_rank + report.theta_rank == report.khat_dim;
    return report;
}

GFrameFamily gamma_family(const GFrameFamily& lambda, const GFrameFamily& theta) {
    require_compatible(lambda, theta);
    GFrameFamily gamma{lambda.space, lambda.domain_dim + theta.domain_dim, lambda.block_dims, {}};
    gamma.blocks.reserve(lambda.blocks.size());
    for (std::size_t i = 0; i < lambda.blocks.size(); ++i) {
        ComplexMatrix block(lambda.block_dims[i], gamma.domain_dim);
        block << lambda.blocks[i], theta.blocks[i];
        gamma.blocks.push_back(std::move(block));
    }
    return gamma;
}

GFrameFamily delta_family(const GFrameFamily& lambda, const GFrameFamily& theta,
                          const TolerancePolicy& tol) {
    tol.check();
    require_compatible(lambda, theta);
    return gamma_family(parseval_normalize(lambda, tol), parseval_normalize(theta, tol));
}

GFrameFamily delta_family(const GFrameFamily& lambda, const GFrameFamily& theta,
                          const ComplexMatrix& l1, const ComplexMatrix& l2) {
    return gamma_family(right_multiply(lambda, l1), right_multiply(theta, l2));
}

bool strong_disjointness_converse_check(const GFrameFamily& lambda, const GFrameFamily& theta,
                                        const ComplexMatrix& l1, const ComplexMatrix& l2,
                                        const TolerancePolicy& tol) {
    tol.check();
    require_compatible(lambda, theta);
    if (l1.rows() != lambda.domain_dim || l1.cols() != lambda.domain_dim) {
        throw ShapeError("L1 must be a square operator on Lambda's domain");
    }
    if (l2.rows() != theta.domain_dim || l2.cols() != theta.domain_dim) {
        throw ShapeError("L2 must be a square operator on Theta's domain");
    }
    if (!is_injective(l1, tol)) {
        throw PreconditionError("L1 is not invertible");
    }
    if (!is_injective(l2, tol)) {
        throw PreconditionError("L2 is not invertible");
    }
    return frame_bounds(right_multiply(lambda, l1), tol).is_parseval &&
           frame_bounds(right_multiply(theta, l2), tol).is_parseval &&
           frame_bounds(delta_family(lambda, theta, l1, l2), tol).is_parseval;
}

bool kernel_triviality(const GFrameFamily& gamma, const TolerancePolicy& tol) {
    tol.check();
    return numerical_rank(analysis_matrix(gamma), tol) == gamma.domain_dim;
}

namespace {

ComplexMatrix range_basis(const ComplexMatrix& m, const TolerancePolicy& tol) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
    const int rank = numerical_rank(m, tol);
    return svd.matrixU().leftCols(rank);
}

} // namespace

SumMapNorms range_sum_map_norms(const GFrameFamily& lambda, const GFrameFamily& theta,
                                const TolerancePolicy& tol) {
    tol.check();
    require_compatible(lambda, theta);
    const ComplexMatrix qa = range_basis(analysis_matrix(lambda), tol);
    const ComplexMatrix qb = range_basis(analysis_matrix(theta), tol);
    ComplexMatrix q(qa.rows(), qa.cols() + qb.cols());
    q << qa, qb;
    SumMapNorms out;
    const RealVector sv = singular_values(q);
    out.norm = sv(0);
    const Real smin = q.cols() > q.rows() ? 0.0 : sv(sv.size() - 1);
    out.inverse_norm = smin > rank_threshold(q, sv(0), tol)
                           ? 1.0 / smin
                           : std::numeric_limits<Real>::infinity();
    return out;
}

} // namespace gframe
