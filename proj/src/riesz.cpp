#include "gframe/riesz.hpp"

#include <algorithm>
#include <cmath>

#include "gframe/linalg.hpp"

namespace gframe {

namespace {

void require_frame(const GFrameFamily& fam, const TolerancePolicy& tol, const char* name) {
    if (!frame_bounds(fam, tol).is_frame) {
        throw PreconditionError(std::string(name) + " is not a continuous g-frame");
    }
}

// Smallest singular value of m over all of C^cols: zero when cols > rows.
Real min_singular_over_domain(const RealVector& sv, Eigen::Index cols) {
    if (sv.size() < cols || sv.size() == 0) {
        return 0.0;
    }
    return sv(cols - 1);
}

} // namespace

RieszReport riesz_check(const GFrameFamily& fam, const TolerancePolicy& tol) {
    tol.check();
    const FrameReport frame = frame_bounds(fam, tol);
    if (!frame.is_frame) {
        throw PreconditionError("riesz_check: family is not a continuous g-frame");
    }
    const ComplexMatrix analysis = analysis_matrix(fam);
    const ComplexMatrix synthesis = analysis.adjoint();

    RieszReport report;
    report.khat_dim = fam.khat_dim();
    report.frame_lower_bound = frame.lower_bound;
    report.frame_upper_bound = frame.upper_bound;

    // (i) range of the analysis operator is all of K-hat.
    report.analysis_rank = numerical_rank(analysis, tol);
    report.rank_criterion = report.analysis_rank == report.khat_dim;

    // (ii) two-sided synthesis bound over K-hat.
    Eigen::JacobiSVD<ComplexMatrix> svd(synthesis, Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) {
        throw NumericError("SVD of the synthesis matrix failed");
    }
    const RealVector sv = svd.singularValues();
    const Real sigma_max = sv(0);
    const Real sigma_min = min_singular_over_domain(sv, synthesis.cols());
    report.synthesis_upper_bound = sigma_max * sigma_max;
    report.synthesis_lower_bound = sigma_min * sigma_min;
    const Real threshold = rank_threshold(synthesis, sigma_max, tol);
    report.bound_criterion = sigma_min > threshold;

    // (iii) no nonzero phi with T phi = 0. The last right singular vector
    // minimizes |T phi| over the unit sphere of K-hat.
    const ComplexVector witness = svd.matrixV().col(synthesis.cols() - 1);
    report.kernel_witness = unembed(witness, fam.space, fam.block_dims);
    report.kernel_witness_residual = apply_synthesis(fam, report.kernel_witness).norm();
    report.kernel_criterion = !synthesis_kernel_test(fam, report.kernel_witness, tol);

    report.is_riesz_type = report.rank_criterion;
    return report;
}

bool synthesis_kernel_test(const GFrameFamily& fam, const KHatVector& phi,
                           const TolerancePolicy& tol) {
    tol.check();
    require_valid(fam);
    if (phi.block_dims() != fam.block_dims) {
        throw ShapeError("synthesis_kernel_test: phi does not match the family's block layout");
    }
    const Real residual = apply_synthesis(fam, phi).norm();
    const ComplexMatrix analysis = analysis_matrix(fam);
    const Real synthesis_norm = operator_norm(analysis);
    const Real threshold =
        rank_threshold(analysis, synthesis_norm, tol) * khat_norm(phi, fam.space);
    return residual <= threshold;
}

MixedConstruction mixed_construction(const GFrameFamily& lambda, const GFrameFamily& theta,
                                     const ComplexMatrix& l1, const ComplexMatrix& l2,
                                     const TolerancePolicy& tol) {
    tol.check();
    require_compatible(lambda, theta);
    if (lambda.domain_dim != theta.domain_dim) {
        throw ShapeError("mixed_construction: Lambda and Theta must act on the same space");
    }
    const int d = lambda.domain_dim;
    if (l1.rows() != d || l2.rows() != d || l1.cols() != l2.cols()) {
        throw ShapeError("mixed_construction: L1 and L2 must both be d x m");
    }
    if (!approx_identity(cross_operator(lambda, theta), tol.rel_eps)) {
        throw PreconditionError("mixed_construction: hypothesis S_{Lambda Theta} = I fails");
    }
    if (!approx_identity(l1.adjoint() * l2, tol.rel_eps)) {
        throw PreconditionError("mixed_construction: hypothesis L1^* L2 = I fails");
    }

    MixedConstruction out;
    out.family = right_multiply(lambda, l1);
    const GFrameFamily theta_part = right_multiply(theta, l2);
    for (std::size_t i = 0; i < out.family.blocks.size(); ++i) {
        out.family.blocks[i] += theta_part.blocks[i];
    }
    out.frame = frame_bounds(out.family, tol);

    const FrameReport fl = frame_bounds(lambda, tol);
    const FrameReport ft = frame_bounds(theta, tol);
    const Real n1 = operator_norm(l1);
    const Real n2 = operator_norm(l2);
    out.sandwich_upper = fl.upper_bound * n1 * n1 + 2.0 + ft.upper_bound * n2 * n2;
    out.sandwich_holds = out.frame.lower_bound >= out.sandwich_lower * (1.0 - tol.rel_eps) &&
                         out.frame.upper_bound <= out.sandwich_upper * (1.0 + tol.rel_eps);

    const ComplexMatrix expansion = out.frame.frame_operator -
                                    l1.adjoint() * fl.frame_operator * l1 -
                                    l2.adjoint() * ft.frame_operator * l2;
    out.expansion_identity_holds =
        approx_equal(expansion, 2.0 * ComplexMatrix::Identity(l1.cols(), l1.cols()),
                     tol.rel_eps * std::max<Real>(1.0, out.sandwich_upper));

    if (out.frame.is_frame) {
        out.riesz = riesz_check(out.family, tol);
    }

    const ComplexMatrix a_lambda = analysis_matrix(lambda);
    const ComplexMatrix a_theta = analysis_matrix(theta);
    const ComplexMatrix combined_analysis = a_lambda * l1 + a_theta * l2;
    out.adjoint_combination_surjective = is_surjective(combined_analysis, tol);

    const ComplexMatrix combined_synthesis =
        l1.adjoint() * a_lambda.adjoint() + l2.adjoint() * a_theta.adjoint();
    const RealVector sv = singular_values(combined_synthesis);
    const Real smin = min_singular_over_domain(sv, combined_synthesis.cols());
    out.synthesis_lower_constant = smin * smin;
    out.synthesis_bounded_below = smin > rank_threshold(combined_synthesis, sv(0), tol);
    return out;
}

CrossSurjectivity cross_surjectivity(const GFrameFamily& lambda, const GFrameFamily& theta,
                                     const TolerancePolicy& tol) {
    tol.check();
    require_compatible(lambda, theta);
    require_frame(lambda, tol, "cross_surjectivity: Lambda");
    CrossSurjectivity out;
    out.cross = cross_operator(theta, lambda);
    out.cross_rank = numerical_rank(out.cross, tol);
    out.cross_surjective = out.cross_rank == theta.domain_dim;
    out.theta_is_frame_implied = out.cross_surjective;
    out.theta_is_frame = frame_bounds(theta, tol).is_frame;
    out.lambda_is_riesz_type = riesz_check(lambda, tol).is_riesz_type;
    return out;
}

PerturbationResult perturbation_riesz_transfer(const GFrameFamily& lambda,
                                               const GFrameFamily& theta,
                                               const TolerancePolicy& tol) {
    tol.check();
    require_compatible(lambda, theta);
    if (lambda.domain_dim != theta.domain_dim) {
        throw ShapeError(
            "perturbation_riesz_transfer: Theta must share Lambda's domain to compare "
            "S_{Theta Lambda} with S_Lambda");
    }
    const FrameReport fl = frame_bounds(lambda, tol);
    if (!fl.is_frame) {
        throw PreconditionError("perturbation_riesz_transfer: Lambda is not a continuous g-frame");
    }
    PerturbationResult out;
    out.lambda_lower_bound = fl.lower_bound;
    out.gap = operator_norm(cross_operator(theta, lambda) - fl.frame_operator);
    out.criterion_met = out.gap < fl.lower_bound * (1.0 - tol.rel_eps);
    if (out.criterion_met) {
        out.lambda_is_riesz_type = riesz_check(lambda, tol).is_riesz_type;
        out.theta_is_riesz_type = riesz_check(theta, tol).is_riesz_type;
        out.equivalence_verified = *out.lambda_is_riesz_type == *out.theta_is_riesz_type;
    }
    return out;
}

} // namespace gframe
