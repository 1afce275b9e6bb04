#pragma once

#include "gframe/core.hpp"

namespace gframe {

struct FrameReport {
    ComplexMatrix frame_operator;
    Real lower_bound = 0.0;  // lambda_min(S)
    Real upper_bound = 0.0;  // lambda_max(S)
    Real frame_threshold = 0.0;
    bool is_frame = false;
    bool is_tight = false;
    bool is_parseval = false;
};

// S = sum_i mu_i Lambda_i^* Lambda_i (d x d, Hermitian PSD).
ComplexMatrix frame_operator(const GFrameFamily& fam);

// Optimal bounds are the extreme eigenvalues of S. A family is a frame when
// lambda_min exceeds the spectral floor, tight when the extremes agree to
// rel_eps and Parseval when they are both 1 to rel_eps.
FrameReport frame_bounds(const GFrameFamily& fam, const TolerancePolicy& tol = {});

// Blocks Lambda_i S^{-1}. Throws SingularOperatorError for non-frames.
GFrameFamily canonical_dual(const GFrameFamily& fam, const TolerancePolicy& tol = {});

// Blocks Lambda_i S^{-1/2}, with S^{-1/2} the Hermitian positive definite
// inverse square root. Throws SingularOperatorError for non-frames.
GFrameFamily parseval_normalize(const GFrameFamily& fam, const TolerancePolicy& tol = {});

// S_{Theta Lambda} = T_Theta T*_Lambda = sum_i mu_i Theta_i^* Lambda_i,
// a d_Theta x d_Lambda matrix.
ComplexMatrix cross_operator(const GFrameFamily& theta, const GFrameFamily& lambda);

// Theta is a dual of Lambda: sum_i mu_i Theta_i^* Lambda_i = I (and the
// adjoint identity), with both families frames.
bool is_dual_pair(const GFrameFamily& theta, const GFrameFamily& lambda,
                  const TolerancePolicy& tol = {});

} // namespace gframe
