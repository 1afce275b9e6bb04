#pragma once

#include "gframe/core.hpp"

namespace gframe {

// The five relations between two g-frames Lambda (on H) and Theta (on K)
// sharing a measure space and codomain blocks. In finite dimension the sum of
// the two analysis ranges is always closed, so disjoint and weakly_disjoint
// describe the same behavior; they are still derived by separate routes
// (rank identity for the intersection, kernel test on Gamma) as a cross-check.
struct DisjointnessReport {
    bool strongly_disjoint = false;
    bool disjoint = false;
    bool weakly_disjoint = false;
    bool complementary_pair = false;
    bool strongly_complementary_pair = false;

    Real cross_operator_norm = 0.0;   // |S_{Theta Lambda}|
    Real orthogonality_threshold = 0.0;
    int lambda_rank = 0;
    int theta_rank = 0;
    int range_intersection_dim = 0;   // rank A + rank B - rank [A|B]
    int range_sum_dim = 0;            // rank [A|B]
    int khat_dim = 0;
};

// Preconditions: compatible families, both frames (PreconditionError).
DisjointnessReport classify(const GFrameFamily& lambda, const GFrameFamily& theta,
                            const TolerancePolicy& tol = {});

// Gamma_i(h + k) = Lambda_i h + Theta_i k on H (+) K, H coordinates first.
GFrameFamily gamma_family(const GFrameFamily& lambda, const GFrameFamily& theta);

// Delta_i(h + k) = Lambda_i S_Lambda^{-1/2} h + Theta_i S_Theta^{-1/2} k.
// Parseval whenever the pair is strongly disjoint.
GFrameFamily delta_family(const GFrameFamily& lambda, const GFrameFamily& theta,
                          const TolerancePolicy& tol = {});

// Combined family Delta_i(h + k) = Lambda_i L1 h + Theta_i L2 k for given L1, L2.
GFrameFamily delta_family(const GFrameFamily& lambda, const GFrameFamily& theta,
                          const ComplexMatrix& l1, const ComplexMatrix& l2);

// True iff {Lambda_i L1}, {Theta_i L2} and the combined family are all
// Parseval. L1 and L2 must be invertible (PreconditionError otherwise).
bool strong_disjointness_converse_check(const GFrameFamily& lambda, const GFrameFamily& theta,
                                        const ComplexMatrix& l1, const ComplexMatrix& l2,
                                        const TolerancePolicy& tol = {});

// True iff the only vector annihilated by every Gamma_i is zero.
bool kernel_triviality(const GFrameFamily& gamma, const TolerancePolicy& tol = {});

// Norms of the sum map L(F + G) = F + G from Range T*_Lambda (+) Range T*_Theta
// onto the range sum, computed from orthonormal range bases. For a disjoint
// pair inverse_norm is finite and A_Gamma >= min(A_Lambda, A_Theta) / inverse_norm^2,
// B_Gamma <= norm^2 max(B_Lambda, B_Theta) with norm^2 <= 2.
struct SumMapNorms {
    Real norm = 0.0;
    Real inverse_norm = 0.0;  // +inf when the ranges intersect
};

SumMapNorms range_sum_map_norms(const GFrameFamily& lambda, const GFrameFamily& theta,
                                const TolerancePolicy& tol = {});

} // namespace gframe
