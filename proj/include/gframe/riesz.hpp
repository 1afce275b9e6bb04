#pragma once

#include <optional>

#include "gframe/core.hpp"
#include "gframe/frame_analysis.hpp"

namespace gframe {

// Riesz-type detection. The verdict is computed three ways: rank of the
// analysis operator (range equals K-hat), a positive lower bound for the
// synthesis operator over K-hat, and absence of a nonzero synthesis kernel
// vector. They must agree; is_riesz_type reports the rank verdict.
struct RieszReport {
    bool is_riesz_type = false;
    int analysis_rank = 0;
    int khat_dim = 0;
    // Optimal A and B in A|phi|^2 <= |T phi|^2 <= B|phi|^2 over K-hat.
    Real synthesis_lower_bound = 0.0;
    Real synthesis_upper_bound = 0.0;
    // Lower frame bound A_Lambda; bounded above by synthesis_lower_bound for
    // Riesz-type families.
    Real frame_lower_bound = 0.0;
    Real frame_upper_bound = 0.0;

    bool rank_criterion = false;
    bool bound_criterion = false;
    bool kernel_criterion = false;
    // Unit-norm (in K-hat) vector minimizing |T phi| / |phi|.
    KHatVector kernel_witness;
    Real kernel_witness_residual = 0.0;

    bool criteria_agree() const {
        return rank_criterion == bound_criterion && bound_criterion == kernel_criterion;
    }
};

// Precondition: fam is a frame (PreconditionError otherwise).
RieszReport riesz_check(const GFrameFamily& fam, const TolerancePolicy& tol = {});

// True iff |T_Lambda phi| <= rel_eps * sqrt(B_Lambda) * |phi|, i.e. phi lies in
// the synthesis kernel up to tolerance. Always true for phi = 0.
bool synthesis_kernel_test(const GFrameFamily& fam, const KHatVector& phi,
                           const TolerancePolicy& tol = {});

struct MixedConstruction {
    GFrameFamily family;  // blocks Lambda_i L1 + Theta_i L2
    RieszReport riesz;
    bool adjoint_combination_surjective = false;  // T*_Lambda L1 + T*_Theta L2 onto K-hat
    bool synthesis_bounded_below = false;         // L1^* T_Lambda + L2^* T_Theta
    Real synthesis_lower_constant = 0.0;          // optimal M
    FrameReport frame;
    Real sandwich_lower = 2.0;
    Real sandwich_upper = 0.0;  // B_Lambda |L1|^2 + 2 + B_Theta |L2|^2
    bool sandwich_holds = false;
    // S_Gamma - L1^* S_Lambda L1 - L2^* S_Theta L2 = 2I.
    bool expansion_identity_holds = false;

    bool equivalences_agree() const {
        return riesz.is_riesz_type == adjoint_combination_surjective &&
               adjoint_combination_surjective == synthesis_bounded_below;
    }
};

// Requires S_{Lambda Theta} = I and L1^* L2 = I; throws PreconditionError
// naming the failed hypothesis.
MixedConstruction mixed_construction(const GFrameFamily& lambda, const GFrameFamily& theta,
                                     const ComplexMatrix& l1, const ComplexMatrix& l2,
                                     const TolerancePolicy& tol = {});

struct CrossSurjectivity {
    ComplexMatrix cross;  // S_{Theta Lambda}
    int cross_rank = 0;
    bool cross_surjective = false;
    // Surjectivity of S_{Theta Lambda} forces Theta to be a frame.
    bool theta_is_frame_implied = false;
    bool theta_is_frame = false;
    bool lambda_is_riesz_type = false;
};

CrossSurjectivity cross_surjectivity(const GFrameFamily& lambda, const GFrameFamily& theta,
                                     const TolerancePolicy& tol = {});

struct PerturbationResult {
    Real gap = 0.0;  // |S_{Theta Lambda} - S_Lambda|
    Real lambda_lower_bound = 0.0;
    bool criterion_met = false;
    // Set only when the criterion is met.
    std::optional<bool> equivalence_verified;
    std::optional<bool> lambda_is_riesz_type;
    std::optional<bool> theta_is_riesz_type;
};

// Compares S_{Theta Lambda} against S_Lambda; Theta must share Lambda's domain.
PerturbationResult perturbation_riesz_transfer(const GFrameFamily& lambda,
                                               const GFrameFamily& theta,
                                               const TolerancePolicy& tol = {});

} // namespace gframe
