#pragma once

#include <cstdint>
#include <utility>

#include "gframe/core.hpp"
#include "gframe/frame_analysis.hpp"

namespace gframe {

struct OperatorPair {
    ComplexMatrix l1;
    ComplexMatrix l2;
};

// A continuous frame F: Omega -> C^dim given by one vector per atom.
struct ContinuousFrameSpec {
    MeasureSpace space;
    int dim = 0;
    std::vector<ComplexVector> vectors;
};

// Moore-Penrose pseudo-inverse via SVD, singular values below the rank
// threshold treated as zero. For surjective t, t * pinv(t) = I.
ComplexMatrix pseudo_inverse(const ComplexMatrix& t, const TolerancePolicy& tol = {});

// Frame bounds certificate for Lambda L1^* + Theta L2^* built from a disjoint
// pair: A_Gamma / |L_s^+|^2 <= A_result and B_result <= 2 B_Gamma max(|L1|^2, |L2|^2),
// where L_s is the surjective operator and Gamma = gamma_family(Lambda, Theta).
struct SumCertificate {
    int surjective_operator = 0;  // 1 or 2
    Real pinv_norm = 0.0;
    Real gamma_lower = 0.0;
    Real gamma_upper = 0.0;
    Real lower_certificate = 0.0;
    Real upper_certificate = 0.0;
    FrameReport result;
    bool sandwich_holds = false;
};

struct SumResult {
    GFrameFamily family;
    SumCertificate certificate;
};

// Blocks Lambda_i L1^* + Theta_i L2^*. L1 and L2 are m x d; the result lives on
// C^m. Requires a disjoint pair and at least one surjective operator.
SumResult disjoint_sum_family(const GFrameFamily& lambda, const GFrameFamily& theta,
                              const OperatorPair& pair, const TolerancePolicy& tol = {});

struct StrongSumResult {
    GFrameFamily family;  // blocks Lambda_i L1 + Theta_i L2
    FrameReport report;
    Real scalar = 0.0;    // A with L1^* L1 + L2^* L2 = A I
    bool inputs_parseval = false;
    // When both inputs are Parseval: result tight with bound exactly A.
    bool tight_with_scalar = false;
    Real lower_certificate = 0.0;  // A min(A_Lambda, A_Theta)
    Real upper_certificate = 0.0;  // B_Lambda |L1|^2 + B_Theta |L2|^2
    bool bounds_hold = false;
};

// Requires a strongly disjoint pair and L1^* L1 + L2^* L2 = A I with A > 0.
StrongSumResult strongly_disjoint_sum(const GFrameFamily& lambda, const GFrameFamily& theta,
                                      const OperatorPair& pair, const TolerancePolicy& tol = {});

struct DirectSumDuals {
    GFrameFamily gamma;  // [Lambda_i | Psi_i]
    GFrameFamily delta;  // [Theta_i | Phi_i]
    bool dual_verified = false;
};

// Lambda is a dual of Theta on H, Psi a dual of Phi on K; (Lambda, Phi) and
// (Theta, Psi) strongly disjoint. Each failed hypothesis raises a named
// PreconditionError.
DirectSumDuals direct_sum_duals(const GFrameFamily& lambda, const GFrameFamily& theta,
                                const GFrameFamily& psi, const GFrameFamily& phi,
                                const TolerancePolicy& tol = {});

struct PseudoDual {
    GFrameFamily dual_candidate;  // Lambda_i S_Lambda^{-1} L1^+
    GFrameFamily sum_family;      // Lambda_i L1^* + Theta_i L2^*
    GFrameFamily single_family;   // Lambda_i L1^*
    bool dual_of_sum = false;
    bool dual_of_single = false;
};

// Requires a strongly disjoint pair and a surjective L1.
PseudoDual pseudo_dual(const GFrameFamily& lambda, const GFrameFamily& theta,
                       const OperatorPair& pair, const TolerancePolicy& tol = {});

struct LiftedFamilies {
    GFrameFamily lambda;  // f -> (<f, F(w)>, 0)
    GFrameFamily theta;   // f -> (<S_F^{-1} f, F(w)>, 0)
    GFrameFamily phi;     // g -> (0, <S_G^{-1} g, G(w)>)
    GFrameFamily psi;     // g -> (0, <g, G(w)>)
};

ComplexMatrix continuous_frame_operator(const ContinuousFrameSpec& spec);

// Lifts two continuous frames over a shared measure space into four g-frames
// with values in C^2. Throws PreconditionError if either frame operator is
// singular.
LiftedFamilies lift_continuous_frame(const ContinuousFrameSpec& f, const ContinuousFrameSpec& g,
                                     const TolerancePolicy& tol = {});

// Reads a family with all block dims 1 as the continuous frame
// F(w_i) = Lambda_i^* (so Lambda_i f = <f, F(w_i)>).
ContinuousFrameSpec continuous_frame_from_family(const GFrameFamily& fam);

// --- seeded generators -----------------------------------------------------

struct GeneratorRequest {
    std::uint64_t seed = 1;
    int atoms = 2;
    int domain_dim = 2;
    std::vector<int> block_dims;  // empty -> all ones
    Real weight_min = 0.5;
    Real weight_max = 2.0;
    bool require_frame = true;
    int max_attempts = 16;
};

struct GeneratedFamily {
    GFrameFamily family;
    std::uint64_t seed = 0;
    bool is_frame = false;
    int attempts = 0;
};

// Deterministic in the request. Blocks have independent complex Gaussian
// entries. With require_frame, non-frames are re-drawn up to max_attempts
// times; exhaustion (always the case when N < d) raises GenerationError.
GeneratedFamily random_gframe(const GeneratorRequest& request, const TolerancePolicy& tol = {});

struct PairRequest {
    std::uint64_t seed = 1;
    int atoms = 2;
    std::vector<int> block_dims;  // empty -> all ones
    int dim_h = 1;
    int dim_k = 1;
    Real weight_min = 0.5;
    Real weight_max = 2.0;
};

// Strongly disjoint Parseval pair: orthonormal columns of a Gaussian matrix
// (QR with positive real diagonal in R) split between the two embedded
// analysis matrices. Requires dim_h + dim_k <= N.
std::pair<GFrameFamily, GFrameFamily> random_strongly_disjoint_parseval_pair(
    const PairRequest& request);

// Pair of frames whose analysis ranges share exactly `overlap` dimensions
// (generic position otherwise). Requires overlap <= min(dim_h, dim_k) and
// dim_h + dim_k - overlap <= N.
std::pair<GFrameFamily, GFrameFamily> random_overlapping_pair(const PairRequest& request,
                                                              int overlap);

// Shared measure space drawn from the request's seed and weight range.
MeasureSpace random_measure_space(std::uint64_t seed, int atoms, Real weight_min,
                                  Real weight_max);

} // namespace gframe
