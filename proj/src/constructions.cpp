#include "gframe/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "gframe/disjointness.hpp"
#include "gframe/linalg.hpp"

namespace gframe {

ComplexMatrix pseudo_inverse(const ComplexMatrix& t, const TolerancePolicy& tol) {
    tol.check();
    if (t.size() == 0) {
        return ComplexMatrix::Zero(t.cols(), t.rows());
    }
    if (!t.allFinite()) {
        throw NumericError("pseudo_inverse: non-finite matrix entries");
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& sv = svd.singularValues();
    const Real threshold = rank_threshold(t, sv(0), tol);
    RealVector inv = RealVector::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) {
            inv(i) = 1.0 / sv(i);
        }
    }
    return svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
}

namespace {

GFrameFamily add_families(GFrameFamily a, const GFrameFamily& b) {
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        a.blocks[i] += b.blocks[i];
    }
    return a;
}

void require_same_domain(const GFrameFamily& a, const GFrameFamily& b, const char* what) {
    require_compatible(a, b);
    if (a.domain_dim != b.domain_dim) {
        throw ShapeError(std::string(what) + ": families must act on the same space");
    }
}

void require_operator_pair_shape(const OperatorPair& pair, int domain_dim, bool adjoint_form) {
    // adjoint_form: L is m x d and enters as L^*; otherwise L is d x m.
    const auto& l1 = pair.l1;
    const auto& l2 = pair.l2;
    const Eigen::Index d_side1 = adjoint_form ? l1.cols() : l1.rows();
    const Eigen::Index d_side2 = adjoint_form ? l2.cols() : l2.rows();
    if (d_side1 != domain_dim || d_side2 != domain_dim || l1.rows() != l2.rows() ||
        l1.cols() != l2.cols()) {
        std::ostringstream msg;
        msg << "operator pair shapes " << l1.rows() << "x" << l1.cols() << " and " << l2.rows()
            << "x" << l2.cols() << " do not fit domain dimension " << domain_dim;
        throw ShapeError(msg.str());
    }
}

} // namespace

SumResult disjoint_sum_family(const GFrameFamily& lambda, const GFrameFamily& theta,
                              const OperatorPair& pair, const TolerancePolicy& tol) {
    tol.check();
    require_same_domain(lambda, theta, "disjoint_sum_family");
    require_operator_pair_shape(pair, lambda.domain_dim, true);
    if (!classify(lambda, theta, tol).disjoint) {
        throw PreconditionError("disjoint_sum_family: Lambda and Theta are not disjoint");
    }
    SumCertificate cert;
    if (is_surjective(pair.l1, tol)) {
        cert.surjective_operator = 1;
        cert.pinv_norm = operator_norm(pseudo_inverse(pair.l1, tol));
    } else if (is_surjective(pair.l2, tol)) {
        cert.surjective_operator = 2;
        cert.pinv_norm = operator_norm(pseudo_inverse(pair.l2, tol));
    } else {
        throw PreconditionError("disjoint_sum_family: neither L1 nor L2 is surjective");
    }

    SumResult out;
    out.family = add_families(right_multiply(lambda, pair.l1.adjoint()),
                              right_multiply(theta, pair.l2.adjoint()));

    const FrameReport gamma = frame_bounds(gamma_family(lambda, theta), tol);
    cert.gamma_lower = gamma.lower_bound;
    cert.gamma_upper = gamma.upper_bound;
    const Real n1 = operator_norm(pair.l1);
    const Real n2 = operator_norm(pair.l2);
    cert.lower_certificate = gamma.lower_bound / (cert.pinv_norm * cert.pinv_norm);
    cert.upper_certificate = 2.0 * gamma.upper_bound * std::max(n1 * n1, n2 * n2);
    cert.result = frame_bounds(out.family, tol);
    cert.sandwich_holds = cert.result.is_frame &&
                          cert.lower_certificate <= cert.result.lower_bound * (1.0 + tol.rel_eps) &&
                          cert.result.upper_bound <= cert.upper_certificate * (1.0 + tol.rel_eps);
    out.certificate = std::move(cert);
    return out;
}

StrongSumResult strongly_disjoint_sum(const GFrameFamily& lambda, const GFrameFamily& theta,
                                      const OperatorPair& pair, const TolerancePolicy& tol) {
    tol.check();
    require_same_domain(lambda, theta, "strongly_disjoint_sum");
    require_operator_pair_shape(pair, lambda.domain_dim, false);
    if (!classify(lambda, theta, tol).strongly_disjoint) {
        throw PreconditionError("strongly_disjoint_sum: Lambda and Theta are not strongly disjoint");
    }
    const ComplexMatrix gram = pair.l1.adjoint() * pair.l1 + pair.l2.adjoint() * pair.l2;
    const Real scalar = gram(0, 0).real();
    const ComplexMatrix target = scalar * ComplexMatrix::Identity(gram.rows(), gram.cols());
    if (!(scalar > 0.0) || !approx_equal(gram, target, tol.rel_eps)) {
        throw PreconditionError(
            "strongly_disjoint_sum: hypothesis L1^* L1 + L2^* L2 = A I with A > 0 fails");
    }

    StrongSumResult out;
    out.scalar = scalar;
    out.family = add_families(right_multiply(lambda, pair.l1), right_multiply(theta, pair.l2));
    out.report = frame_bounds(out.family, tol);

    const FrameReport fl = frame_bounds(lambda, tol);
    const FrameReport ft = frame_bounds(theta, tol);
    out.inputs_parseval = fl.is_parseval && ft.is_parseval;
    out.tight_with_scalar = out.report.is_tight &&
                            std::abs(out.report.lower_bound - scalar) <= tol.rel_eps * scalar &&
                            std::abs(out.report.upper_bound - scalar) <= tol.rel_eps * scalar;
    const Real n1 = operator_norm(pair.l1);
    const Real n2 = operator_norm(pair.l2);
    out.lower_certificate = scalar * std::min(fl.lower_bound, ft.lower_bound);
    out.upper_certificate = fl.upper_bound * n1 * n1 + ft.upper_bound * n2 * n2;
    out.bounds_hold = out.report.is_frame &&
                      out.lower_certificate <= out.report.lower_bound * (1.0 + tol.rel_eps) &&
                      out.report.upper_bound <= out.upper_certificate * (1.0 + tol.rel_eps);
    return out;
}

DirectSumDuals direct_sum_duals(const GFrameFamily& lambda, const GFrameFamily& theta,
                                const GFrameFamily& psi, const GFrameFamily& phi,
                                const TolerancePolicy& tol) {
    tol.check();
    require_same_domain(lambda, theta, "direct_sum_duals (Lambda, Theta)");
    require_same_domain(psi, phi, "direct_sum_duals (Psi, Phi)");
    require_compatible(lambda, psi);
    if (!is_dual_pair(lambda, theta, tol)) {
        throw PreconditionError("direct_sum_duals: Lambda is not a dual of Theta");
    }
    if (!is_dual_pair(psi, phi, tol)) {
        throw PreconditionError("direct_sum_duals: Psi is not a dual of Phi");
    }
    if (!classify(lambda, phi, tol).strongly_disjoint) {
        throw PreconditionError("direct_sum_duals: Lambda and Phi are not strongly disjoint");
    }
    if (!classify(theta, psi, tol).strongly_disjoint) {
        throw PreconditionError("direct_sum_duals: Theta and Psi are not strongly disjoint");
    }
    DirectSumDuals out;
    out.gamma = gamma_family(lambda, psi);
    out.delta = gamma_family(theta, phi);
    out.dual_verified = is_dual_pair(out.gamma, out.delta, tol);
    return out;
}

PseudoDual pseudo_dual(const GFrameFamily& lambda, const GFrameFamily& theta,
                       const OperatorPair& pair, const TolerancePolicy& tol) {
    tol.check();
    require_same_domain(lambda, theta, "pseudo_dual");
    require_operator_pair_shape(pair, lambda.domain_dim, true);
    if (!classify(lambda, theta, tol).strongly_disjoint) {
        throw PreconditionError("pseudo_dual: Lambda and Theta are not strongly disjoint");
    }
    if (!is_surjective(pair.l1, tol)) {
        throw PreconditionError("pseudo_dual: L1 is not surjective");
    }
    PseudoDual out;
    const ComplexMatrix s_inv = hermitian_inverse(frame_operator(lambda), tol);
    out.dual_candidate = right_multiply(lambda, s_inv * pseudo_inverse(pair.l1, tol));
    out.single_family = right_multiply(lambda, pair.l1.adjoint());
    out.sum_family = add_families(out.single_family, right_multiply(theta, pair.l2.adjoint()));
    out.dual_of_sum = is_dual_pair(out.dual_candidate, out.sum_family, tol);
    out.dual_of_single = is_dual_pair(out.dual_candidate, out.single_family, tol);
    return out;
}

ComplexMatrix continuous_frame_operator(const ContinuousFrameSpec& spec) {
    const auto space_check = validate_space(spec.space);
    if (!space_check.ok()) {
        throw ShapeError("continuous frame: invalid measure space: " + space_check.violations[0]);
    }
    if (spec.vectors.size() != spec.space.atom_count()) {
        throw ShapeError("continuous frame: one vector per atom is required");
    }
    if (spec.dim < 1) {
        throw ShapeError("continuous frame: dimension must be positive");
    }
    ComplexMatrix s = ComplexMatrix::Zero(spec.dim, spec.dim);
    for (std::size_t i = 0; i < spec.vectors.size(); ++i) {
        if (spec.vectors[i].size() != spec.dim) {
            throw ShapeError("continuous frame: vector " + std::to_string(i) +
                             " has the wrong length");
        }
        s += spec.space.weights[i] * (spec.vectors[i] * spec.vectors[i].adjoint());
    }
    return s;
}

LiftedFamilies lift_continuous_frame(const ContinuousFrameSpec& f, const ContinuousFrameSpec& g,
                                     const TolerancePolicy& tol) {
    tol.check();
    const ComplexMatrix sf = continuous_frame_operator(f);
    const ComplexMatrix sg = continuous_frame_operator(g);
    if (f.space != g.space) {
        throw ShapeError("lift_continuous_frame: F and G must share the measure space");
    }
    ComplexMatrix sf_inv;
    ComplexMatrix sg_inv;
    try {
        sf_inv = hermitian_inverse(sf, tol);
    } catch (const SingularOperatorError&) {
        throw PreconditionError("lift_continuous_frame: S_F is singular, F is not a continuous frame");
    }
    try {
        sg_inv = hermitian_inverse(sg, tol);
    } catch (const SingularOperatorError&) {
        throw PreconditionError("lift_continuous_frame: S_G is singular, G is not a continuous frame");
    }

    const std::size_t n = f.space.atom_count();
    const std::vector<int> dims(n, 2);
    LiftedFamilies out{{f.space, f.dim, dims, {}},
                       {f.space, f.dim, dims, {}},
                       {g.space, g.dim, dims, {}},
                       {g.space, g.dim, dims, {}}};
    for (std::size_t i = 0; i < n; ++i) {
        ComplexMatrix lam = ComplexMatrix::Zero(2, f.dim);
        ComplexMatrix the = ComplexMatrix::Zero(2, f.dim);
        ComplexMatrix ph = ComplexMatrix::Zero(2, g.dim);
        ComplexMatrix ps = ComplexMatrix::Zero(2, g.dim);
        // <f, F> = F^* f
        lam.row(0) = f.vectors[i].adjoint();
        the.row(0) = f.vectors[i].adjoint() * sf_inv;
        ph.row(1) = g.vectors[i].adjoint() * sg_inv;
        ps.row(1) = g.vectors[i].adjoint();
        out.lambda.blocks.push_back(std::move(lam));
        out.theta.blocks.push_back(std::move(the));
        out.phi.blocks.push_back(std::move(ph));
        out.psi.blocks.push_back(std::move(ps));
    }
    return out;
}

ContinuousFrameSpec continuous_frame_from_family(const GFrameFamily& fam) {
    require_valid(fam);
    for (int d : fam.block_dims) {
        if (d != 1) {
            throw ShapeError("a continuous frame needs every block dimension to be 1");
        }
    }
    ContinuousFrameSpec spec{fam.space, fam.domain_dim, {}};
    for (const auto& b : fam.blocks) {
        spec.vectors.emplace_back(b.row(0).adjoint());
    }
    return spec;
}

// --- generators ------------------------------------------------------------

namespace {

using Engine = std::mt19937_64;

ComplexMatrix gaussian_matrix(Engine& rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<Real> normal(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    const Real scale = 1.0 / std::sqrt(2.0);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const Real re = normal(rng);
            const Real im = normal(rng);
            m(i, j) = Complex(re * scale, im * scale);
        }
    }
    return m;
}

MeasureSpace draw_space(Engine& rng, int atoms, Real weight_min, Real weight_max) {
    if (atoms < 1) {
        throw GenerationError("generator: atom count must be positive");
    }
    if (!(weight_min > 0.0) || !(weight_max >= weight_min)) {
        throw GenerationError("generator: weight range must satisfy 0 < min <= max");
    }
    std::uniform_real_distribution<Real> uniform(weight_min, weight_max);
    MeasureSpace space;
    space.weights.reserve(atoms);
    for (int i = 0; i < atoms; ++i) {
        space.weights.push_back(weight_min == weight_max ? weight_min : uniform(rng));
    }
    return space;
}

std::vector<int> resolve_block_dims(const std::vector<int>& dims, int atoms) {
    if (dims.empty()) {
        return std::vector<int>(atoms, 1);
    }
    if (static_cast<int>(dims.size()) != atoms) {
        throw GenerationError("generator: block_dims length must equal the atom count");
    }
    for (int d : dims) {
        if (d < 1) {
            throw GenerationError("generator: block dimensions must be positive");
        }
    }
    return dims;
}

// Orthonormal columns with the R factor's diagonal made real positive.
ComplexMatrix orthonormal_columns(Engine& rng, Eigen::Index rows, Eigen::Index cols) {
    const ComplexMatrix g = gaussian_matrix(rng, rows, cols);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
    const ComplexMatrix& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < cols; ++j) {
        const Complex rjj = r(j, j);
        const Real mag = std::abs(rjj);
        if (mag > 0.0) {
            q.col(j) *= rjj / mag;
        }
    }
    return q;
}

} // namespace

MeasureSpace random_measure_space(std::uint64_t seed, int atoms, Real weight_min,
                                  Real weight_max) {
    Engine rng(seed);
    return draw_space(rng, atoms, weight_min, weight_max);
}

GeneratedFamily random_gframe(const GeneratorRequest& request, const TolerancePolicy& tol) {
    tol.check();
    if (request.domain_dim < 1) {
        throw GenerationError("random_gframe: domain dimension must be positive");
    }
    Engine rng(request.seed);
    const MeasureSpace space =
        draw_space(rng, request.atoms, request.weight_min, request.weight_max);
    const std::vector<int> dims = resolve_block_dims(request.block_dims, request.atoms);
    const int total = std::accumulate(dims.begin(), dims.end(), 0);
    if (request.require_frame && total < request.domain_dim) {
        throw GenerationError("random_gframe: N < d, no family of this shape is a frame");
    }
    const int attempts = std::max(1, request.max_attempts);
    GeneratedFamily out;
    out.seed = request.seed;
    for (int attempt = 1; attempt <= attempts; ++attempt) {
        out.family = family_from_analysis(gaussian_matrix(rng, total, request.domain_dim), space,
                                          dims);
        out.attempts = attempt;
        out.is_frame = frame_bounds(out.family, tol).is_frame;
        if (out.is_frame || !request.require_frame) {
            return out;
        }
    }
    throw GenerationError("random_gframe: retry limit reached without drawing a frame");
}

std::pair<GFrameFamily, GFrameFamily> random_strongly_disjoint_parseval_pair(
    const PairRequest& request) {
    Engine rng(request.seed);
    const MeasureSpace space =
        draw_space(rng, request.atoms, request.weight_min, request.weight_max);
    const std::vector<int> dims = resolve_block_dims(request.block_dims, request.atoms);
    const int total = std::accumulate(dims.begin(), dims.end(), 0);
    if (request.dim_h < 1 || request.dim_k < 1 || request.dim_h + request.dim_k > total) {
        throw GenerationError(
            "random_strongly_disjoint_parseval_pair: need 1 <= d_H, d_K and d_H + d_K <= N");
    }
    const ComplexMatrix q = orthonormal_columns(rng, total, request.dim_h + request.dim_k);
    return {family_from_analysis(q.leftCols(request.dim_h), space, dims),
            family_from_analysis(q.rightCols(request.dim_k), space, dims)};
}

std::pair<GFrameFamily, GFrameFamily> random_overlapping_pair(const PairRequest& request,
                                                              int overlap) {
    Engine rng(request.seed);
    const MeasureSpace space =
        draw_space(rng, request.atoms, request.weight_min, request.weight_max);
    const std::vector<int> dims = resolve_block_dims(request.block_dims, request.atoms);
    const int total = std::accumulate(dims.begin(), dims.end(), 0);
    if (request.dim_h < 1 || request.dim_k < 1 || overlap < 0 ||
        overlap > std::min(request.dim_h, request.dim_k) ||
        request.dim_h + request.dim_k - overlap > total) {
        throw GenerationError("random_overlapping_pair: infeasible shape");
    }
    const ComplexMatrix a = gaussian_matrix(rng, total, request.dim_h);
    ComplexMatrix b(total, request.dim_k);
    b.leftCols(overlap) = a * gaussian_matrix(rng, request.dim_h, overlap);
    b.rightCols(request.dim_k - overlap) =
        gaussian_matrix(rng, total, request.dim_k - overlap);
    // Mix the shared and fresh columns so the overlap is not axis aligned.
    b = b * orthonormal_columns(rng, request.dim_k, request.dim_k);
    return {family_from_analysis(a, space, dims), family_from_analysis(b, space, dims)};
}

} // namespace gframe
