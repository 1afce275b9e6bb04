#include "gframe/property_suite.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "gframe/constructions.hpp"
#include "gframe/disjointness.hpp"
#include "gframe/frame_analysis.hpp"
#include "gframe/linalg.hpp"
#include "gframe/riesz.hpp"
#include "gframe/sampling.hpp"

namespace gframe {

namespace {

using sampling::Engine;

class Tally {
public:
    void record(const std::string& name, bool ok, Real deviation = 0.0) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            it = index_.emplace(name, entries_.size()).first;
            entries_.push_back({name, 0, 0, 0.0});
        }
        Entry& e = entries_[it->second];
        ++e.cases;
        if (!ok) {
            ++e.failures;
        }
        if (std::isfinite(deviation)) {
            e.worst = std::max(e.worst, deviation);
        }
    }

    void flush(RunReport& report) const {
        for (const auto& e : entries_) {
            report.check(e.name, e.failures == 0,
                         {{"cases", static_cast<Real>(e.cases)},
                          {"failures", static_cast<Real>(e.failures)},
                          {"worst_deviation", e.worst}});
        }
    }

private:
    struct Entry {
        std::string name;
        int cases;
        int failures;
        Real worst;
    };
    std::vector<Entry> entries_;
    std::map<std::string, std::size_t> index_;
};

std::vector<int> draw_block_dims(Engine& rng, int atoms, int max_dim) {
    std::vector<int> dims(atoms);
    for (auto& d : dims) {
        d = sampling::uniform_int(rng, 1, max_dim);
    }
    return dims;
}

int total(const std::vector<int>& dims) {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

Real rel_dev(Real value, Real reference, Real scale) {
    return std::abs(value - reference) / std::max<Real>(scale, 1e-300);
}

Real matrix_dev(const ComplexMatrix& x, const ComplexMatrix& y) {
    const Real scale = std::max<Real>(1.0, y.cwiseAbs().maxCoeff());
    return (x - y).cwiseAbs().maxCoeff() / scale;
}

Real family_dev(const GFrameFamily& a, const GFrameFamily& b) {
    Real worst = 0.0;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        worst = std::max(worst, matrix_dev(a.blocks[i], b.blocks[i]));
    }
    return worst;
}

// --- single-family properties ------------------------------------------------

void single_family_case(Engine& rng, std::uint64_t seed, const TolerancePolicy& tol, Tally& t) {
    const Real eps = tol.rel_eps;
    const int atoms = sampling::uniform_int(rng, 1, 8);
    const std::vector<int> dims = draw_block_dims(rng, atoms, 3);
    const int n_total = total(dims);
    const int d = sampling::uniform_int(rng, 1, std::min(6, n_total));
    GeneratorRequest req;
    req.seed = seed;
    req.atoms = atoms;
    req.domain_dim = d;
    req.block_dims = dims;
    const GFrameFamily fam = random_gframe(req, tol).family;
    const MeasureSpace& space = fam.space;

    // core-model
    {
        const KHatVector f = sampling::gaussian_khat(rng, dims);
        const KHatVector g = sampling::gaussian_khat(rng, dims);
        const Complex direct = khat_inner(f, g, space);
        const Complex embedded = embed(g, space).dot(embed(f, space));
        const Real scale = khat_norm(f, space) * khat_norm(g, space);
        const Real dev = std::abs(direct - embedded) / scale;
        t.record("core: embed is an isometry", dev <= eps, dev);
        const Real sym = std::abs(direct - std::conj(khat_inner(g, f, space))) / scale;
        t.record("core: khat_inner conjugate symmetry", sym <= eps, sym);

        const ComplexVector h = sampling::gaussian_vector(rng, d);
        const KHatVector blockwise = apply_analysis(fam, h);
        const KHatVector via_matrix = unembed(analysis_matrix(fam) * h, space, dims);
        Real worst = 0.0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            worst = std::max(worst, (blockwise.blocks[i] - via_matrix.blocks[i]).norm() /
                                        std::max<Real>(1.0, blockwise.blocks[i].norm()));
        }
        t.record("core: analysis matrix reproduces blockwise application", worst <= eps, worst);
    }

    // frame-analysis
    const FrameReport rep = frame_bounds(fam, tol);
    const ComplexMatrix a = analysis_matrix(fam);
    {
        const Real dev = matrix_dev(rep.frame_operator, a.adjoint() * a);
        t.record("frame: S equals A^* A", dev <= eps, dev);
        const Real herm = matrix_dev(rep.frame_operator, rep.frame_operator.adjoint());
        t.record("frame: S Hermitian", herm <= eps, herm);
        t.record("frame: lower bound <= upper bound", rep.lower_bound <= rep.upper_bound);

        Real worst = 0.0;
        bool ok = true;
        for (int k = 0; k < 100; ++k) {
            const ComplexVector h = sampling::gaussian_vector(rng, d);
            const Real hn2 = h.squaredNorm();
            Real energy = 0.0;
            for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
                energy += space.weights[i] * (fam.blocks[i] * h).squaredNorm();
            }
            const Real slack = eps * rep.upper_bound * hn2;
            const Real lo_violation = rep.lower_bound * hn2 - energy;
            const Real hi_violation = energy - rep.upper_bound * hn2;
            worst = std::max({worst, lo_violation / (rep.upper_bound * hn2),
                              hi_violation / (rep.upper_bound * hn2)});
            ok = ok && lo_violation <= slack && hi_violation <= slack;
        }
        t.record("frame: frame inequality with spectral bounds", ok, std::max(worst, 0.0));

        const Real sigma = operator_norm(a.adjoint());
        const Real dev_norm = rel_dev(sigma, std::sqrt(rep.upper_bound), std::sqrt(rep.upper_bound));
        t.record("frame: |T| = sqrt(B)", dev_norm <= eps, dev_norm);
    }
    if (rep.is_frame) {
        const ComplexVector f = sampling::gaussian_vector(rng, d);
        const ComplexVector g = sampling::gaussian_vector(rng, d);
        const ComplexVector s_inv_f = hermitian_inverse(rep.frame_operator, tol) * f;
        Complex sum{0.0, 0.0};
        for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
            const ComplexVector v = fam.blocks[i].adjoint() * (fam.blocks[i] * g);
            sum += space.weights[i] * v.dot(s_inv_f);
        }
        const Real dev = std::abs(sum - g.dot(f)) / (f.norm() * g.norm());
        t.record("frame: reconstruction identity", dev <= eps, dev);

        const GFrameFamily dual = canonical_dual(fam, tol);
        t.record("frame: canonical dual is a dual", is_dual_pair(dual, fam, tol));
        const Real inv_dev = family_dev(canonical_dual(dual, tol), fam);
        t.record("frame: canonical dual is an involution", inv_dev <= eps, inv_dev);
        t.record("frame: parseval_normalize yields Parseval",
                 frame_bounds(parseval_normalize(fam, tol), tol).is_parseval);
        const Real cross_dev = matrix_dev(cross_operator(fam, fam), rep.frame_operator);
        t.record("frame: S_{Lambda Lambda} = S_Lambda", cross_dev <= eps, cross_dev);

        // riesz-type
        const RieszReport rr = riesz_check(fam, tol);
        t.record("riesz: rank, bound and kernel criteria agree", rr.criteria_agree());
        t.record("riesz: Riesz-type implies N <= d", !rr.is_riesz_type || n_total <= d);
        t.record("riesz: synthesis upper bound = B",
                 approx_equal(rr.synthesis_upper_bound, rep.upper_bound, eps),
                 rel_dev(rr.synthesis_upper_bound, rep.upper_bound, rep.upper_bound));
        if (rr.is_riesz_type) {
            t.record("riesz: A_Lambda <= optimal synthesis lower bound",
                     rep.lower_bound <= rr.synthesis_lower_bound * (1.0 + eps));
            const KHatVector phi = sampling::gaussian_khat(rng, dims);
            t.record("riesz: no nonzero synthesis kernel vector",
                     !synthesis_kernel_test(fam, phi, tol));
        } else {
            t.record("riesz: kernel witness is annihilated",
                     synthesis_kernel_test(fam, rr.kernel_witness, tol));
        }

        // Perturbation transfer (Theta = Lambda + small perturbation).
        GFrameFamily theta = fam;
        const Real delta = sampling::uniform_real(rng, 0.0, 0.5) * std::sqrt(rep.lower_bound);
        for (auto& b : theta.blocks) {
            b += delta * sampling::gaussian_matrix(rng, b.rows(), b.cols()) /
                 std::sqrt(static_cast<Real>(fam.atom_count() * b.size()));
        }
        const PerturbationResult pr = perturbation_riesz_transfer(fam, theta, tol);
        const ComplexMatrix cross = cross_operator(theta, fam);
        const Real gap_dev = rel_dev(pr.gap, operator_norm(cross - rep.frame_operator), rep.upper_bound);
        t.record("riesz: perturbation gap is |S_{Theta Lambda} - S_Lambda|", gap_dev <= eps, gap_dev);
        if (pr.criterion_met) {
            t.record("riesz: perturbation criterion transfers the Riesz verdict",
                     pr.equivalence_verified.value_or(false));
            const ComplexVector f2 = sampling::gaussian_vector(rng, d);
            const Real lhs = (cross * f2).norm();
            const Real rhs = (rep.lower_bound - pr.gap) * f2.norm();
            t.record("riesz: |S_{Theta Lambda} f| >= (A - gap)|f|", lhs >= rhs * (1.0 - eps));
        } else {
            t.record("riesz: no conclusion without the criterion", !pr.equivalence_verified);
        }

        // Cross-operator surjectivity with a second family on another domain.
        GeneratorRequest req2 = req;
        req2.seed = sampling::mix_seed(seed, 77);
        req2.domain_dim = sampling::uniform_int(rng, 1, std::min(6, n_total));
        req2.require_frame = false;
        GFrameFamily other = random_gframe(req2, tol).family;
        other.space = space;
        if (sampling::uniform_int(rng, 0, 2) == 0 && other.domain_dim > 1) {
            // Rank-one projector on the second domain kills surjectivity.
            const ComplexVector u = sampling::gaussian_vector(rng, other.domain_dim).normalized();
            other = right_multiply(other, u * u.adjoint());
        }
        const CrossSurjectivity cs = cross_surjectivity(fam, other, tol);
        t.record("riesz: surjective S_{Theta Lambda} implies Theta is a frame",
                 !cs.cross_surjective || cs.theta_is_frame);
        t.record("riesz: Theta frame and Lambda Riesz-type imply surjective S_{Theta Lambda}",
                 !(cs.theta_is_frame && cs.lambda_is_riesz_type) || cs.cross_surjective);

        // Mixed construction with S_{Lambda Theta} = I and L1^* L2 = I.
        const ComplexMatrix l1 = sampling::well_conditioned(rng, d);
        const ComplexMatrix l2 = l1.adjoint().inverse();
        const MixedConstruction mc = mixed_construction(fam, dual, l1, l2, tol);
        t.record("riesz: mixed construction equivalences agree", mc.equivalences_agree());
        t.record("riesz: mixed construction frame sandwich", mc.sandwich_holds);
        t.record("riesz: mixed construction cross-term expansion", mc.expansion_identity_holds);
    }
}

// --- pair properties ------------------------------------------------------------

enum class PairKind { strongly_disjoint, disjoint, overlapping };

struct PairCase {
    GFrameFamily lambda;
    GFrameFamily theta;
    PairKind kind;
};

PairCase draw_pair(Engine& rng, std::uint64_t seed, bool same_domain) {
    for (;;) {
        const int atoms = sampling::uniform_int(rng, 1, 8);
        const std::vector<int> dims = draw_block_dims(rng, atoms, 3);
        const int n_total = total(dims);
        if (n_total < 2) {
            continue;
        }
        const auto kind = static_cast<PairKind>(sampling::uniform_int(rng, 0, 2));
        PairRequest req;
        req.seed = seed;
        req.atoms = atoms;
        req.block_dims = dims;
        const int cap = kind == PairKind::overlapping ? n_total : n_total;
        req.dim_h = sampling::uniform_int(rng, 1, std::min(6, cap - 1));
        req.dim_k = same_domain ? req.dim_h : sampling::uniform_int(rng, 1, std::min(6, cap - 1));
        if (kind == PairKind::strongly_disjoint) {
            if (req.dim_h + req.dim_k > n_total) {
                continue;
            }
            auto [l, th] = random_strongly_disjoint_parseval_pair(req);
            // Invertible right factors keep the ranges and break Parseval.
            if (sampling::uniform_int(rng, 0, 1) == 1) {
                l = right_multiply(l, sampling::well_conditioned(rng, req.dim_h));
                th = right_multiply(th, sampling::well_conditioned(rng, req.dim_k));
            }
            return {l, th, kind};
        }
        const int overlap = kind == PairKind::disjoint
                                ? 0
                                : sampling::uniform_int(rng, 1, std::min(req.dim_h, req.dim_k));
        if (req.dim_h + req.dim_k - overlap > n_total) {
            continue;
        }
        auto [l, th] = random_overlapping_pair(req, overlap);
        return {l, th, kind};
    }
}

void pair_case(Engine& rng, std::uint64_t seed, const TolerancePolicy& tol, Tally& t) {
    const Real eps = tol.rel_eps;
    const bool same_domain = sampling::uniform_int(rng, 0, 1) == 1;
    const PairCase pc = draw_pair(rng, seed, same_domain);
    const GFrameFamily& lambda = pc.lambda;
    const GFrameFamily& theta = pc.theta;
    const DisjointnessReport dr = classify(lambda, theta, tol);
    const GFrameFamily gamma = gamma_family(lambda, theta);
    const FrameReport gr = frame_bounds(gamma, tol);
    const bool gamma_riesz = gr.is_frame && riesz_check(gamma, tol).is_riesz_type;

    t.record("disjoint: generator kind matches classification",
             (pc.kind == PairKind::strongly_disjoint) == dr.strongly_disjoint &&
                 (pc.kind == PairKind::overlapping) == !dr.disjoint);
    t.record("disjoint: strongly => disjoint => weakly",
             (!dr.strongly_disjoint || dr.disjoint) && (!dr.disjoint || dr.weakly_disjoint));
    t.record("disjoint: strongly complementary => complementary and strongly disjoint",
             !dr.strongly_complementary_pair || (dr.complementary_pair && dr.strongly_disjoint));
    t.record("disjoint: disjoint <=> Gamma is a frame", dr.disjoint == gr.is_frame);
    t.record("disjoint: complementary <=> Gamma Riesz-type", dr.complementary_pair == gamma_riesz);
    t.record("disjoint: strongly complementary <=> strongly disjoint and Gamma Riesz-type",
             dr.strongly_complementary_pair == (dr.strongly_disjoint && gamma_riesz));
    t.record("disjoint: weakly disjoint <=> trivial Gamma kernel",
             dr.weakly_disjoint == kernel_triviality(gamma, tol));

    const FrameReport fl = frame_bounds(lambda, tol);
    const FrameReport ft = frame_bounds(theta, tol);
    if (dr.disjoint) {
        const SumMapNorms sm = range_sum_map_norms(lambda, theta, tol);
        const Real lower = std::min(fl.lower_bound, ft.lower_bound) /
                           (sm.inverse_norm * sm.inverse_norm);
        const Real upper = sm.norm * sm.norm * std::max(fl.upper_bound, ft.upper_bound);
        t.record("disjoint: Gamma bounds via the sum map",
                 gr.lower_bound >= lower * (1.0 - eps) && gr.upper_bound <= upper * (1.0 + eps) &&
                     sm.norm * sm.norm <= 2.0 * (1.0 + eps));
    }

    const GFrameFamily delta = delta_family(lambda, theta, tol);
    const FrameReport delta_rep = frame_bounds(delta, tol);
    if (dr.strongly_disjoint) {
        const Real dev = matrix_dev(delta_rep.frame_operator,
                                    ComplexMatrix::Identity(delta.domain_dim, delta.domain_dim));
        t.record("disjoint: strongly disjoint => Delta Parseval", dev <= eps, dev);
    }
    const bool converse = strong_disjointness_converse_check(
        lambda, theta, hermitian_inverse_sqrt(fl.frame_operator, tol),
        hermitian_inverse_sqrt(ft.frame_operator, tol), tol);
    t.record("disjoint: Parseval triple certifies strong disjointness",
             converse == dr.strongly_disjoint);

    if (lambda.domain_dim != theta.domain_dim) {
        return;
    }
    const int d = lambda.domain_dim;

    if (dr.disjoint) {
        const int m = sampling::uniform_int(rng, 1, d);
        OperatorPair pair{sampling::surjective_matrix(rng, m, d),
                          sampling::gaussian_matrix(rng, m, d)};
        if (sampling::uniform_int(rng, 0, 1) == 1) {
            std::swap(pair.l1, pair.l2);
        }
        const SumResult sr = disjoint_sum_family(lambda, theta, pair, tol);
        t.record("constructions: sum of disjoint frames is a frame", sr.certificate.result.is_frame);
        t.record("constructions: disjoint sum certificate sandwich", sr.certificate.sandwich_holds);
    }

    if (dr.strongly_disjoint) {
        const Real scalar = sampling::uniform_real(rng, 0.25, 4.0);
        const ComplexMatrix q = sampling::isometry(rng, 2 * d, d) * std::sqrt(scalar);
        const OperatorPair pair{q.topRows(d), q.bottomRows(d)};
        const StrongSumResult ss = strongly_disjoint_sum(lambda, theta, pair, tol);
        t.record("constructions: strongly disjoint sum bounds", ss.bounds_hold);
        if (ss.inputs_parseval) {
            t.record("constructions: Parseval inputs give a tight sum with bound A",
                     ss.tight_with_scalar,
                     rel_dev(ss.report.upper_bound, scalar, scalar));
            const ComplexVector h = sampling::gaussian_vector(rng, d);
            const Real lhs = (pair.l1 * h).squaredNorm() + (pair.l2 * h).squaredNorm();
            t.record("constructions: tight sum gives |L1 h|^2 + |L2 h|^2 = A|h|^2",
                     approx_equal(lhs, ss.report.upper_bound * h.squaredNorm(), eps));
            const Complex alpha = sampling::gaussian_complex(rng);
            const Complex beta = sampling::gaussian_complex(rng);
            const Real norm = std::sqrt(std::norm(alpha) + std::norm(beta));
            const OperatorPair unit{ComplexMatrix::Identity(d, d) * (alpha / norm),
                                    ComplexMatrix::Identity(d, d) * (beta / norm)};
            t.record("constructions: |alpha|^2 + |beta|^2 = 1 gives Parseval",
                     strongly_disjoint_sum(lambda, theta, unit, tol).report.is_parseval);
        }

        const int m = sampling::uniform_int(rng, 1, d);
        const OperatorPair pd_pair{sampling::surjective_matrix(rng, m, d),
                                   sampling::gaussian_matrix(rng, m, d)};
        const PseudoDual pd = pseudo_dual(lambda, theta, pd_pair, tol);
        t.record("constructions: pseudo-inverse dual of the sum", pd.dual_of_sum);
        t.record("constructions: pseudo-inverse dual of the single family", pd.dual_of_single);
        const OperatorPair identity{ComplexMatrix::Identity(d, d), ComplexMatrix::Identity(d, d)};
        const PseudoDual cd = pseudo_dual(lambda, theta, identity, tol);
        t.record("constructions: canonical dual serves Lambda and Lambda + Theta",
                 cd.dual_of_sum && cd.dual_of_single);
    }
}

void direct_sum_case(Engine& rng, std::uint64_t seed, const TolerancePolicy& tol, Tally& t) {
    const Real eps = tol.rel_eps;
    const int atoms = sampling::uniform_int(rng, 1, 8);
    std::vector<int> dims = draw_block_dims(rng, atoms, 3);
    while (total(dims) < 2) {
        dims = draw_block_dims(rng, atoms, 3);
    }
    const int n_total = total(dims);
    PairRequest req;
    req.seed = seed;
    req.atoms = atoms;
    req.block_dims = dims;
    req.dim_h = sampling::uniform_int(rng, 1, std::min(6, n_total - 1));
    req.dim_k = sampling::uniform_int(rng, 1, std::min(6, n_total - req.dim_h));
    auto [p, q] = random_strongly_disjoint_parseval_pair(req);
    const GFrameFamily lambda = right_multiply(p, sampling::well_conditioned(rng, req.dim_h));
    const GFrameFamily theta = canonical_dual(lambda, tol);
    const GFrameFamily phi = right_multiply(q, sampling::well_conditioned(rng, req.dim_k));
    const GFrameFamily psi = canonical_dual(phi, tol);
    const DirectSumDuals ds = direct_sum_duals(lambda, theta, psi, phi, tol);
    t.record("constructions: direct sums of dual pairs are dual", ds.dual_verified);

    // Lifting two continuous frames.
    const MeasureSpace space = lambda.space;
    const int fdim = sampling::uniform_int(rng, 1, std::min(4, atoms));
    const int gdim = sampling::uniform_int(rng, 1, std::min(4, atoms));
    ContinuousFrameSpec fs{space, fdim, {}};
    ContinuousFrameSpec gs{space, gdim, {}};
    for (int i = 0; i < atoms; ++i) {
        fs.vectors.push_back(sampling::gaussian_vector(rng, fdim));
        gs.vectors.push_back(sampling::gaussian_vector(rng, gdim));
    }
    const auto fs_spec = hermitian_spectrum(continuous_frame_operator(fs));
    const auto gs_spec = hermitian_spectrum(continuous_frame_operator(gs));
    // Skip near-degenerate draws (few atoms relative to the dimension).
    if (fs_spec.values(0) < 1e-3 * fs_spec.values(fdim - 1) ||
        gs_spec.values(0) < 1e-3 * gs_spec.values(gdim - 1)) {
        return;
    }
    const LiftedFamilies lf = lift_continuous_frame(fs, gs, tol);
    t.record("constructions: lifted Theta is a dual of lifted Lambda",
             is_dual_pair(lf.theta, lf.lambda, tol));
    t.record("constructions: lifted Psi is a dual of lifted Phi", is_dual_pair(lf.psi, lf.phi, tol));
    t.record("constructions: lifted Lambda, Phi strongly disjoint",
             classify(lf.lambda, lf.phi, tol).strongly_disjoint);
    t.record("constructions: lifted Theta, Psi strongly disjoint",
             classify(lf.theta, lf.psi, tol).strongly_disjoint);
    const DirectSumDuals lifted = direct_sum_duals(lf.lambda, lf.theta, lf.psi, lf.phi, tol);
    t.record("constructions: lifted direct sums are dual", lifted.dual_verified);

    const ComplexVector h1 = sampling::gaussian_vector(rng, fdim);
    const ComplexVector h2 = sampling::gaussian_vector(rng, fdim);
    const ComplexVector k1 = sampling::gaussian_vector(rng, gdim);
    const ComplexVector k2 = sampling::gaussian_vector(rng, gdim);
    ComplexVector x1(fdim + gdim);
    ComplexVector x2(fdim + gdim);
    x1 << h1, k1;
    x2 << h2, k2;
    Complex pairing{0.0, 0.0};
    for (int i = 0; i < atoms; ++i) {
        pairing += space.weights[i] *
                   (lifted.delta.blocks[i] * x2).dot(lifted.gamma.blocks[i] * x1);
    }
    const Complex expected = h2.dot(h1) + k2.dot(k1);
    const Real dev = std::abs(pairing - expected) / (x1.norm() * x2.norm());
    t.record("constructions: lifted pairing reproduces the direct-sum inner product", dev <= eps,
             dev);
}

} // namespace

RunReport run_property_suite(const SuiteOptions& options) {
    options.tol.check();
    RunReport report;
    report.tolerance = options.tol;
    report.seed = options.seed;
    Tally tally;
    for (int c = 0; c < options.cases; ++c) {
        const std::uint64_t case_seed = sampling::mix_seed(options.seed, static_cast<std::uint64_t>(c));
        Engine rng(case_seed);
        try {
            single_family_case(rng, sampling::mix_seed(case_seed, 1), options.tol, tally);
            pair_case(rng, sampling::mix_seed(case_seed, 2), options.tol, tally);
            direct_sum_case(rng, sampling::mix_seed(case_seed, 3), options.tol, tally);
        } catch (const Error& e) {
            tally.record("suite: cases run without unexpected errors", false);
            report.notes.push_back("case " + std::to_string(c) + ": " + e.what());
            continue;
        }
        tally.record("suite: cases run without unexpected errors", true);
    }
    tally.flush(report);
    return report;
}

} // namespace gframe
