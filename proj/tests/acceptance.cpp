// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "gframe/cli.hpp"
#include "gframe/constructions.hpp"
#include "gframe/disjointness.hpp"
#include "gframe/document.hpp"
#include "gframe/frame_analysis.hpp"
#include "gframe/linalg.hpp"
#include "gframe/riesz.hpp"
#include "gframe/sampling.hpp"
#include "support.hpp"

using namespace gframe;
namespace oracle = support::oracle;
namespace fs = std::filesystem;

namespace {

constexpr Real kTol = 1e-9;
constexpr int kCases = 200;
const TolerancePolicy kPolicy{kTol, 10.0};

struct Outcome {
    bool passed = true;
    std::string detail;
};

// Accumulates failures and the worst relative deviation of a criterion.
struct Ledger {
    int cases = 0;
    int failures = 0;
    Real worst = 0.0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (first_failure.empty()) {
                first_failure = what;
            }
        }
    }
    void deviation(Real dev, const std::string& what) {
        worst = std::max(worst, dev);
        expect(dev <= kTol, what + " deviation " + std::to_string(dev));
    }
    Outcome outcome(const std::string& extra = {}) const {
        std::ostringstream s;
        s << "cases=" << cases << " failures=" << failures << " worst=" << worst;
        if (!extra.empty()) {
            s << " " << extra;
        }
        if (!first_failure.empty()) {
            s << " first_failure=\"" << first_failure << "\"";
        }
        return {failures == 0, s.str()};
    }
};

std::uint64_t case_seed(int criterion, int c) {
    return sampling::mix_seed(0xACCE97ULL + static_cast<std::uint64_t>(criterion),
                              static_cast<std::uint64_t>(c));
}

std::vector<int> block_dims(sampling::Engine& rng, int atoms) {
    std::vector<int> dims(atoms);
    for (auto& d : dims) {
        d = sampling::uniform_int(rng, 1, 3);
    }
    return dims;
}

int total(const std::vector<int>& dims) {
    int n = 0;
    for (int d : dims) {
        n += d;
    }
    return n;
}

GFrameFamily random_frame(std::uint64_t seed, bool square = false) {
    sampling::Engine rng(seed);
    GeneratorRequest req;
    req.seed = seed;
    req.atoms = sampling::uniform_int(rng, 1, 8);
    req.block_dims = block_dims(rng, req.atoms);
    const int n = total(req.block_dims);
    req.domain_dim = square && n <= 6 ? n : sampling::uniform_int(rng, 1, std::min(6, n));
    return random_gframe(req, kPolicy).family;
}

Real identity_dev(const ComplexMatrix& x) {
    return oracle::max_abs_diff(x, ComplexMatrix::Identity(x.rows(), x.cols()));
}

// --- criteria ------------------------------------------------------------------

Outcome frame_axioms() {
    Ledger l;
    for (int c = 0; c < kCases; ++c, ++l.cases) {
        const GFrameFamily fam = random_frame(case_seed(1, c));
        const FrameReport r = frame_bounds(fam, kPolicy);
        sampling::Engine rng(case_seed(101, c));
        for (int k = 0; k < 100; ++k) {
            const ComplexVector f = sampling::gaussian_vector(rng, fam.domain_dim);
            Real energy = 0.0;
            for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
                energy += fam.space.weights[i] * (fam.blocks[i] * f).squaredNorm();
            }
            const Real scale = r.upper_bound * f.squaredNorm();
            const Real below = (r.lower_bound * f.squaredNorm() - energy) / scale;
            const Real above = (energy - r.upper_bound * f.squaredNorm()) / scale;
            l.deviation(std::max({below, above, 0.0}), "frame inequality");
        }
        l.expect(r.is_frame, "generated family is not a frame");
    }
    return l.outcome("probes_per_case=100");
}

Outcome reconstruction() {
    Ledger l;
    for (int c = 0; c < kCases; ++c, ++l.cases) {
        const GFrameFamily fam = random_frame(case_seed(2, c));
        const GFrameFamily dual = canonical_dual(fam, kPolicy);
        sampling::Engine rng(case_seed(102, c));
        const ComplexVector f = sampling::gaussian_vector(rng, fam.domain_dim);
        const ComplexVector g = sampling::gaussian_vector(rng, fam.domain_dim);
        // sum mu_i <S^{-1} f, Lambda_i^* Lambda_i g> = sum mu_i <Lambda_i S^{-1} f, Lambda_i g>
        Complex sum = 0.0;
        for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
            sum += fam.space.weights[i] * (fam.blocks[i] * g).dot(dual.blocks[i] * f);
        }
        l.deviation(std::abs(sum - g.dot(f)) / (f.norm() * g.norm()), "reconstruction");
    }
    return l.outcome();
}

Outcome synthesis_norm() {
    Ledger l;
    for (int c = 0; c < kCases; ++c, ++l.cases) {
        const GFrameFamily fam = random_frame(case_seed(3, c));
        const FrameReport r = frame_bounds(fam, kPolicy);
        // The synthesis matrix is the adjoint of the embedded analysis matrix.
        const Real sigma = operator_norm(analysis_matrix(fam).adjoint());
        const Real root = std::sqrt(r.upper_bound);
        l.expect(sigma <= root + kTol, "sigma_max exceeds sqrt(B)");
        l.deviation(std::abs(sigma - root) / root, "sigma_max vs sqrt(B)");
    }
    return l.outcome();
}

PairRequest pair_request(sampling::Engine& rng, std::uint64_t seed) {
    PairRequest req;
    req.seed = seed;
    req.atoms = sampling::uniform_int(rng, 1, 8);
    req.block_dims = block_dims(rng, req.atoms);
    while (total(req.block_dims) < 2) {
        req.block_dims = block_dims(rng, req.atoms);
    }
    const int n = total(req.block_dims);
    req.dim_h = sampling::uniform_int(rng, 1, std::min(6, n - 1));
    req.dim_k = sampling::uniform_int(rng, 1, std::min(6, n - req.dim_h));
    return req;
}

Outcome delta_parseval() {
    Ledger l;
    int flagged = 0;
    for (int c = 0; c < kCases; ++c, ++l.cases) {
        sampling::Engine rng(case_seed(4, c));
        const PairRequest req = pair_request(rng, case_seed(104, c));
        auto [lambda, theta] = random_strongly_disjoint_parseval_pair(req);
        // Distort by invertible factors: still strongly disjoint, no longer Parseval.
        const GFrameFamily a = right_multiply(lambda, sampling::well_conditioned(rng, req.dim_h));
        const GFrameFamily b = right_multiply(theta, sampling::well_conditioned(rng, req.dim_k));
        for (const auto& [x, y] : {std::pair{lambda, theta}, std::pair{a, b}}) {
            l.expect(classify(x, y, kPolicy).strongly_disjoint, "pair not strongly disjoint");
            l.deviation(identity_dev(oracle::frame_operator(delta_family(x, y, kPolicy))),
                        "Delta frame operator");
        }
        // Converse: an overlapping or merely disjoint pair is never certified.
        const int overlap = sampling::uniform_int(rng, 0, std::min(req.dim_h, req.dim_k));
        if (req.dim_h + req.dim_k - overlap <= total(req.block_dims)) {
            auto [p, q] = random_overlapping_pair(req, overlap);
            const bool strongly = classify(p, q, kPolicy).strongly_disjoint;
            const bool certified = strong_disjointness_converse_check(
                p, q, hermitian_inverse_sqrt(frame_operator(p), kPolicy),
                hermitian_inverse_sqrt(frame_operator(q), kPolicy), kPolicy);
            l.expect(!strongly && !certified, "converse check certified a non-strongly-disjoint pair");
            flagged += certified ? 0 : 1;
        }
    }
    return l.outcome("converse_flagged=" + std::to_string(flagged));
}

// Mixed pairs for the equivalence criteria: strongly disjoint (possibly
// distorted), disjoint with overlap 0, and overlapping.
struct MixedPair {
    GFrameFamily lambda;
    GFrameFamily theta;
};

MixedPair mixed_pair(int criterion, int c) {
    sampling::Engine rng(case_seed(criterion, c));
    for (;;) {
        PairRequest req = pair_request(rng, case_seed(100 + criterion, c));
        const int n = total(req.block_dims);
        // A quarter of the pairs fill K-hat exactly, so complementary pairs occur.
        if (sampling::uniform_int(rng, 0, 3) == 0 && n <= 12) {
            req.dim_h = sampling::uniform_int(rng, 1, n - 1);
            req.dim_k = n - req.dim_h;
        }
        switch (sampling::uniform_int(rng, 0, 2)) {
        case 0: {
            auto [a, b] = random_strongly_disjoint_parseval_pair(req);
            return {right_multiply(a, sampling::well_conditioned(rng, req.dim_h)), b};
        }
        case 1: {
            auto [a, b] = random_overlapping_pair(req, 0);
            return {a, b};
        }
        default: {
            const int overlap = sampling::uniform_int(rng, 1, std::min(req.dim_h, req.dim_k));
            if (req.dim_h + req.dim_k - overlap > n) {
                continue;
            }
            auto [a, b] = random_overlapping_pair(req, overlap);
            return {a, b};
        }
        }
    }
}

Outcome gamma_frame_equivalence() {
    Ledger l;
    int disjoint = 0;
    for (int c = 0; c < kCases; ++c, ++l.cases) {
        const MixedPair p = mixed_pair(5, c);
        const DisjointnessReport r = classify(p.lambda, p.theta, kPolicy);
        const bool gamma_frame = frame_bounds(gamma_family(p.lambda, p.theta), kPolicy).is_frame;
        l.expect(r.disjoint == gamma_frame, "disjoint != Gamma frame");
        disjoint += r.disjoint ? 1 : 0;
    }
    const GFrameFamily lambda = support::scalars({1.0, 1.0}, {1.0, 0.0});
    const GFrameFamily theta = support::scalars({1.0, 1.0}, {1.0, 1.0});
    const FrameReport g = frame_bounds(gamma_family(lambda, theta), kPolicy);
    const auto [lo, hi] = oracle::eig2(1.0, 1.0, 2.0);
    l.deviation(std::abs(g.lower_bound - lo), "hand instance lower bound");
    l.deviation(std::abs(g.upper_bound - hi), "hand instance upper bound");
    l.deviation(std::abs(lo - (3.0 - std::sqrt(5.0)) / 2.0), "closed form lower");
    l.expect(classify(lambda, theta, kPolicy).disjoint, "hand instance not disjoint");
    std::ostringstream s;
    s.precision(9);
    s << std::fixed << "disjoint_pairs=" << disjoint << " hand_bounds=(" << g.lower_bound << ", "
      << g.upper_bound << ")";
    return l.outcome(s.str());
}

Outcome remaining_equivalences() {
    Ledger l;
    int complementary = 0;
    int strongly_complementary = 0;
    auto check_pair = [&](const GFrameFamily& a, const GFrameFamily& b) {
        const DisjointnessReport r = classify(a, b, kPolicy);
        const GFrameFamily gamma = gamma_family(a, b);
        const FrameReport gr = frame_bounds(gamma, kPolicy);
        const bool gamma_riesz = gr.is_frame && riesz_check(gamma, kPolicy).is_riesz_type;
        l.expect(r.complementary_pair == gamma_riesz, "(iii) complementary vs Gamma Riesz-type");
        l.expect(r.strongly_complementary_pair == (r.strongly_disjoint && gamma_riesz),
                 "(iv) strongly complementary");
        l.expect(r.weakly_disjoint == kernel_triviality(gamma, kPolicy), "(v) weakly disjoint");
        complementary += r.complementary_pair ? 1 : 0;
        strongly_complementary += r.strongly_complementary_pair ? 1 : 0;
    };
    for (int c = 0; c < kCases; ++c, ++l.cases) {
        const MixedPair p = mixed_pair(6, c);
        check_pair(p.lambda, p.theta);
    }
    // Degenerate Lambda = Theta.
    for (int c = 0; c < 20; ++c, ++l.cases) {
        const GFrameFamily fam = random_frame(case_seed(106, c));
        check_pair(fam, fam);
        l.expect(!classify(fam, fam, kPolicy).weakly_disjoint, "Lambda = Theta weakly disjoint");
    }
    return l.outcome("complementary=" + std::to_string(complementary) +
                     " strongly_complementary=" + std::to_string(strongly_complementary));
}

Outcome disjoint_sums() {
    Ledger l;
    for (int c = 0; c < kCases; ++c, ++l.cases) {
        sampling::Engine rng(case_seed(7, c));
        PairRequest req = pair_request(rng, case_seed(107, c));
        const int n = total(req.block_dims);
        req.dim_h = sampling::uniform_int(rng, 1, std::min(6, n / 2));
        req.dim_k = req.dim_h;
        auto [lambda, theta] = random_overlapping_pair(req, 0);
        const int d = req.dim_h;
        const int m = sampling::uniform_int(rng, 1, d);
        OperatorPair pair{sampling::surjective_matrix(rng, m, d), sampling::gaussian_matrix(rng, m, d)};
        if (c % 2 == 1) {
            std::swap(pair.l1, pair.l2);
        }
        const SumResult s = disjoint_sum_family(lambda, theta, pair, kPolicy);
        l.expect(s.certificate.result.is_frame, "sum is not a frame");
        l.expect(s.certificate.sandwich_holds, "certificate sandwich fails");
        // Identity operators as well.
        const ComplexMatrix id = ComplexMatrix::Identity(d, d);
        const SumResult plain = disjoint_sum_family(lambda, theta, {id, id}, kPolicy);
        l.expect(plain.certificate.result.is_frame && plain.certificate.sandwich_holds,
                 "Lambda + Theta sandwich");
    }
    return l.outcome();
}

Outcome strong_sums() {
    Ledger l;
    for (int c = 0; c < kCases; ++c, ++l.cases) {
        sampling::Engine rng(case_seed(8, c));
        PairRequest req = pair_request(rng, case_seed(108, c));
        const int n = total(req.block_dims);
        if (n < 2) {
            continue;
        }
        req.dim_h = sampling::uniform_int(rng, 1, std::min(6, n / 2));
        req.dim_k = req.dim_h;
        const int d = req.dim_h;
        auto [lambda, theta] = random_strongly_disjoint_parseval_pair(req);
        const Real a = sampling::uniform_real(rng, 0.1, 10.0);
        const ComplexMatrix q = sampling::isometry(rng, 2 * d, d) * std::sqrt(a);
        const StrongSumResult s = strongly_disjoint_sum(lambda, theta, {q.topRows(d), q.bottomRows(d)}, kPolicy);
        l.deviation(std::abs(s.report.lower_bound - a) / a, "tight lower bound vs A");
        l.deviation(std::abs(s.report.upper_bound - a) / a, "tight upper bound vs A");
        l.expect(s.bounds_hold, "bounds certificate");

        const Complex alpha = sampling::gaussian_complex(rng);
        const Complex beta = sampling::gaussian_complex(rng);
        const Real norm = std::sqrt(std::norm(alpha) + std::norm(beta));
        const ComplexMatrix id = ComplexMatrix::Identity(d, d);
        const StrongSumResult unit =
            strongly_disjoint_sum(lambda, theta, {id * (alpha / norm), id * (beta / norm)}, kPolicy);
        l.expect(unit.report.is_parseval, "|alpha|^2 + |beta|^2 = 1 not Parseval");
    }
    const GFrameFamily e1 = support::scalars({1.0, 1.0}, {1.0, 0.0});
    const GFrameFamily e2 = support::scalars({1.0, 1.0}, {0.0, 1.0});
    const StrongSumResult s =
        strongly_disjoint_sum(e1, e2, {support::mat({{3.0}}), support::mat({{4.0}})}, kPolicy);
    l.deviation(std::abs(s.report.upper_bound - 25.0) / 25.0, "alpha=3 beta=4 bound");
    l.expect(s.report.is_tight, "alpha=3 beta=4 not tight");
    const Real h = 1.0 / std::sqrt(2.0);
    l.expect(strongly_disjoint_sum(e1, e2, {support::mat({{h}}), support::mat({{h}})}, kPolicy)
                 .report.is_parseval,
             "alpha=beta=1/sqrt2 not Parseval");
    std::ostringstream extra;
    extra.precision(12);
    extra << "alpha3_beta4_bound=" << s.report.upper_bound;
    return l.outcome(extra.str());
}

Outcome duality() {
    Ledger l;
    for (int c = 0; c < kCases; ++c, ++l.cases) {
        sampling::Engine rng(case_seed(9, c));
        const PairRequest req = pair_request(rng, case_seed(109, c));
        auto [p, q] = random_strongly_disjoint_parseval_pair(req);
        // Direct sums of dual pairs.
        const GFrameFamily lambda = right_multiply(p, sampling::well_conditioned(rng, req.dim_h));
        const GFrameFamily theta = canonical_dual(lambda, kPolicy);
        const GFrameFamily phi = right_multiply(q, sampling::well_conditioned(rng, req.dim_k));
        const GFrameFamily psi = canonical_dual(phi, kPolicy);
        const DirectSumDuals ds = direct_sum_duals(lambda, theta, psi, phi, kPolicy);
        l.expect(ds.dual_verified, "direct sum not dual");
        l.deviation(identity_dev(oracle::cross(ds.delta, ds.gamma)), "direct sum identity");

        // Pseudo-inverse duals on a shared domain.
        if (req.dim_h <= total(req.block_dims) / 2) {
            PairRequest same = req;
            same.dim_k = req.dim_h;
            auto [a, b] = random_strongly_disjoint_parseval_pair(same);
            const GFrameFamily a2 = right_multiply(a, sampling::well_conditioned(rng, req.dim_h));
            const int m = sampling::uniform_int(rng, 1, req.dim_h);
            const OperatorPair pair{sampling::surjective_matrix(rng, m, req.dim_h),
                                    sampling::gaussian_matrix(rng, m, req.dim_h)};
            const PseudoDual pd = pseudo_dual(a2, b, pair, kPolicy);
            l.deviation(identity_dev(oracle::cross(pd.dual_candidate, pd.sum_family)), "pseudo dual (sum)");
            l.deviation(identity_dev(oracle::cross(pd.dual_candidate, pd.single_family)),
                        "pseudo dual (single)");
            const ComplexMatrix id = ComplexMatrix::Identity(req.dim_h, req.dim_h);
            const PseudoDual cd = pseudo_dual(a2, b, {id, id}, kPolicy);
            l.deviation(identity_dev(oracle::cross(canonical_dual(a2, kPolicy), cd.sum_family)),
                        "canonical dual of Lambda + Theta");
        }

        // Lifting of random continuous frames.
        const int atoms = sampling::uniform_int(rng, 2, 8);
        const MeasureSpace space = random_measure_space(case_seed(209, c), atoms, 0.5, 2.0);
        const int fdim = sampling::uniform_int(rng, 1, std::min(4, atoms));
        const int gdim = sampling::uniform_int(rng, 1, std::min(4, atoms));
        ContinuousFrameSpec f{space, fdim, {}};
        ContinuousFrameSpec g{space, gdim, {}};
        for (int i = 0; i < atoms; ++i) {
            f.vectors.push_back(sampling::gaussian_vector(rng, fdim));
            g.vectors.push_back(sampling::gaussian_vector(rng, gdim));
        }
        const LiftedFamilies lf = lift_continuous_frame(f, g, kPolicy);
        l.deviation(identity_dev(oracle::cross(lf.theta, lf.lambda)), "lifted Theta/Lambda");
        l.deviation(identity_dev(oracle::cross(lf.psi, lf.phi)), "lifted Psi/Phi");
        const DirectSumDuals lifted = direct_sum_duals(lf.lambda, lf.theta, lf.psi, lf.phi, kPolicy);
        l.deviation(identity_dev(oracle::cross(lifted.delta, lifted.gamma)), "lifted direct sum");
    }
    return l.outcome();
}

Outcome riesz_criteria() {
    Ledger l;
    int riesz = 0;
    for (int c = 0; c < kCases; ++c, ++l.cases) {
        const GFrameFamily fam = random_frame(case_seed(10, c), c % 3 == 0);
        const RieszReport r = riesz_check(fam, kPolicy);
        l.expect(r.criteria_agree(), "criteria disagree");
        l.expect(r.is_riesz_type == (oracle::rank(analysis_matrix(fam)) == fam.khat_dim()),
                 "verdict disagrees with the elimination rank");
        riesz += r.is_riesz_type ? 1 : 0;
    }
    const GFrameFamily ones = support::scalars({1.0, 1.0}, {1.0, 1.0});
    KHatVector phi;
    phi.blocks = {ComplexVector::Constant(1, 1.0), ComplexVector::Constant(1, -1.0)};
    l.expect(synthesis_kernel_test(ones, phi, kPolicy), "witness (1, -1) not detected");
    l.expect(!riesz_check(ones, kPolicy).is_riesz_type, "([1],[1]) reported Riesz-type");
    return l.outcome("riesz_type_cases=" + std::to_string(riesz));
}

Outcome perturbation() {
    Ledger l;
    const GFrameFamily id = support::identity_family(2);
    const PerturbationResult near = perturbation_riesz_transfer(id, support::scaled(id, 1.1), kPolicy);
    l.deviation(std::abs(near.gap - 0.1), "gap for 1.1");
    l.expect(near.criterion_met, "criterion not met for 1.1");
    l.expect(near.equivalence_verified.value_or(false), "Riesz verdicts differ for 1.1");
    const PerturbationResult far = perturbation_riesz_transfer(id, support::scaled(id, 3.0), kPolicy);
    l.deviation(std::abs(far.gap - 2.0), "gap for 3");
    l.expect(!far.criterion_met && !far.equivalence_verified.has_value(),
             "criterion should report no conclusion for 3");
    l.cases = 2;
    std::ostringstream s;
    s.precision(12);
    s << "gap(1.1)=" << near.gap << " gap(3)=" << far.gap;
    return l.outcome(s.str());
}

// --- CLI -----------------------------------------------------------------------

int shell(const std::string& command) {
    const int raw = std::system(command.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_contract() {
    Ledger l;
    const std::string cli = GFRAME_CLI;
    const fs::path data = GFRAME_DATA_DIR;
    const fs::path tmp = fs::temp_directory_path() / "gframe_acceptance";
    fs::create_directories(tmp);
    const std::string quiet = " > /dev/null 2>&1";

    // Round trip of every shipped document.
    int documents = 0;
    for (const auto& entry : fs::directory_iterator(data)) {
        if (entry.path().extension() != ".json") {
            continue;
        }
        ++documents;
        const FrameDocument doc = load_document(entry.path().string());
        const FrameDocument back = parse_document(serialize_document(doc));
        bool same = back.space == doc.space && back.seed == doc.seed &&
                    back.families.size() == doc.families.size();
        for (const auto& [name, fam] : doc.families) {
            same = same && back.family(name).blocks == fam.blocks &&
                   back.family(name).domain_dim == fam.domain_dim;
        }
        l.expect(same, "round trip of " + entry.path().filename().string());
    }
    l.expect(documents >= 4, "shipped documents missing");

    // Determinism of verify.
    const fs::path v1 = tmp / "verify1.txt";
    const fs::path v2 = tmp / "verify2.txt";
    l.expect(shell(cli + " verify --seed 7 --cases 50 > " + v1.string()) == 0, "verify exit");
    l.expect(shell(cli + " verify --seed 7 --cases 50 > " + v2.string()) == 0, "verify exit");
    l.expect(slurp(v1) == slurp(v2) && !slurp(v1).empty(), "verify output differs between runs");

    // Exit status contract on the shipped documents.
    const std::string id = (data / "identity.json").string();
    const std::string pair = (data / "disjoint_pair.json").string();
    l.expect(shell(cli + " analyze " + id + " lambda" + quiet) == 0, "analyze exit 0");
    l.expect(shell(cli + " disjoint " + pair + " lambda theta" + quiet) == 0, "disjoint exit 0");
    l.expect(shell(cli + " construct " + pair + " gamma lambda theta -o " + (tmp / "g.json").string() +
                   quiet) == 0,
             "construct exit 0");
    l.expect(shell(cli + " analyze " + id + " no_such_family" + quiet) == 2, "unknown family exit 2");
    l.expect(shell(cli + " frobnicate" + quiet) == 2, "unknown subcommand exit 2");
    l.expect(shell(cli + " analyze " + (tmp / "missing.json").string() + " lambda" + quiet) == 2,
             "missing file exit 2");
    l.expect(shell(cli + " construct " + id + " sum-strong lambda theta_near -o " +
                   (tmp / "x.json").string() + quiet) == 1,
             "failed hypothesis exit 1");

    // The constructed document round-trips through the CLI again.
    l.expect(shell(cli + " analyze " + (tmp / "g.json").string() + " gamma" + quiet) == 0,
             "constructed document re-analyzed");
    l.cases = documents;
    return l.outcome("documents=" + std::to_string(documents));
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"frame inequality with spectral bounds", frame_axioms},
        {"reconstruction identity via the canonical dual", reconstruction},
        {"synthesis norm equals sqrt(B)", synthesis_norm},
        {"strongly disjoint pairs give Parseval Delta; converse flags the rest", delta_parseval},
        {"disjoint <=> Gamma is a frame; hand instance bounds", gamma_frame_equivalence},
        {"complementary, strongly complementary and weakly disjoint equivalences", remaining_equivalences},
        {"sums of disjoint frames are frames within the certificate", disjoint_sums},
        {"strongly disjoint sums: tight bound A, 3 and 4 give 25, unit pairs give Parseval", strong_sums},
        {"duality identities for direct sums, pseudo-inverse duals and liftings", duality},
        {"Riesz-type criteria agree; explicit kernel witness detected", riesz_criteria},
        {"perturbation criterion for (1+eps) Lambda", perturbation},
        {"CLI round trip, verify determinism, exit statuses", cli_contract},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.passed;
        std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << "criterion " << (i + 1) << ": "
                  << criteria[i].first << " (" << o.detail << ")" << std::endl;
    }
    std::cout << "acceptance: " << (all ? "PASS" : "FAIL") << std::endl;
    return all ? 0 : 1;
}
