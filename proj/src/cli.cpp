#include "gframe/cli.hpp"

#include <cmath>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "gframe/constructions.hpp"
#include "gframe/disjointness.hpp"
#include "gframe/document.hpp"
#include "gframe/frame_analysis.hpp"
#include "gframe/linalg.hpp"
#include "gframe/property_suite.hpp"
#include "gframe/report.hpp"
#include "gframe/riesz.hpp"

namespace gframe {

namespace {

struct GlobalOptions {
    TolerancePolicy tol;
    std::string format = "text";
};

// Raised for argument combinations CLI11 cannot express (exit 2).
class UsageError : public Error {
public:
    using Error::Error;
};

void add_frame_findings(RunReport& r, const std::string& prefix, const FrameReport& fr) {
    const Quantities bounds{{"lower_bound", fr.lower_bound},
                            {"upper_bound", fr.upper_bound},
                            {"frame_threshold", fr.frame_threshold}};
    r.finding(prefix + "is_frame", fr.is_frame, bounds);
    r.finding(prefix + "is_tight", fr.is_tight,
              {{"lower_bound", fr.lower_bound}, {"upper_bound", fr.upper_bound}});
    r.finding(prefix + "is_parseval", fr.is_parseval,
              {{"lower_bound", fr.lower_bound}, {"upper_bound", fr.upper_bound}});
}

Real identity_deviation(const ComplexMatrix& x) {
    return (x - ComplexMatrix::Identity(x.rows(), x.cols())).cwiseAbs().maxCoeff();
}

// --- analyze -------------------------------------------------------------------

void run_analyze(const std::string& file, const std::string& name, const TolerancePolicy& tol,
                 RunReport& r) {
    const FrameDocument doc = load_document(file);
    const GFrameFamily& fam = doc.family(name);
    const FrameReport fr = frame_bounds(fam, tol);
    add_frame_findings(r, "", fr);

    const Real sigma = operator_norm(analysis_matrix(fam));
    const Real sqrt_b = std::sqrt(fr.upper_bound);
    r.check("synthesis norm equals sqrt(B)",
            approx_equal(sigma, sqrt_b, tol.rel_eps),
            {{"synthesis_norm", sigma}, {"sqrt_upper_bound", sqrt_b}});

    if (!fr.is_frame) {
        r.notes.push_back("not a frame: Riesz-type analysis and canonical dual skipped");
        return;
    }
    const RieszReport rr = riesz_check(fam, tol);
    r.finding("is_riesz_type", rr.is_riesz_type,
              {{"analysis_rank", rr.analysis_rank},
               {"khat_dim", rr.khat_dim},
               {"synthesis_lower_bound", rr.synthesis_lower_bound},
               {"synthesis_upper_bound", rr.synthesis_upper_bound}});
    r.check("Riesz-type criteria agree", rr.criteria_agree(),
            {{"rank_criterion", rr.rank_criterion},
             {"bound_criterion", rr.bound_criterion},
             {"kernel_criterion", rr.kernel_criterion},
             {"kernel_witness_residual", rr.kernel_witness_residual}});
    const GFrameFamily dual = canonical_dual(fam, tol);
    r.check("canonical dual is a dual", is_dual_pair(dual, fam, tol),
            {{"identity_deviation", identity_deviation(cross_operator(dual, fam))}});
}

// --- disjoint ------------------------------------------------------------------

void run_disjoint(const std::string& file, const std::string& a, const std::string& b,
                  const TolerancePolicy& tol, RunReport& r) {
    const FrameDocument doc = load_document(file);
    const GFrameFamily& lambda = doc.family(a);
    const GFrameFamily& theta = doc.family(b);
    const DisjointnessReport dr = classify(lambda, theta, tol);
    const Quantities ranks{{"lambda_rank", dr.lambda_rank},
                           {"theta_rank", dr.theta_rank},
                           {"range_intersection_dim", dr.range_intersection_dim},
                           {"range_sum_dim", dr.range_sum_dim},
                           {"khat_dim", dr.khat_dim}};
    r.finding("strongly_disjoint", dr.strongly_disjoint,
              {{"cross_operator_norm", dr.cross_operator_norm},
               {"orthogonality_threshold", dr.orthogonality_threshold}});
    r.finding("disjoint", dr.disjoint, ranks);
    r.finding("weakly_disjoint", dr.weakly_disjoint, ranks);
    r.finding("complementary_pair", dr.complementary_pair, ranks);
    r.finding("strongly_complementary_pair", dr.strongly_complementary_pair, ranks);

    const GFrameFamily gamma = gamma_family(lambda, theta);
    const FrameReport gr = frame_bounds(gamma, tol);
    add_frame_findings(r, "gamma.", gr);
    const bool gamma_riesz = gr.is_frame && riesz_check(gamma, tol).is_riesz_type;
    r.finding("gamma.is_riesz_type", gamma_riesz,
              {{"gamma_rank", numerical_rank(analysis_matrix(gamma), tol)},
               {"khat_dim", dr.khat_dim}});

    r.check("disjoint <=> Gamma is a frame", dr.disjoint == gr.is_frame,
            {{"range_intersection_dim", dr.range_intersection_dim},
             {"gamma_lower_bound", gr.lower_bound}});
    r.check("complementary <=> Gamma Riesz-type", dr.complementary_pair == gamma_riesz,
            {{"range_sum_dim", dr.range_sum_dim}, {"khat_dim", dr.khat_dim}});
    r.check("strongly complementary <=> strongly disjoint and Gamma Riesz-type",
            dr.strongly_complementary_pair == (dr.strongly_disjoint && gamma_riesz),
            {{"cross_operator_norm", dr.cross_operator_norm}});
    const bool trivial_kernel = kernel_triviality(gamma, tol);
    r.check("weakly disjoint <=> trivial Gamma kernel", dr.weakly_disjoint == trivial_kernel,
            {{"gamma_domain_dim", gamma.domain_dim}});

    const FrameReport delta = frame_bounds(delta_family(lambda, theta, tol), tol);
    r.finding("delta.is_parseval", delta.is_parseval,
              {{"identity_deviation", identity_deviation(delta.frame_operator)}});
    if (dr.strongly_disjoint) {
        r.check("strongly disjoint => Delta Parseval", delta.is_parseval,
                {{"identity_deviation", identity_deviation(delta.frame_operator)}});
    }
}

// --- construct -----------------------------------------------------------------

struct ConstructArgs {
    std::string file;
    std::string recipe;
    std::vector<std::string> families;
    std::string l1;
    std::string l2;
    std::string output;
};

const std::vector<std::string> kRecipes{"gamma",    "delta",       "sum-disjoint",   "sum-strong",
                                        "pseudo-dual", "canonical-dual", "parseval", "lift-example"};

int recipe_arity(const std::string& recipe) {
    return recipe == "canonical-dual" || recipe == "parseval" ? 1 : 2;
}

OperatorPair operator_pair(const ConstructArgs& args, int dim) {
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    if (args.l1.empty() != args.l2.empty()) {
        throw UsageError("--l1 and --l2 must be given together");
    }
    if (args.l1.empty()) {
        return {id, id};
    }
    return {parse_matrix(args.l1), parse_matrix(args.l2)};
}

std::map<std::string, GFrameFamily> run_construct(const ConstructArgs& args,
                                                  const TolerancePolicy& tol, RunReport& r) {
    const FrameDocument doc = load_document(args.file);
    const int arity = recipe_arity(args.recipe);
    if (static_cast<int>(args.families.size()) != arity) {
        throw UsageError("recipe '" + args.recipe + "' takes " + std::to_string(arity) +
                         " family name(s), got " + std::to_string(args.families.size()));
    }
    const GFrameFamily& lambda = doc.family(args.families[0]);
    const GFrameFamily* theta = arity == 2 ? &doc.family(args.families[1]) : nullptr;

    std::map<std::string, GFrameFamily> out;
    const std::string& recipe = args.recipe;
    if (recipe == "gamma") {
        out["gamma"] = gamma_family(lambda, *theta);
        add_frame_findings(r, "gamma.", frame_bounds(out["gamma"], tol));
    } else if (recipe == "delta") {
        if (args.l1.empty() && args.l2.empty()) {
            out["delta"] = delta_family(lambda, *theta, tol);
        } else {
            const OperatorPair p = operator_pair(args, lambda.domain_dim);
            out["delta"] = delta_family(lambda, *theta, p.l1, p.l2);
        }
        const FrameReport fr = frame_bounds(out["delta"], tol);
        add_frame_findings(r, "delta.", fr);
        if (classify(lambda, *theta, tol).strongly_disjoint && args.l1.empty()) {
            r.check("strongly disjoint => Delta Parseval", fr.is_parseval,
                    {{"identity_deviation", identity_deviation(fr.frame_operator)}});
        }
    } else if (recipe == "sum-disjoint") {
        const SumResult s = disjoint_sum_family(lambda, *theta, operator_pair(args, lambda.domain_dim), tol);
        out["sum"] = s.family;
        const SumCertificate& c = s.certificate;
        add_frame_findings(r, "sum.", c.result);
        r.check("sum of disjoint frames is a frame", c.result.is_frame,
                {{"lower_bound", c.result.lower_bound}});
        r.check("certificate sandwich", c.sandwich_holds,
                {{"lower_certificate", c.lower_certificate},
                 {"lower_bound", c.result.lower_bound},
                 {"upper_bound", c.result.upper_bound},
                 {"upper_certificate", c.upper_certificate},
                 {"surjective_operator", c.surjective_operator},
                 {"pinv_norm", c.pinv_norm}});
    } else if (recipe == "sum-strong") {
        const StrongSumResult s =
            strongly_disjoint_sum(lambda, *theta, operator_pair(args, lambda.domain_dim), tol);
        out["sum"] = s.family;
        add_frame_findings(r, "sum.", s.report);
        r.check("strongly disjoint sum bounds", s.bounds_hold,
                {{"scalar", s.scalar},
                 {"lower_certificate", s.lower_certificate},
                 {"lower_bound", s.report.lower_bound},
                 {"upper_bound", s.report.upper_bound},
                 {"upper_certificate", s.upper_certificate}});
        if (s.inputs_parseval) {
            r.check("Parseval inputs give a tight sum with bound A", s.tight_with_scalar,
                    {{"scalar", s.scalar}, {"upper_bound", s.report.upper_bound}});
        }
    } else if (recipe == "pseudo-dual") {
        const PseudoDual pd = pseudo_dual(lambda, *theta, operator_pair(args, lambda.domain_dim), tol);
        out["dual"] = pd.dual_candidate;
        out["sum"] = pd.sum_family;
        const Real dev = identity_deviation(cross_operator(pd.dual_candidate, pd.sum_family));
        r.check("dual of Lambda L1^* + Theta L2^*", pd.dual_of_sum, {{"identity_deviation", dev}});
        r.check("dual of Lambda L1^*", pd.dual_of_single,
                {{"identity_deviation",
                  identity_deviation(cross_operator(pd.dual_candidate, pd.single_family))}});
    } else if (recipe == "canonical-dual") {
        out["dual"] = canonical_dual(lambda, tol);
        r.check("canonical dual is a dual", is_dual_pair(out["dual"], lambda, tol),
                {{"identity_deviation", identity_deviation(cross_operator(out["dual"], lambda))}});
    } else if (recipe == "parseval") {
        out["parseval"] = parseval_normalize(lambda, tol);
        const FrameReport fr = frame_bounds(out["parseval"], tol);
        r.check("normalized family is Parseval", fr.is_parseval,
                {{"identity_deviation", identity_deviation(fr.frame_operator)}});
    } else if (recipe == "lift-example") {
        const LiftedFamilies lf = lift_continuous_frame(continuous_frame_from_family(lambda),
                                                        continuous_frame_from_family(*theta), tol);
        const DirectSumDuals ds = direct_sum_duals(lf.lambda, lf.theta, lf.psi, lf.phi, tol);
        out = {{"lambda", lf.lambda}, {"theta", lf.theta}, {"phi", lf.phi},
               {"psi", lf.psi},       {"gamma", ds.gamma}, {"delta", ds.delta}};
        r.check("Theta is a dual of Lambda", is_dual_pair(lf.theta, lf.lambda, tol),
                {{"identity_deviation", identity_deviation(cross_operator(lf.theta, lf.lambda))}});
        r.check("Psi is a dual of Phi", is_dual_pair(lf.psi, lf.phi, tol),
                {{"identity_deviation", identity_deviation(cross_operator(lf.psi, lf.phi))}});
        r.check("direct sums are dual", ds.dual_verified,
                {{"identity_deviation", identity_deviation(cross_operator(ds.delta, ds.gamma))}});
    }
    return out;
}

// --- generate ------------------------------------------------------------------

struct GenerateArgs {
    std::string kind = "frame";
    std::uint64_t seed = 1;
    int atoms = 4;
    int dim = 2;
    std::optional<int> dim_k;
    std::vector<int> block_dims;
    Real weight_min = 0.5;
    Real weight_max = 2.0;
    std::string output;
};

std::map<std::string, GFrameFamily> run_generate(const GenerateArgs& args,
                                                 const TolerancePolicy& tol, RunReport& r) {
    if (!args.block_dims.empty() && static_cast<int>(args.block_dims.size()) != args.atoms) {
        throw UsageError("--block-dims needs one entry per atom (" + std::to_string(args.atoms) + ")");
    }
    if (!(args.weight_min > 0.0) || args.weight_max < args.weight_min) {
        throw UsageError("weights must satisfy 0 < weight-min <= weight-max");
    }
    r.seed = args.seed;
    if (args.kind == "frame") {
        GeneratorRequest req;
        req.seed = args.seed;
        req.atoms = args.atoms;
        req.domain_dim = args.dim;
        req.block_dims = args.block_dims;
        req.weight_min = args.weight_min;
        req.weight_max = args.weight_max;
        const GeneratedFamily g = random_gframe(req, tol);
        add_frame_findings(r, "lambda.", frame_bounds(g.family, tol));
        r.notes.push_back("attempts: " + std::to_string(g.attempts));
        return {{"lambda", g.family}};
    }
    PairRequest req;
    req.seed = args.seed;
    req.atoms = args.atoms;
    req.block_dims = args.block_dims;
    req.dim_h = args.dim;
    req.dim_k = args.dim_k.value_or(args.dim);
    req.weight_min = args.weight_min;
    req.weight_max = args.weight_max;
    auto [lambda, theta] = random_strongly_disjoint_parseval_pair(req);
    const DisjointnessReport dr = classify(lambda, theta, tol);
    r.check("generated pair is strongly disjoint", dr.strongly_disjoint,
            {{"cross_operator_norm", dr.cross_operator_norm}});
    r.check("lambda is Parseval", frame_bounds(lambda, tol).is_parseval);
    r.check("theta is Parseval", frame_bounds(theta, tol).is_parseval);
    return {{"lambda", lambda}, {"theta", theta}};
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Continuous g-frame workbench over finite weighted measure spaces", "gframe"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all");

    GlobalOptions global;
    app.add_option("--tol", global.tol.rel_eps, "Relative tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--rank-factor", global.tol.rank_eps_factor, "Rank threshold factor c (>= 1)")
        ->check(CLI::Range(1.0, 1e12))
        ->capture_default_str();
    app.add_option("--format", global.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string file;
    std::string fam_a;
    std::string fam_b;
    auto* analyze = app.add_subcommand("analyze", "Frame bounds and Riesz-type verdict of one family");
    analyze->add_option("file", file, "Frame document")->required();
    analyze->add_option("family", fam_a, "Family name")->required();

    auto* disjoint = app.add_subcommand("disjoint", "Disjointness relations between two families");
    disjoint->add_option("file", file, "Frame document")->required();
    disjoint->add_option("lambda", fam_a, "First family")->required();
    disjoint->add_option("theta", fam_b, "Second family")->required();

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "Build a new family and write it to a document");
    construct->add_option("file", cargs.file, "Frame document")->required();
    construct->add_option("recipe", cargs.recipe, "Construction recipe")
        ->required()
        ->check(CLI::IsMember(kRecipes));
    construct->add_option("families", cargs.families, "Input family names")->required();
    construct->add_option("--l1", cargs.l1, "Matrix literal for L1");
    construct->add_option("--l2", cargs.l2, "Matrix literal for L2");
    construct->add_option("-o,--output", cargs.output, "Output document")->required();

    SuiteOptions suite;
    auto* verify = app.add_subcommand("verify", "Run the property suite on generated instances");
    verify->add_option("--seed", suite.seed, "Base seed")->capture_default_str();
    verify->add_option("--cases", suite.cases, "Number of generated cases")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    GenerateArgs gargs;
    auto* generate = app.add_subcommand("generate", "Write a seeded random document");
    generate->add_option("--kind", gargs.kind, "What to generate")
        ->check(CLI::IsMember({"frame", "strongly-disjoint-pair"}))
        ->capture_default_str();
    generate->add_option("--seed", gargs.seed, "Seed")->capture_default_str();
    generate->add_option("--atoms", gargs.atoms, "Number of atoms")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--dim", gargs.dim, "Domain dimension (of H for pairs)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--dim-k", gargs.dim_k, "Domain dimension of K for pairs")
        ->check(CLI::PositiveNumber);
    generate->add_option("--block-dims", gargs.block_dims, "Comma-separated block dimensions")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    generate->add_option("--weight-min", gargs.weight_min, "Smallest weight")->capture_default_str();
    generate->add_option("--weight-max", gargs.weight_max, "Largest weight")->capture_default_str();
    generate->add_option("-o,--output", gargs.output, "Output document")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    RunReport report;
    report.command.push_back("gframe");
    report.command.insert(report.command.end(), args.begin(), args.end());
    report.tolerance = global.tol;
    const ReportFormat format = global.format == "json" ? ReportFormat::json : ReportFormat::text;

    try {
        global.tol.check();
        if (analyze->parsed()) {
            run_analyze(file, fam_a, global.tol, report);
        } else if (disjoint->parsed()) {
            run_disjoint(file, fam_a, fam_b, global.tol, report);
        } else if (construct->parsed()) {
            const auto families = run_construct(cargs, global.tol, report);
            const FrameDocument input = load_document(cargs.file);
            save_document(make_document(families, input.seed), cargs.output);
            report.seed = input.seed;
            report.notes.push_back("wrote " + cargs.output);
        } else if (verify->parsed()) {
            suite.tol = global.tol;
            report = run_property_suite(suite);
            report.command.push_back("gframe");
            report.command.insert(report.command.end(), args.begin(), args.end());
        } else if (generate->parsed()) {
            const auto families = run_generate(gargs, global.tol, report);
            save_document(make_document(families, gargs.seed), gargs.output);
            report.notes.push_back("wrote " + gargs.output);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        // Failed hypotheses, singular operators, generation exhaustion.
        err << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }

    write_report(out, report, format);
    return report.passed() ? kExitPass : kExitCheckFailure;
}

} // namespace gframe
