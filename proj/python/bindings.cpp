#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gframe/cli.hpp"
#include "gframe/constructions.hpp"
#include "gframe/disjointness.hpp"
#include "gframe/document.hpp"
#include "gframe/frame_analysis.hpp"
#include "gframe/property_suite.hpp"
#include "gframe/riesz.hpp"

namespace py = pybind11;
using namespace gframe;

namespace {

GFrameFamily make_family(std::vector<Real> weights, std::vector<ComplexMatrix> blocks,
                         std::optional<int> domain_dim) {
    GFrameFamily fam;
    fam.space.weights = std::move(weights);
    if (domain_dim) {
        fam.domain_dim = *domain_dim;
    } else if (!blocks.empty()) {
        fam.domain_dim = static_cast<int>(blocks.front().cols());
    }
    for (const auto& b : blocks) {
        fam.block_dims.push_back(static_cast<int>(b.rows()));
    }
    fam.blocks = std::move(blocks);
    require_valid(fam);
    return fam;
}

py::dict suite_summary(const RunReport& report) {
    py::dict checks;
    for (const auto& c : report.checks) {
        py::dict q;
        for (const auto& [k, v] : c.quantities) {
            q[py::str(k)] = v;
        }
        checks[py::str(c.name)] = py::make_tuple(c.passed, q);
    }
    py::dict out;
    out["passed"] = report.passed();
    out["checks"] = checks;
    out["notes"] = report.notes;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Continuous g-frames over finite weighted measure spaces";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ShapeError>(m, "ShapeError", error);
    py::register_exception<SingularOperatorError>(m, "SingularOperatorError", error);
    py::register_exception<PreconditionError>(m, "PreconditionError", error);
    py::register_exception<NumericError>(m, "NumericError", error);
    py::register_exception<GenerationError>(m, "GenerationError", error);
    py::register_exception<ParseError>(m, "ParseError", error);

    py::class_<TolerancePolicy>(m, "TolerancePolicy")
        .def(py::init([](Real rel_eps, Real rank_eps_factor) {
                 TolerancePolicy t{rel_eps, rank_eps_factor};
                 t.check();
                 return t;
             }),
             py::arg("rel_eps") = 1e-9, py::arg("rank_eps_factor") = 10.0)
        .def_readwrite("rel_eps", &TolerancePolicy::rel_eps)
        .def_readwrite("rank_eps_factor", &TolerancePolicy::rank_eps_factor);

    py::class_<GFrameFamily>(m, "GFrameFamily")
        .def(py::init(&make_family), py::arg("weights"), py::arg("blocks"),
             py::arg("domain_dim") = py::none(),
             "Family from per-atom weights and d_i x d complex blocks.")
        .def_property_readonly("weights", [](const GFrameFamily& f) { return f.space.weights; })
        .def_readonly("domain_dim", &GFrameFamily::domain_dim)
        .def_readonly("block_dims", &GFrameFamily::block_dims)
        .def_readonly("blocks", &GFrameFamily::blocks)
        .def_property_readonly("khat_dim", &GFrameFamily::khat_dim)
        .def("__repr__", [](const GFrameFamily& f) {
            std::ostringstream s;
            s << "GFrameFamily(atoms=" << f.atom_count() << ", domain_dim=" << f.domain_dim
              << ", khat_dim=" << f.khat_dim() << ")";
            return s.str();
        });

    py::class_<FrameReport>(m, "FrameReport")
        .def_readonly("frame_operator", &FrameReport::frame_operator)
        .def_readonly("lower_bound", &FrameReport::lower_bound)
        .def_readonly("upper_bound", &FrameReport::upper_bound)
        .def_readonly("frame_threshold", &FrameReport::frame_threshold)
        .def_readonly("is_frame", &FrameReport::is_frame)
        .def_readonly("is_tight", &FrameReport::is_tight)
        .def_readonly("is_parseval", &FrameReport::is_parseval);

    py::class_<RieszReport>(m, "RieszReport")
        .def_readonly("is_riesz_type", &RieszReport::is_riesz_type)
        .def_readonly("analysis_rank", &RieszReport::analysis_rank)
        .def_readonly("khat_dim", &RieszReport::khat_dim)
        .def_readonly("synthesis_lower_bound", &RieszReport::synthesis_lower_bound)
        .def_readonly("synthesis_upper_bound", &RieszReport::synthesis_upper_bound)
        .def_readonly("rank_criterion", &RieszReport::rank_criterion)
        .def_readonly("bound_criterion", &RieszReport::bound_criterion)
        .def_readonly("kernel_criterion", &RieszReport::kernel_criterion)
        .def_readonly("kernel_witness_residual", &RieszReport::kernel_witness_residual)
        .def_property_readonly("kernel_witness",
                               [](const RieszReport& r) { return r.kernel_witness.blocks; })
        .def("criteria_agree", &RieszReport::criteria_agree);

    py::class_<DisjointnessReport>(m, "DisjointnessReport")
        .def_readonly("strongly_disjoint", &DisjointnessReport::strongly_disjoint)
        .def_readonly("disjoint", &DisjointnessReport::disjoint)
        .def_readonly("weakly_disjoint", &DisjointnessReport::weakly_disjoint)
        .def_readonly("complementary_pair", &DisjointnessReport::complementary_pair)
        .def_readonly("strongly_complementary_pair", &DisjointnessReport::strongly_complementary_pair)
        .def_readonly("cross_operator_norm", &DisjointnessReport::cross_operator_norm)
        .def_readonly("lambda_rank", &DisjointnessReport::lambda_rank)
        .def_readonly("theta_rank", &DisjointnessReport::theta_rank)
        .def_readonly("range_intersection_dim", &DisjointnessReport::range_intersection_dim)
        .def_readonly("range_sum_dim", &DisjointnessReport::range_sum_dim)
        .def_readonly("khat_dim", &DisjointnessReport::khat_dim);

    const auto tol = py::arg("tol") = TolerancePolicy{};
    m.def("analysis_matrix", &analysis_matrix, py::arg("family"));
    m.def("frame_bounds", &frame_bounds, py::arg("family"), tol);
    m.def("canonical_dual", &canonical_dual, py::arg("family"), tol);
    m.def("parseval_normalize", &parseval_normalize, py::arg("family"), tol);
    m.def("cross_operator", &cross_operator, py::arg("theta"), py::arg("lambda_"),
          "S_{Theta Lambda} = sum mu_i Theta_i^* Lambda_i");
    m.def("is_dual_pair", &is_dual_pair, py::arg("theta"), py::arg("lambda_"), tol);
    m.def("riesz_check", &riesz_check, py::arg("family"), tol);
    m.def("classify", &classify, py::arg("lambda_"), py::arg("theta"), tol);
    m.def("gamma_family", &gamma_family, py::arg("lambda_"), py::arg("theta"));
    m.def("delta_family",
          py::overload_cast<const GFrameFamily&, const GFrameFamily&, const TolerancePolicy&>(
              &delta_family),
          py::arg("lambda_"), py::arg("theta"), tol);

    m.def(
        "random_gframe",
        [](std::uint64_t seed, int atoms, int domain_dim, std::vector<int> block_dims,
           bool require_frame) {
            GeneratorRequest req;
            req.seed = seed;
            req.atoms = atoms;
            req.domain_dim = domain_dim;
            req.block_dims = std::move(block_dims);
            req.require_frame = require_frame;
            return random_gframe(req).family;
        },
        py::arg("seed"), py::arg("atoms"), py::arg("domain_dim"),
        py::arg("block_dims") = std::vector<int>{}, py::arg("require_frame") = true);
    m.def(
        "random_strongly_disjoint_parseval_pair",
        [](std::uint64_t seed, int atoms, int dim_h, int dim_k, std::vector<int> block_dims) {
            PairRequest req;
            req.seed = seed;
            req.atoms = atoms;
            req.dim_h = dim_h;
            req.dim_k = dim_k;
            req.block_dims = std::move(block_dims);
            return random_strongly_disjoint_parseval_pair(req);
        },
        py::arg("seed"), py::arg("atoms"), py::arg("dim_h"), py::arg("dim_k"),
        py::arg("block_dims") = std::vector<int>{});

    m.def("load_document",
          [](const std::string& path) { return load_document(path).families; }, py::arg("path"),
          "Families of a frame document, by name.");
    m.def(
        "save_document",
        [](const std::map<std::string, GFrameFamily>& families, const std::string& path,
           std::optional<std::uint64_t> seed) { save_document(make_document(families, seed), path); },
        py::arg("families"), py::arg("path"), py::arg("seed") = py::none());

    m.def(
        "verify",
        [](std::uint64_t seed, int cases, const TolerancePolicy& t) {
            return suite_summary(run_property_suite({seed, cases, t}));
        },
        py::arg("seed") = 1, py::arg("cases") = 20, tol);
    m.def(
        "run_command",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int status = run_command(args, out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in process: (status, stdout, stderr).");
}
