#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "entloc/factorization.hpp"
#include "entloc/invariance.hpp"
#include "entloc/separability.hpp"
#include "report.hpp"

namespace py = pybind11;
using namespace entloc;

namespace {

Basis pair_basis(Eigen::Index dim) {
    if (dim == 3) return Basis::Sym3;
    if (dim == 10) return Basis::Sym10;
    throw DimensionError("expected a pair-space dimension of 3 or 10, got " + std::to_string(dim));
}

State to_state(const Vec& v) { return State(pair_basis(v.size()), v); }

Operator to_operator(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionError("operator must be square");
    return Operator(pair_basis(m.rows()), m);
}

Tolerances tolerances(double classify, double rank, double witness) {
    Tolerances t{classify, rank, witness};
    t.validate();
    return t;
}

py::dict verdict_dict(const SeparabilityVerdict& v) {
    py::dict d;
    d["verdict"] = verdict_name(v.verdict);
    d["separable"] = v.separable();
    d["parameters"] = v.parameters;
    d["diagnostics"] = v.diagnostics;
    return d;
}

}  // namespace

PYBIND11_MODULE(_entloc, m) {
    m.doc() = "Separability classifiers and factorization checks for two bosons";

    auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", input_error.ptr());
    py::register_exception<ZeroNormError>(m, "ZeroNormError", input_error.ptr());
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    m.attr("__version__") = cli::kVersion;

    m.def(
        "classify",
        [](const Vec& amplitudes, const std::string& set, double tol_class, double tol_rank) {
            return verdict_dict(classify(to_state(amplitudes), parse_set(set), tolerances(tol_class, tol_rank, 1e-6)));
        },
        py::arg("amplitudes"), py::arg("set"), py::arg("tol_class") = 1e-9, py::arg("tol_rank") = 1e-8,
        "Classify a sym3 (3 amplitudes) or sym10 (10 amplitudes) state against one separable set.");

    m.def("sep_I_discriminant", [](const Vec& v) { return sep_I_discriminant(to_state(v)); }, py::arg("amplitudes"));
    m.def("reduced_purity", [](const Vec& v) { return reduced_purity(to_state(v)); }, py::arg("amplitudes"));
    m.def("sep_I_state", [](cplx c0, cplx c1) { return sep_I_state(c0, c1).amplitudes(); });
    m.def("sep_II_orthogonal_state", [](cplx c0, cplx c1) { return sep_II_orthogonal_state(c0, c1).amplitudes(); });

    m.def("pauli", &pauli, py::arg("k"));
    m.def(
        "construct_sep_I_preserver", [](const Mat& o) { return construct_sep_I_preserver(o).matrix(); }, py::arg("o"),
        "Symmetric projection of O (x) O on the sym3 space.");
    m.def(
        "fit_sep_I_preserver",
        [](const Mat& a) {
            const SepIPreserverFit f = fit_sep_I_preserver(a);
            py::dict d;
            d["fits"] = f.fits;
            d["o"] = f.o ? py::cast(*f.o) : py::none();
            d["defect"] = f.defect;
            return d;
        },
        py::arg("a"));
    m.def("is_sep_II_preserver", [](const Mat& o) { return is_sep_II_preserver(o); }, py::arg("o"));

    m.def(
        "residual", [](const Mat& a, const Mat& b, const Vec& psi) {
            return residual(to_operator(a), to_operator(b), to_state(psi));
        },
        py::arg("a"), py::arg("b"), py::arg("psi"), "<AB> - <A><B> on the normalized state.");

    m.def(
        "audit",
        [](const Mat& a, const Mat& b, const std::string& set, std::size_t samples, std::uint64_t seed,
           unsigned threads) {
            AuditConfig cfg;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.threads = threads;
            const SeparableSet s = parse_set(set);
            cfg.sectorwise = s == SeparableSet::Ssr;
            const AuditReport r = audit(to_operator(a), to_operator(b), s, cfg);
            py::dict d;
            d["max_abs"] = r.max_abs;
            d["mean_abs"] = r.mean_abs;
            d["argmax_index"] = r.argmax_index;
            d["verdict"] = audit_verdict_name(r.verdict);
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("set"), py::arg("samples") = 1000, py::arg("seed") = 42,
        py::arg("threads") = 0);

    m.def(
        "find_witness",
        [](const Mat& a, const Mat& b, const std::string& set, std::size_t budget, std::uint64_t seed, bool maximize) {
            WitnessConfig cfg;
            cfg.budget = budget;
            cfg.maximize = maximize;
            const WitnessSearch w = find_violation_witness(to_operator(a), to_operator(b), parse_set(set), cfg, seed);
            py::dict d;
            d["found"] = w.witness.has_value();
            d["evaluations"] = w.evaluations;
            d["best_abs"] = w.best_abs;
            if (w.witness) {
                d["residual"] = w.witness->residual;
                d["state"] = w.witness->state.amplitudes();
            }
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("set"), py::arg("budget") = 10000, py::arg("seed") = 42,
        py::arg("maximize") = true);

    m.def(
        "positive_control",
        [](const std::string& kind, std::size_t pairs, std::size_t states, std::uint64_t seed) {
            const ControlKind k = kind == "ssr" || kind == "SSR" ? ControlKind::Ssr : ControlKind::Mode;
            return positive_control(k, pairs, states, seed).max_abs;
        },
        py::arg("kind"), py::arg("pairs") = 100, py::arg("states") = 100, py::arg("seed") = 42,
        "Largest |residual| over random local pairs; mode or ssr.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
