#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dilute1d/ed_oracle.hpp"
#include "dilute1d/errors.hpp"
#include "dilute1d/free_fermi.hpp"
#include "dilute1d/lieb_liniger.hpp"
#include "dilute1d/potential.hpp"
#include "dilute1d/report.hpp"
#include "dilute1d/scattering.hpp"
#include "dilute1d/trial_states.hpp"
#include "dilute1d/validator.hpp"

namespace py = pybind11;
using namespace dilute1d;

// Results cross the boundary as JSON text; the Python side decodes them.

PYBIND11_MODULE(_dilute1d, m) {
    m.doc() = "Dilute one-dimensional gases: native core";

    // Translators run newest first, so the base class goes in first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<InvalidScale>(m, "InvalidScale", PyExc_ValueError);
    py::register_exception<InvalidRadius>(m, "InvalidRadius", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<Potential>(m, "Potential")
        .def(py::init<>())
        .def_static("from_config", &parse_potential, py::arg("text"))
        .def_static("load", &load_potential, py::arg("path"))
        .def_static("lieb_liniger", &make_lieb_liniger, py::arg("c"))
        .def_static("hard_core", &make_hard_core, py::arg("diameter"))
        .def_static("square_barrier", &make_square_barrier, py::arg("height"), py::arg("radius"))
        .def_property_readonly("range", &Potential::range)
        .def_property_readonly("digest", &Potential::digest)
        .def("config", [](const Potential& p) { return to_config(p); })
        .def("__repr__", [](const Potential& p) { return "<Potential " + p.digest() + ">"; });

    m.def(
        "scatter_json",
        [](const Potential& p, const std::string& channel, double radius, int samples) {
            if (channel != "odd" && channel != "even") throw InvalidParameter("channel must be even or odd");
            const Channel ch = channel == "odd" ? Channel::Odd : Channel::Even;
            return to_json(solve_scattering(p, ch, radius), samples).dump();
        },
        py::arg("potential"), py::arg("channel") = "even", py::arg("radius"), py::arg("samples") = 0);

    m.def(
        "ll_json",
        [](double gamma, int nodes, bool density) { return to_json(e_of_gamma(gamma, nodes), density).dump(); },
        py::arg("gamma"), py::arg("nodes") = kDefaultLLNodes, py::arg("density") = false);
    m.def("ll_lower_bound", &ll_lower_bound, py::arg("gamma"));
    m.def("ll_expansion", &ll_expansion, py::arg("gamma"));

    m.def(
        "psi_F",
        [](const std::vector<double>& x, double length) {
            return psi_F(FermiEnsemble(static_cast<int>(x.size()), length), x);
        },
        py::arg("x"), py::arg("length"));
    m.def(
        "fermi_energy", [](int n, double length) { return dirichlet_energy(FermiEnsemble(n, length)); }, py::arg("n"),
        py::arg("length"));
    m.def(
        "rho2", [](int n, double length, double x1, double x2) { return rho2(FermiEnsemble(n, length), x1, x2); },
        py::arg("n"), py::arg("length"), py::arg("x1"), py::arg("x2"));

    m.def(
        "oracle_json",
        [](int n, double length, const std::string& bc, const Potential& p, bool fermi, int cells, int refinements) {
            const OracleProblem op{n, length, parse_boundary(bc), p, fermi ? Statistics::Fermi : Statistics::Bose,
                                   cells};
            py::gil_scoped_release release;
            return to_json(ground_energy(op, refinements)).dump();
        },
        py::arg("n"), py::arg("length"), py::arg("bc") = "dirichlet", py::arg("potential") = Potential{},
        py::arg("fermi") = false, py::arg("cells") = 256, py::arg("refinements") = 3);

    m.def(
        "trial_json",
        [](int n, double length, const Potential& p, double b, int order) {
            const TrialState t = build_trial(n, length, p, b);
            return to_json(t, trial_energy(t, order)).dump();
        },
        py::arg("n"), py::arg("length"), py::arg("potential"), py::arg("b"), py::arg("order") = 64);

    m.def(
        "validate_json",
        [](int n, double length, const Potential& p, const std::string& symmetry, double kappa, double c,
           bool oracle, int cells, int refinements, double c_upper, double c_lower) {
            const Symmetry s = parse_symmetry(symmetry, kappa);
            py::gil_scoped_release release;
            return to_json(validate(n, length, p, s, c, OracleSettings{oracle, cells, refinements}, c_upper, c_lower))
                .dump();
        },
        py::arg("n"), py::arg("length"), py::arg("potential") = Potential{}, py::arg("symmetry") = "bose",
        py::arg("kappa") = 0.0, py::arg("c") = 0.0, py::arg("oracle") = false, py::arg("cells") = 256,
        py::arg("refinements") = 3, py::arg("c_upper") = 1.0, py::arg("c_lower") = 1.0);
}
