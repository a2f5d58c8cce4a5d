#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbgap/asymptotics.hpp"
#include "mbgap/constants.hpp"
#include "mbgap/dconst.hpp"
#include "mbgap/fredholm.hpp"
#include "mbgap/kernel.hpp"

namespace py = pybind11;
using namespace mbgap;

PYBIND11_MODULE(_mbgap, m) {
    m.doc() = "Hard-edge Muttalib-Borodin gap probabilities: kernel, Fredholm "
              "determinant, and large-gap constants.";

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<double, double>(), py::arg("theta"), py::arg("alpha"))
        .def_readonly("theta", &ModelParams::theta)
        .def_readonly("alpha", &ModelParams::alpha)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(theta=" + std::to_string(p.theta) +
                   ", alpha=" + std::to_string(p.alpha) + ")";
        });

    py::class_<RHConstants>(m, "RHConstants")
        .def_readonly("c1", &RHConstants::c1)
        .def_readonly("c2", &RHConstants::c2)
        .def_readonly("c3", &RHConstants::c3)
        .def_readonly("c4", &RHConstants::c4)
        .def_readonly("c5", &RHConstants::c5)
        .def_readonly("c6", &RHConstants::c6)
        .def_readonly("c7", &RHConstants::c7)
        .def_readonly("c8", &RHConstants::c8)
        .def_readonly("rho", &RHConstants::rho)
        .def_readonly("phi", &RHConstants::phi)
        .def_readonly("b1", &RHConstants::b1)
        .def_readonly("b2", &RHConstants::b2)
        .def_readonly("abs_b2", &RHConstants::abs_b2);

    py::class_<RhoAB>(m, "RhoAB")
        .def_readonly("rho", &RhoAB::rho)
        .def_readonly("a", &RhoAB::a)
        .def_readonly("b", &RhoAB::b);

    m.def("rh_constants", &rh_constants, py::arg("params"));
    m.def("leading_constants", &leading_constants, py::arg("params"));
    m.def("mathcal_k", &mathcal_k, py::arg("params"));
    m.def("r1_22", &r1_22, py::arg("params"));
    m.def("c_constant", &c_constant, py::arg("params"));
    m.def("log_C_constant", &log_C_constant, py::arg("params"), py::arg("d_value"),
          py::arg("d_one_value"));
    m.def("symmetric_params", &symmetric_params, py::arg("params"));
    m.def("product_model_c1", &product_model_c1, py::arg("r"), py::arg("nu"));
    m.def("product_model_c2", &product_model_c2, py::arg("r"), py::arg("q"), py::arg("nu"),
          py::arg("mu"));

    m.def(
        "d_limit",
        [](const ModelParams& p) {
            const auto res = dconst::d_limit(p);
            return py::make_tuple(res.value, res.error_estimate);
        },
        py::arg("params"), "Returns (value, error_estimate).");
    m.def("d_rational", &dconst::d_rational, py::arg("p"), py::arg("q"), py::arg("alpha"),
          py::arg("reduce") = false);
    m.def("d_one", &dconst::d_one, py::arg("alpha"));
    m.def("d_accelerated", &dconst::d_accelerated, py::arg("params"),
          py::arg("remainder_terms") = 5);
    m.def("d_value", &dconst::d_value, py::arg("params"));
    m.def("d_symmetry_residual", &dconst::d_symmetry_residual, py::arg("params"));

    m.def(
        "kernel_point",
        [](const ModelParams& p, double x, double y, double tol) {
            const auto c = kernel::contour_for_range(p, std::min(x, y), std::max(x, y), tol);
            return kernel::kernel_point(p, c, x, y).value;
        },
        py::arg("params"), py::arg("x"), py::arg("y"), py::arg("tol") = 1e-10);
    m.def("kernel_series", &kernel::kernel_series, py::arg("params"), py::arg("x"),
          py::arg("y"), py::arg("max_terms") = 200);
    m.def("bessel_kernel", &kernel::bessel_kernel, py::arg("alpha"), py::arg("x"),
          py::arg("y"));

    py::class_<fredholm::DetResult>(m, "DetResult")
        .def_readonly("log_det", &fredholm::DetResult::log_det)
        .def_readonly("det", &fredholm::DetResult::det)
        .def_readonly("matrix_dim", &fredholm::DetResult::matrix_dim)
        .def_readonly("est_error", &fredholm::DetResult::est_error);

    m.def(
        "fredholm_logdet",
        [](const ModelParams& p, double s, int m_dim) {
            return fredholm::fredholm_logdet(p, s, m_dim);
        },
        py::arg("params"), py::arg("s"), py::arg("m") = 40);
    m.def("bessel_logdet", &fredholm::bessel_logdet, py::arg("alpha"), py::arg("S"),
          py::arg("m") = 40);

    py::class_<asymptotics::AsymptoticExpansion>(m, "AsymptoticExpansion")
        .def_readonly("rho", &asymptotics::AsymptoticExpansion::rho)
        .def_readonly("a", &asymptotics::AsymptoticExpansion::a)
        .def_readonly("b", &asymptotics::AsymptoticExpansion::b)
        .def_readonly("c", &asymptotics::AsymptoticExpansion::c)
        .def_readonly("lnC", &asymptotics::AsymptoticExpansion::lnC)
        .def_readonly("subleading", &asymptotics::AsymptoticExpansion::subleading);

    py::class_<asymptotics::ComparisonRow>(m, "ComparisonRow")
        .def_readonly("s", &asymptotics::ComparisonRow::s)
        .def_readonly("numerical_logdet", &asymptotics::ComparisonRow::numerical_logdet)
        .def_readonly("asymptotic_logdet", &asymptotics::ComparisonRow::asymptotic_logdet)
        .def_readonly("residual", &asymptotics::ComparisonRow::residual)
        .def_readonly("est_error", &asymptotics::ComparisonRow::est_error);

    py::class_<asymptotics::ComparisonReport>(m, "ComparisonReport")
        .def_readonly("rows", &asymptotics::ComparisonReport::rows)
        .def_readonly("residuals_decreasing",
                      &asymptotics::ComparisonReport::residuals_decreasing);

    m.def("build_expansion", &asymptotics::build_expansion, py::arg("params"));
    m.def("asymptotic_logdet", &asymptotics::asymptotic_logdet, py::arg("expansion"),
          py::arg("s"));
    m.def("compare", &asymptotics::compare, py::arg("params"), py::arg("s_grid"),
          py::arg("m") = 40, py::arg("tol") = 1e-5, py::arg("threads") = 1);
    m.def("fit_subleading", &asymptotics::fit_subleading, py::arg("report"),
          py::arg("expansion"), py::arg("n_coeffs"));
}
