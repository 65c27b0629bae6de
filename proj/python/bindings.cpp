#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tumorstab/errors.hpp"
#include "tumorstab/evolution.hpp"
#include "tumorstab/first_order_mode.hpp"
#include "tumorstab/report.hpp"
#include "tumorstab/spectrum.hpp"
#include "tumorstab/stationary.hpp"
#include "tumorstab/tau_expansion.hpp"

namespace py = pybind11;
using namespace tumorstab;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Stationary layers and linear stability of a delayed tumor "
      "free-boundary model";

  py::register_exception<solve_error>(m, "SolveError");

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<>())
      .def(py::init([](double sigma_bar, double sigma_tilde, double mu, double tau) {
             ModelParams p{sigma_bar, sigma_tilde, mu, tau};
             p.validate();
             return p;
           }),
           py::arg("sigma_bar") = 1.0, py::arg("sigma_tilde") = 0.5,
           py::arg("mu") = 1.0, py::arg("tau") = 0.0)
      .def_readwrite("sigma_bar", &ModelParams::sigma_bar)
      .def_readwrite("sigma_tilde", &ModelParams::sigma_tilde)
      .def_readwrite("mu", &ModelParams::mu)
      .def_readwrite("tau", &ModelParams::tau);

  py::class_<GridFunction>(m, "GridFunction")
      .def_property_readonly("lo", &GridFunction::lo)
      .def_property_readonly("hi", &GridFunction::hi)
      .def_property_readonly("values", &GridFunction::values)
      .def_property_readonly("deriv", &GridFunction::deriv)
      .def("__call__", [](const GridFunction& g, double x) { return g(x); })
      .def("d1", &GridFunction::d1);

  py::class_<StationaryState>(m, "StationaryState")
      .def_readonly("rho_star", &StationaryState::rho_star)
      .def_readonly("rho_s", &StationaryState::rho_s)
      .def_readonly("pressure", &StationaryState::pressure)
      .def_readonly("iterations", &StationaryState::iterations)
      .def_readonly("outer_iterations", &StationaryState::outer_iterations)
      .def_readonly("residual", &StationaryState::residual)
      .def_readonly("contraction_factor", &StationaryState::contraction_factor);

  py::class_<ModeIndex>(m, "ModeIndex")
      .def(py::init([](int n, int mm) { return ModeIndex::make(n, mm); }),
           py::arg("n"), py::arg("m"))
      .def_readonly("n", &ModeIndex::n)
      .def_readonly("m", &ModeIndex::m)
      .def_readonly("j", &ModeIndex::j);

  py::class_<SpectrumEntry>(m, "SpectrumEntry")
      .def_readonly("j", &SpectrumEntry::j)
      .def_readonly("n", &SpectrumEntry::n)
      .def_readonly("m", &SpectrumEntry::m)
      .def_readonly("admissible", &SpectrumEntry::admissible)
      .def_readonly("k1", &SpectrumEntry::k1)
      .def_readonly("k2", &SpectrumEntry::k2)
      .def_readonly("mu_j", &SpectrumEntry::mu_j);

  py::class_<SpectrumTable>(m, "SpectrumTable")
      .def_readonly("rho0", &SpectrumTable::rho0)
      .def_readonly("sigma_bar", &SpectrumTable::sigma_bar)
      .def_readonly("j0", &SpectrumTable::j0)
      .def_readonly("mu_star", &SpectrumTable::mu_star)
      .def_readonly("argmin_mode", &SpectrumTable::argmin_mode)
      .def_readonly("j_scan_limit", &SpectrumTable::j_scan_limit)
      .def_readonly("argmin_tie", &SpectrumTable::argmin_tie)
      .def_readonly("entries", &SpectrumTable::entries);

  py::class_<FirstOrderStationary>(m, "FirstOrderStationary")
      .def_readonly("rho0", &FirstOrderStationary::rho0)
      .def_readonly("mu", &FirstOrderStationary::mu)
      .def_readonly("sigma_bar", &FirstOrderStationary::sigma_bar)
      .def_readonly("rho1", &FirstOrderStationary::rho1)
      .def_readonly("p1_dd_at_rho0", &FirstOrderStationary::p1_dd_at_rho0)
      .def("sigma1_at", &FirstOrderStationary::sigma1_at);

  py::class_<FirstOrderCoefficients>(m, "FirstOrderCoefficients")
      .def_readonly("mode", &FirstOrderCoefficients::mode)
      .def_readonly("h", &FirstOrderCoefficients::h)
      .def_readonly("h1", &FirstOrderCoefficients::h1)
      .def_readonly("k1_coeff", &FirstOrderCoefficients::k1_coeff);

  py::enum_<Parity>(m, "Parity")
      .value("cos_cos", Parity::cos_cos)
      .value("cos_sin", Parity::cos_sin)
      .value("sin_cos", Parity::sin_cos)
      .value("sin_sin", Parity::sin_sin);

  py::class_<ModeTrajectory>(m, "ModeTrajectory")
      .def_readonly("mode", &ModeTrajectory::mode)
      .def_readonly("h", &ModeTrajectory::h)
      .def_readonly("k1_coeff", &ModeTrajectory::k1_coeff)
      .def_readonly("rho0_0", &ModeTrajectory::rho0_0)
      .def_readonly("rho1_0", &ModeTrajectory::rho1_0)
      .def_readonly("times", &ModeTrajectory::times)
      .def_readonly("rho0_t", &ModeTrajectory::rho0_t)
      .def_readonly("rho1_t", &ModeTrajectory::rho1_t)
      .def_readonly("classification", &ModeTrajectory::classification);

  py::class_<DecayCertificate>(m, "DecayCertificate")
      .def_readonly("delta", &DecayCertificate::delta)
      .def_readonly("argmin_mode", &DecayCertificate::argmin_mode)
      .def_readonly("mu_star_value", &DecayCertificate::mu_star_value)
      .def_readonly("delta_prime", &DecayCertificate::delta_prime)
      .def_readonly("envelope_constant", &DecayCertificate::envelope_constant)
      .def_readonly("envelope_ok", &DecayCertificate::envelope_ok)
      .def_readonly("modes_checked", &DecayCertificate::modes_checked);

  py::class_<InitialMode>(m, "InitialMode")
      .def(py::init([](const ModeIndex& mode, Parity parity, double rho0_0,
                       double rho1_0) {
             return InitialMode{mode, parity, rho0_0, rho1_0};
           }),
           py::arg("mode"), py::arg("parity") = Parity::cos_cos,
           py::arg("rho0_0") = 0.0, py::arg("rho1_0") = 0.0)
      .def_readwrite("mode", &InitialMode::mode)
      .def_readwrite("parity", &InitialMode::parity)
      .def_readwrite("rho0_0", &InitialMode::rho0_0)
      .def_readwrite("rho1_0", &InitialMode::rho1_0);

  py::class_<ModeAmplitude>(m, "ModeAmplitude")
      .def_readonly("mode", &ModeAmplitude::mode)
      .def_readonly("parity", &ModeAmplitude::parity)
      .def_readonly("amplitude", &ModeAmplitude::amplitude);

  py::class_<SurfaceSnapshot>(m, "SurfaceSnapshot")
      .def_readonly("epsilon", &SurfaceSnapshot::epsilon)
      .def_readonly("tau", &SurfaceSnapshot::tau)
      .def_readonly("rho_star", &SurfaceSnapshot::rho_star)
      .def_readonly("grid_size", &SurfaceSnapshot::grid_size)
      .def_readonly("modes", &SurfaceSnapshot::modes)
      .def_readonly("heights", &SurfaceSnapshot::heights);

  m.def("solve_rho_s", &solve_rho_s, py::arg("params"));
  m.def("solve_stationary", &solve_stationary, py::arg("params"),
        py::arg("grid_n") = 512, py::arg("tol") = 1e-10);
  m.def("rho_star_1", &rho_star_1, py::arg("rho0"), py::arg("mu"),
        py::arg("sigma_bar"));
  m.def("rho1_integral_residual", &rho1_integral_residual, py::arg("rho0"),
        py::arg("mu"), py::arg("sigma_bar"));
  m.def("first_order_stationary", &first_order_stationary, py::arg("rho0"),
        py::arg("mu"), py::arg("sigma_bar"));
  m.def("k1", &k1, py::arg("j"), py::arg("rho0"));
  m.def("k2", &k2, py::arg("j"), py::arg("rho0"));
  m.def("growth_rate_h", &growth_rate_h, py::arg("mode"), py::arg("mu"),
        py::arg("rho0"), py::arg("sigma_bar"));
  m.def("find_j0", &find_j0, py::arg("rho0"));
  m.def("mu_threshold", &mu_threshold, py::arg("j"), py::arg("rho0"),
        py::arg("sigma_bar"));
  m.def("is_admissible", &is_admissible, py::arg("j"));
  m.def("admissible_witness", &admissible_witness, py::arg("j"));
  m.def("mu_star", &mu_star, py::arg("rho0"), py::arg("sigma_bar"),
        py::arg("j_scan_override") = 0);
  m.def("crossover_rho_bar", &crossover_rho_bar, py::arg("sigma_bar"));
  m.def("first_order_coefficients", &first_order_coefficients, py::arg("mode"),
        py::arg("rho0"), py::arg("mu"), py::arg("sigma_bar"));
  m.def("q1_boundary_flux", &q1_boundary_flux, py::arg("mode"), py::arg("rho0"),
        py::arg("rho1"), py::arg("mu"), py::arg("sigma_bar"),
        py::arg("rho0_amp"), py::arg("rho1_amp"));
  m.def("evolve_mode", &evolve_mode, py::arg("mode"), py::arg("params"),
        py::arg("rho0_0"), py::arg("rho1_0"), py::arg("t_grid"),
        py::arg("self_check") = true);
  m.def("decay_certificate", &decay_certificate, py::arg("params"),
        py::arg("j_max"));
  m.def("synthesize_surface", &synthesize_surface, py::arg("initial"),
        py::arg("params"), py::arg("epsilon"), py::arg("t"),
        py::arg("grid_size") = 0);
}
