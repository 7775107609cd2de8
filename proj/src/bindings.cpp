#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qwline/evolve.hpp"
#include "qwline/run.hpp"
#include "qwline/rw.hpp"
#include "qwline/transfer.hpp"

namespace py = pybind11;
using namespace qw;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Space-inhomogeneous two-state quantum walks on the line and on cycles";

  py::class_<Topology>(m, "Topology", "Line window [-L, L] or cycle of m sites")
      .def_static("line", &Topology::line, py::arg("half_width"))
      .def_static("cycle", &Topology::cycle, py::arg("sites"))
      .def_property_readonly("size", &Topology::size)
      .def("is_line", &Topology::is_line)
      .def("is_cycle", &Topology::is_cycle)
      .def("half_width", &Topology::half_width)
      .def("all_sites", &Topology::all_sites)
      .def("__eq__", [](const Topology& a, const Topology& b) { return a == b; })
      .def("__repr__", &Topology::describe);

  py::class_<Coin>(m, "Coin", "2x2 unitary coin, entries a b c d row-major")
      .def(py::init([](Complex a, Complex b, Complex c, Complex d) {
             return Coin{a, b, c, d};
           }),
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
      .def_readonly("a", &Coin::a)
      .def_readonly("b", &Coin::b)
      .def_readonly("c", &Coin::c)
      .def_readonly("d", &Coin::d)
      .def("matrix", &Coin::matrix)
      .def_static("from_matrix", &Coin::from_matrix);

  m.def("build_coin", &build_coin, py::arg("theta"), py::arg("omega"),
        "Coin [[cos t, e^{iw} sin t], [e^{-iw} sin t, -cos t]]");
  m.def("split_coin", &split_coin, py::arg("coin"),
        "(P, Q): left- and right-routing parts with P + Q = U");

  py::class_<CPhiParams>(m, "CPhiParams",
                         "Phase-gradient family: omega_x = omega0 + 2*phi*x mod 2*pi")
      .def(py::init<double, double, double>(), py::arg("theta"), py::arg("phi"),
           py::arg("omega0") = 0.0)
      .def_readonly("theta", &CPhiParams::theta)
      .def_readonly("phi", &CPhiParams::phi)
      .def_readonly("omega0", &CPhiParams::omega0)
      .def("omega_at", &CPhiParams::omega_at, py::arg("site"))
      .def("alpha_at", &CPhiParams::alpha_at, py::arg("site"))
      .def("lam", &CPhiParams::lambda, "e^{i phi}");

  m.def("cphi_coin_at", &cphi_coin_at, py::arg("params"), py::arg("site"));

  py::class_<CoinSequence>(m, "CoinSequence")
      .def_static("cphi", &CoinSequence::cphi, py::arg("topology"), py::arg("params"))
      .def_static("from_coins", &CoinSequence::from_coins, py::arg("topology"), py::arg("coins"))
      .def("at", &CoinSequence::at, py::arg("site"))
      .def_property_readonly("topology", &CoinSequence::topology);

  m.def("detect_period",
        py::overload_cast<const CoinSequence&, int, int, double>(&detect_period),
        py::arg("seq"), py::arg("max_period"), py::arg("scan_width"),
        py::arg("tolerance") = tol::period);
  m.def("detect_period", py::overload_cast<const CoinSequence&, int>(&detect_period),
        py::arg("seq"), py::arg("max_period"));

  py::class_<SpinorField>(m, "SpinorField")
      .def(py::init<Topology, std::vector<Vec2>, int>(), py::arg("topology"),
           py::arg("amplitudes"), py::arg("boundary_depth") = 0)
      .def_static("zero", &SpinorField::zero, py::arg("topology"))
      .def_static("point", &SpinorField::point, py::arg("topology"), py::arg("site"),
                  py::arg("amplitude"))
      .def("at", &SpinorField::at, py::arg("site"))
      .def_property_readonly("amplitudes", &SpinorField::amplitudes)
      .def_property_readonly("topology", &SpinorField::topology)
      .def_property_readonly("boundary_depth", &SpinorField::boundary_depth)
      .def("is_zero", &SpinorField::is_zero);

  py::class_<Measure>(m, "Measure")
      .def(py::init<Topology, std::vector<double>>(), py::arg("topology"), py::arg("values"))
      .def("at", &Measure::at, py::arg("site"))
      .def_property_readonly("values", &Measure::values)
      .def_property_readonly("topology", &Measure::topology)
      .def("total", &Measure::total);

  m.def("gamma_measure", &gamma_measure, py::arg("psi"),
        "Per-site |psi_L|^2 + |psi_R|^2");
  m.def("uniformity_defect",
        py::overload_cast<const Measure&, const std::vector<int>&>(&uniformity_defect),
        py::arg("mu"), py::arg("region"));
  m.def("uniformity_defect", py::overload_cast<const Measure&>(&uniformity_defect),
        py::arg("mu"));
  m.def("scale", &scale, py::arg("psi"), py::arg("z"));
  m.def("interior_sites", &interior_sites, py::arg("psi"));

  py::class_<EvolutionOperator>(m, "EvolutionOperator")
      .def(py::init<CoinSequence>(), py::arg("coins"))
      .def_property_readonly("topology", &EvolutionOperator::topology)
      .def("left_mover", &EvolutionOperator::left_mover, py::arg("site"))
      .def("right_mover", &EvolutionOperator::right_mover, py::arg("site"));

  m.def("step", &step, py::arg("psi"), py::arg("op"),
        "psi'(x) = P_{x+1} psi(x+1) + Q_{x-1} psi(x-1)");
  m.def("iterate", &iterate, py::arg("psi"), py::arg("op"), py::arg("steps"));
  m.def("dense_cycle_operator", &dense_cycle_operator, py::arg("coins"),
        "Dense 2m x 2m matrix equal to step on the flattened amplitudes");
  m.def("spectrum", &spectrum, py::arg("op"));
  m.def("spectral_distance", &spectral_distance, py::arg("op"), py::arg("lam"));

  py::enum_<Side>(m, "Side").value("plus", Side::plus).value("minus", Side::minus);

  py::class_<TransferMatrix>(m, "TransferMatrix")
      .def_readonly("entries", &TransferMatrix::entries)
      .def_readonly("lam", &TransferMatrix::lambda)
      .def_readonly("side", &TransferMatrix::side)
      .def_readonly("site", &TransferMatrix::site);

  m.def("transfer_plus", &transfer_plus, py::arg("coin_x"), py::arg("coin_prev"),
        py::arg("lam"), py::arg("site") = 0);
  m.def("transfer_minus", &transfer_minus, py::arg("coin_next"), py::arg("coin_x"),
        py::arg("lam"), py::arg("site") = 0);
  m.def("transfer_plus_at", &transfer_plus_at, py::arg("coins"), py::arg("site"), py::arg("lam"));
  m.def("transfer_minus_at", &transfer_minus_at, py::arg("coins"), py::arg("site"), py::arg("lam"));
  m.def("cphi_transfer_plus", &cphi_transfer_plus, py::arg("params"), py::arg("site"));
  m.def("cphi_transfer_minus", &cphi_transfer_minus, py::arg("params"), py::arg("site"));

  m.def("build_eigenstate", &build_eigenstate, py::arg("coins"), py::arg("lam"),
        py::arg("psi0"), py::arg("half_width"),
        "Generalized eigenvector grown from psi(0) by transfer products");
  m.def("build_cycle_eigenstate", &build_cycle_eigenstate, py::arg("coins"), py::arg("lam"),
        py::arg("psi0"));
  m.def("eigen_residual",
        py::overload_cast<const SpinorField&, const CoinSequence&, Complex>(&eigen_residual),
        py::arg("psi"), py::arg("coins"), py::arg("lam"));
  m.def("eigen_residual",
        py::overload_cast<const SpinorField&, const CoinSequence&, Complex,
                          const std::vector<int>&>(&eigen_residual),
        py::arg("psi"), py::arg("coins"), py::arg("lam"), py::arg("sites"));
  m.def("cycle_product", &cycle_product, py::arg("coins"), py::arg("lam"),
        "Ordered transfer product around the cycle, site-1 matrix applied first");

  py::class_<HoppingSequence>(m, "HoppingSequence")
      .def(py::init<Topology, std::vector<double>>(), py::arg("topology"), py::arg("p"))
      .def_static("periodic", &HoppingSequence::periodic, py::arg("topology"), py::arg("pattern"))
      .def("left_probability", &HoppingSequence::left_probability, py::arg("site"))
      .def("right_probability", &HoppingSequence::right_probability, py::arg("site"))
      .def_property_readonly("p", &HoppingSequence::p)
      .def_property_readonly("topology", &HoppingSequence::topology);

  m.def("rw_step", &rw_step, py::arg("mu"), py::arg("hop"),
        "mu'(x) = p_{x+1} mu(x+1) + q_{x-1} mu(x-1)");

  py::class_<StationarityWitness>(m, "StationarityWitness")
      .def_readonly("is_uniform_stationary", &StationarityWitness::is_uniform_stationary)
      .def_readonly("violating_site", &StationarityWitness::violating_site);

  m.def("uniform_stationarity_witness", &uniform_stationarity_witness, py::arg("hop"),
        py::arg("tolerance") = 1e-12);

  py::class_<DichotomyRow>(m, "DichotomyRow")
      .def_readonly("period", &DichotomyRow::period)
      .def_readonly("rw_admits_uniform", &DichotomyRow::rw_admits_uniform)
      .def_readonly("qw_admits_uniform", &DichotomyRow::qw_admits_uniform)
      .def_readonly("qw_phi", &DichotomyRow::qw_phi)
      .def_readonly("qw_detected_period", &DichotomyRow::qw_detected_period)
      .def_readonly("qw_eigen_residual", &DichotomyRow::qw_eigen_residual)
      .def_readonly("qw_uniformity_defect", &DichotomyRow::qw_uniformity_defect);

  m.def("dichotomy_table", &dichotomy_table, py::arg("max_period"),
        py::arg("theta") = kPi / 4, py::arg("omega0") = 0.0);

  m.def("run_config_text", &qw::cli::run_config_text, py::arg("config_text"),
        py::arg("out_dir"), "Run a JSON config; returns the CLI exit code");
  m.def("parse_angle_text", &qw::cli::parse_angle_text, py::arg("text"));

  m.attr("PI") = kPi;
}
