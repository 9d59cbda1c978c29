#include "thzmodes/coupling.hpp"
#include "thzmodes/decomp.hpp"
#include "thzmodes/io.hpp"
#include "thzmodes/oracle.hpp"
#include "thzmodes/physics.hpp"
#include "thzmodes/scan.hpp"
#include "thzmodes/scatter.hpp"
#include "thzmodes/specfun.hpp"
#include "thzmodes/version.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace thzmodes;

namespace {

coupling::ChiVariant chi_arg(int chi) { return coupling::chi_from_int(chi); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Azimuthal eigenmodes of strongly non-degenerate parametric "
              "down-conversion: coupling matrices, Bloch-Messiah style mode "
              "decomposition, Bogolyubov gains, intensities and mode counts.";
    m.attr("__version__") = kVersion;

    py::enum_<physics::GainModel>(m, "GainModel")
        .value("fixed", physics::GainModel::fixed)
        .value("pump_scaled", physics::GainModel::pump_scaled);

    py::class_<physics::ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("pump_wavelength", &physics::ExperimentConfig::pump_wavelength)
        .def_readwrite("crystal_length", &physics::ExperimentConfig::crystal_length)
        .def_readwrite("beam_diameter", &physics::ExperimentConfig::beam_diameter)
        .def_readwrite("idler_polar_angle", &physics::ExperimentConfig::idler_polar_angle)
        .def_readwrite("thz_refractive_index", &physics::ExperimentConfig::thz_refractive_index)
        .def_readwrite("gain_ref", &physics::ExperimentConfig::gain_ref)
        .def_readwrite("gain_model", &physics::ExperimentConfig::gain_model)
        .def_readwrite("gain_ref_frequency", &physics::ExperimentConfig::gain_ref_frequency)
        .def("validate", &physics::ExperimentConfig::validate);

    m.def("load_config", &io::load_config, "path"_a);
    m.def(
        "tau_of_frequency",
        [](double f_hz, const physics::ExperimentConfig& cfg) {
            return physics::tau_of_frequency(f_hz, cfg);
        },
        "f_hz"_a, "config"_a = physics::ExperimentConfig{});
    m.def(
        "gain_of_frequency",
        [](double f_hz, const physics::ExperimentConfig& cfg) {
            return physics::gain_of_frequency(f_hz, cfg);
        },
        "f_hz"_a, "config"_a = physics::ExperimentConfig{});

    m.def(
        "scaled_infeld_row",
        [](double tau, int n_max) { return specfun::scaled_infeld_row(tau, n_max).values; },
        "tau"_a, "n_max"_a, "e^{-tau} I_n(tau) for n = 0..n_max");
    m.def("scaled_infeld", &specfun::scaled_infeld, "n"_a, "tau"_a);
    m.def("infeld_quadrature", &oracle::infeld_quadrature, "n"_a, "tau"_a);

    m.def("truncation_order", &coupling::truncation_order, "tau"_a, "eps"_a = 1e-12);
    m.def(
        "coupling_matrix",
        [](int chi, double tau, int n_max) {
            return coupling::build(chi_arg(chi), tau, n_max).entries;
        },
        "chi"_a, "tau"_a, "n_max"_a,
        "Dense coupling matrix over Fourier indices -n_max..n_max");

    py::class_<decomp::ModeDecomposition>(m, "ModeDecomposition")
        .def_readonly("values", &decomp::ModeDecomposition::values)
        .def_readonly("left_vectors", &decomp::ModeDecomposition::left_vectors)
        .def_readonly("right_vectors", &decomp::ModeDecomposition::right_vectors)
        .def_readonly("tau", &decomp::ModeDecomposition::tau)
        .def_readonly("n_max", &decomp::ModeDecomposition::n_max)
        .def_readonly("sign_warning", &decomp::ModeDecomposition::sign_warning)
        .def_property_readonly("parity",
                               [](const decomp::ModeDecomposition& d) {
                                   std::vector<std::string> out;
                                   out.reserve(d.parity.size());
                                   for (auto p : d.parity)
                                       out.push_back(decomp::to_string(p));
                                   return out;
                               })
        .def("mode_count", &decomp::ModeDecomposition::mode_count)
        .def("schmidt_number", [](const decomp::ModeDecomposition& d) {
            return decomp::schmidt_number(d);
        });

    m.def(
        "decompose",
        [](int chi, double tau, int n_max) {
            const int order = n_max > 0 ? n_max : coupling::truncation_order(tau, 1e-12);
            return decomp::decompose(coupling::build(chi_arg(chi), tau, order));
        },
        "chi"_a, "tau"_a, "n_max"_a = 0,
        "Decompose the coupling matrix; n_max = 0 picks the truncation order "
        "adaptively.");

    m.def(
        "mode_profile",
        [](const decomp::ModeDecomposition& dec, int j, const std::string& side, int grid) {
            const auto s = side == "signal" ? decomp::Side::signal : decomp::Side::idler;
            return decomp::mode_function(dec, j, s, grid).samples;
        },
        "decomposition"_a, "mode"_a, "side"_a = "idler", "grid"_a = 512,
        "Complex samples of U_j(phi) on a uniform grid over [-pi, pi)");

    m.def(
        "intensity_profile",
        [](const decomp::ModeDecomposition& dec, double gainLG, const std::string& side,
           int grid) {
            const auto s = side == "signal" ? decomp::Side::signal : decomp::Side::idler;
            const auto gains = scatter::bogolyubov_gains(dec, gainLG);
            auto profile = scatter::intensity(dec, gains, s, grid);
            return py::make_tuple(profile.phi, profile.total);
        },
        "decomposition"_a, "gainLG"_a, "side"_a = "idler", "grid"_a = 512,
        "(phi, I(phi)) with mode weights sinh^2(gainLG R_j)");

    m.def(
        "effective_mode_number",
        [](const decomp::ModeDecomposition& dec, double gainLG) {
            return scatter::effective_mode_number(scatter::bogolyubov_gains(dec, gainLG));
        },
        "decomposition"_a, "gainLG"_a);

    m.def(
        "bogolyubov_gains",
        [](const decomp::ModeDecomposition& dec, double gainLG) {
            return scatter::bogolyubov_gains(dec, gainLG).g;
        },
        "decomposition"_a, "gainLG"_a);

    m.def(
        "scattering_kernels",
        [](const decomp::ModeDecomposition& dec, double gainLG, int grid) {
            const auto k =
                scatter::scattering_kernels(dec, scatter::bogolyubov_gains(dec, gainLG), grid);
            return py::make_tuple(k.k_ii, k.k_is, k.k_ss, k.k_si);
        },
        "decomposition"_a, "gainLG"_a, "grid"_a = 256,
        "(K_ii, K_is, K_ss, K_si) with quadrature weights folded in");

    m.def(
        "kernel_singular_values",
        [](int chi, double tau, int grid) {
            return oracle::kernel_svd(chi_arg(chi), tau, grid).singular_values;
        },
        "chi"_a, "tau"_a, "grid"_a, "Brute-force grid-kernel singular values");

    py::class_<scan::KScanRow>(m, "KScanRow")
        .def_readonly("f_thz", &scan::KScanRow::f_thz)
        .def_readonly("gainLG", &scan::KScanRow::gainLG)
        .def_readonly("tau", &scan::KScanRow::tau)
        .def_readonly("n_max", &scan::KScanRow::n_max)
        .def_readonly("K", &scan::KScanRow::k_eff)
        .def_readonly("schmidt_K", &scan::KScanRow::schmidt_k);

    m.def(
        "scan_k",
        [](int chi, const std::vector<double>& freqs_thz, const std::vector<double>& gains,
           const physics::ExperimentConfig& cfg) {
            return scan::scan_k(cfg, chi_arg(chi), freqs_thz, gains).rows;
        },
        "chi"_a, "freqs_thz"_a, "gains"_a, "config"_a = physics::ExperimentConfig{});
}
