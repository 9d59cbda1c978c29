#include "thzmodes/scatter.hpp"

#include "thzmodes/physics.hpp"

#include <cmath>
#include <stdexcept>

namespace thzmodes::scatter {

namespace {

using physics::kPi;

void check_alignment(const ModeDecomposition& dec, const GainSpectrum& gains) {
    if (static_cast<int>(gains.g.size()) != dec.mode_count())
        throw std::invalid_argument("gain spectrum length does not match the decomposition");
}

} // namespace

GainSpectrum bogolyubov_gains(const ModeDecomposition& dec, double gainLG) {
    if (!std::isfinite(gainLG) || gainLG < 0.0)
        throw std::invalid_argument("bogolyubov_gains: gainLG must be finite and >= 0");
    GainSpectrum gs;
    gs.gainLG = gainLG;
    gs.g.reserve(dec.values.size());
    for (double r : dec.values)
        gs.g.push_back(gainLG * r);
    return gs;
}

AngularIntensity intensity(const ModeDecomposition& dec, const GainSpectrum& gains,
                           Side side, int grid_size, int per_mode_count) {
    check_alignment(dec, gains);
    if (per_mode_count < 0 || per_mode_count > dec.mode_count())
        throw std::invalid_argument("intensity: per_mode_count out of range");

    AngularIntensity out;
    out.phi.resize(static_cast<std::size_t>(grid_size));
    for (int k = 0; k < grid_size; ++k)
        out.phi[static_cast<std::size_t>(k)] = -kPi + 2.0 * kPi * k / grid_size;
    out.total.assign(static_cast<std::size_t>(grid_size), 0.0);
    out.per_mode.assign(static_cast<std::size_t>(per_mode_count),
                        std::vector<double>(static_cast<std::size_t>(grid_size), 0.0));

    for (int j = 0; j < dec.mode_count(); ++j) {
        const double g = gains.g[static_cast<std::size_t>(j)];
        const double weight = std::sinh(g) * std::sinh(g);
        if (weight == 0.0 && j >= per_mode_count)
            continue;
        const auto u = decomp::mode_function(dec, j, side, grid_size);
        for (int k = 0; k < grid_size; ++k) {
            const double m = weight * std::norm(u.samples[static_cast<std::size_t>(k)]);
            out.total[static_cast<std::size_t>(k)] += m;
            if (j < per_mode_count)
                out.per_mode[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = m;
        }
    }
    return out;
}

ShiftedCurves shifted_mode_curves(const ModeDecomposition& dec, Side side,
                                  int grid_size, int mode_count) {
    if (mode_count < 0 || mode_count > dec.mode_count())
        throw std::invalid_argument("shifted_mode_curves: mode count out of range");

    ShiftedCurves out;
    out.phi.resize(static_cast<std::size_t>(grid_size));
    for (int k = 0; k < grid_size; ++k)
        out.phi[static_cast<std::size_t>(k)] = -kPi + 2.0 * kPi * k / grid_size;
    out.values.assign(dec.values.begin(), dec.values.begin() + mode_count);
    out.curves.reserve(static_cast<std::size_t>(mode_count));
    for (int j = 0; j < mode_count; ++j) {
        const double r = dec.values[static_cast<std::size_t>(j)];
        std::vector<double> curve(static_cast<std::size_t>(grid_size), 0.0);
        if (r != 0.0) {
            const auto u = decomp::mode_function(dec, j, side, grid_size);
            for (int k = 0; k < grid_size; ++k)
                curve[static_cast<std::size_t>(k)] =
                    r * (1.0 + 2.0 * kPi * std::abs(r) * std::norm(u.samples[static_cast<std::size_t>(k)]));
        }
        out.curves.push_back(std::move(curve));
    }
    return out;
}

double effective_mode_number(const GainSpectrum& gains) {
    double s2 = 0.0, s4 = 0.0;
    for (double g : gains.g) {
        const double w = std::sinh(g) * std::sinh(g);
        s2 += w;
        s4 += w * w;
    }
    if (s4 == 0.0)
        throw std::invalid_argument("effective_mode_number: undefined for vacuum (all gains zero)");
    return s2 * s2 / s4;
}

ScatteringKernels scattering_kernels(const ModeDecomposition& dec,
                                     const GainSpectrum& gains, int grid_size) {
    check_alignment(dec, gains);
    const int n = grid_size;
    ScatteringKernels out;
    out.grid_size = n;
    out.phi.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out.phi[static_cast<std::size_t>(k)] = -kPi + 2.0 * kPi * k / n;

    // With the sqrt(h) weights folded in on both sides, the Fourier modes
    // left out of the truncated decomposition propagate as the exact unit
    // matrix; the computed modes contribute their deviation from it.  The
    // cross kernels carry the -i phase of the squeezing convention.
    out.k_ii = Eigen::MatrixXcd::Identity(n, n);
    out.k_ss = Eigen::MatrixXcd::Identity(n, n);
    out.k_is = Eigen::MatrixXcd::Zero(n, n);
    out.k_si = Eigen::MatrixXcd::Zero(n, n);

    const double h = 2.0 * kPi / n;
    const std::complex<double> minus_i(0.0, -1.0);
    for (int j = 0; j < dec.mode_count(); ++j) {
        const double g = gains.g[static_cast<std::size_t>(j)];
        if (g == 0.0)
            continue;
        const auto uf = decomp::mode_function(dec, j, Side::idler, n);
        const auto vf = decomp::mode_function(dec, j, Side::signal, n);
        Eigen::VectorXcd u(n), v(n);
        for (int k = 0; k < n; ++k) {
            u(k) = std::sqrt(h) * uf.samples[static_cast<std::size_t>(k)];
            v(k) = std::sqrt(h) * vf.samples[static_cast<std::size_t>(k)];
        }
        const double ch = std::cosh(g) - 1.0;
        const double sh = std::sinh(g);
        out.k_ii.noalias() += ch * u * u.adjoint();
        out.k_ss.noalias() += ch * v.conjugate() * v.transpose();
        out.k_is.noalias() += (minus_i * sh) * u * v.adjoint();
        out.k_si.noalias() += (minus_i * sh) * v.conjugate() * u.transpose();
    }
    return out;
}

} // namespace thzmodes::scatter
