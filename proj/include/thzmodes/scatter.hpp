#ifndef THZMODES_SCATTER_HPP
#define THZMODES_SCATTER_HPP

#include "thzmodes/decomp.hpp"

#include <Eigen/Core>

#include <vector>

namespace thzmodes::scatter {

using decomp::ModeDecomposition;
using decomp::Side;

/// Per-mode Bogolyubov gains g_j = gainLG * R_j, in decomposition order.
struct GainSpectrum {
    std::vector<double> g;
    double gainLG = 0.0;
};

/// Angular intensity I(phi) on a uniform grid over [-pi, pi), plus optional
/// per-mode components sinh^2(g_j) |U_j(phi)|^2 for the leading modes.
struct AngularIntensity {
    std::vector<double> phi;
    std::vector<double> total;
    std::vector<std::vector<double>> per_mode; // per_mode[j][k], leading modes
};

/// One figure-style curve per mode: R_j (1 + 2 pi |R_j| |U_j(phi)|^2).
struct ShiftedCurves {
    std::vector<double> phi;
    std::vector<double> values;              // the R_j shown, top J by |R|
    std::vector<std::vector<double>> curves; // curves[j][k]
};

/// Plane-wave scattering kernels sampled on a uniform azimuthal grid with
/// sqrt(2 pi / N) quadrature weight folded in on each side, so operator
/// identities hold as plain matrix identities (vacuum propagation is the
/// unit matrix).  k_ii/k_ss are the idler->idler and signal->signal blocks,
/// k_is/k_si the cross blocks multiplying input annihilation operators.
struct ScatteringKernels {
    int grid_size = 0;
    std::vector<double> phi;
    Eigen::MatrixXcd k_ii, k_is, k_ss, k_si;
};

GainSpectrum bogolyubov_gains(const ModeDecomposition& dec, double gainLG);

/// Sum of mode intensities weighted by sinh^2(g_j).  per_mode_count leading
/// modes also get individual columns (0 = totals only).
AngularIntensity intensity(const ModeDecomposition& dec, const GainSpectrum& gains,
                           Side side, int grid_size, int per_mode_count = 0);

ShiftedCurves shifted_mode_curves(const ModeDecomposition& dec, Side side,
                                  int grid_size, int mode_count);

/// K = (sum sinh^2 g_j)^2 / sum sinh^4 g_j.  Vacuum (all g zero) is an error.
double effective_mode_number(const GainSpectrum& gains);

ScatteringKernels scattering_kernels(const ModeDecomposition& dec,
                                     const GainSpectrum& gains, int grid_size);

} // namespace thzmodes::scatter

#endif
