#ifndef THZMODES_SCAN_HPP
#define THZMODES_SCAN_HPP

#include "thzmodes/coupling.hpp"
#include "thzmodes/decomp.hpp"
#include "thzmodes/physics.hpp"
#include "thzmodes/scatter.hpp"

#include <vector>

namespace thzmodes::scan {

/// Model validity limit: the azimuthal reduction breaks down near 2 THz.
inline constexpr double kMaxFrequencyTHz = 2.0;

struct KScanRow {
    double f_thz = 0.0;
    double gainLG = 0.0;
    double tau = 0.0;
    int n_max = 0;
    double k_eff = 0.0;
    double schmidt_k = 0.0;
};

struct KScanResult {
    std::vector<KScanRow> rows; // sorted by (gainLG, f_thz)
};

/// Full pipeline at one frequency: eigenvalue table plus the top-J
/// figure-style shifted curves for both sides.
struct ModeGallery {
    double f_thz = 0.0;
    double tau = 0.0;
    int n_max = 0;
    double gainLG = 0.0;
    decomp::ModeDecomposition decomposition;
    scatter::ShiftedCurves idler;
    scatter::ShiftedCurves signal;
};

/// Effective mode number K and Schmidt number over a frequency/gain grid.
/// Each point picks n_max = truncation_order(tau, 1e-12) adaptively; the
/// gain list entries are gain_ref values fed through cfg's gain model.
/// Frequencies are in THz and must lie in (0, 2].
KScanResult scan_k(const physics::ExperimentConfig& cfg, coupling::ChiVariant chi,
                   const std::vector<double>& freqs_thz,
                   const std::vector<double>& gain_list);

ModeGallery mode_gallery(const physics::ExperimentConfig& cfg, coupling::ChiVariant chi,
                         double f_thz, int mode_count, int grid_size);

/// Throws std::invalid_argument naming the 2 THz validity limit.
void check_frequency_valid(double f_thz);

} // namespace thzmodes::scan

#endif
