#include "thzmodes/scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace thzmodes::scan {

void check_frequency_valid(double f_thz) {
    if (!(f_thz > 0.0) || !(f_thz <= kMaxFrequencyTHz) || !std::isfinite(f_thz))
        throw std::invalid_argument(
            "frequency " + std::to_string(f_thz)
            + " THz is outside the model validity range (0, 2] THz; the azimuthal "
              "approximation becomes incorrect near 2 THz");
}

KScanResult scan_k(const physics::ExperimentConfig& cfg, coupling::ChiVariant chi,
                   const std::vector<double>& freqs_thz,
                   const std::vector<double>& gain_list) {
    cfg.validate();
    for (double f : freqs_thz)
        check_frequency_valid(f);
    if (freqs_thz.empty() || gain_list.empty())
        throw std::invalid_argument("scan_k: frequency and gain lists must be non-empty");

    KScanResult result;
    result.rows.reserve(freqs_thz.size() * gain_list.size());
    for (double f_thz : freqs_thz) {
        const double f_hz = f_thz * 1e12;
        const double tau = physics::tau_of_frequency(f_hz, cfg);
        const int n_max = coupling::truncation_order(tau, 1e-12);
        const auto dec = decomp::decompose(coupling::build(chi, tau, n_max));
        const double schmidt = decomp::schmidt_number(dec);
        for (double gain_ref : gain_list) {
            physics::ExperimentConfig point_cfg = cfg;
            point_cfg.gain_ref = gain_ref;
            const double gainLG = physics::gain_of_frequency(f_hz, point_cfg);
            const auto gains = scatter::bogolyubov_gains(dec, gainLG);
            KScanRow row;
            row.f_thz = f_thz;
            row.gainLG = gainLG;
            row.tau = tau;
            row.n_max = n_max;
            row.k_eff = scatter::effective_mode_number(gains);
            row.schmidt_k = schmidt;
            result.rows.push_back(row);
        }
    }
    std::sort(result.rows.begin(), result.rows.end(), [](const KScanRow& a, const KScanRow& b) {
        if (a.gainLG != b.gainLG)
            return a.gainLG < b.gainLG;
        return a.f_thz < b.f_thz;
    });
    return result;
}

ModeGallery mode_gallery(const physics::ExperimentConfig& cfg, coupling::ChiVariant chi,
                         double f_thz, int mode_count, int grid_size) {
    cfg.validate();
    check_frequency_valid(f_thz);

    ModeGallery gallery;
    gallery.f_thz = f_thz;
    const double f_hz = f_thz * 1e12;
    gallery.tau = physics::tau_of_frequency(f_hz, cfg);
    gallery.n_max = coupling::truncation_order(gallery.tau, 1e-12);
    gallery.gainLG = physics::gain_of_frequency(f_hz, cfg);
    gallery.decomposition = decomp::decompose(coupling::build(chi, gallery.tau, gallery.n_max));

    const int modes = std::min(mode_count, gallery.decomposition.mode_count());
    int grid = std::max(grid_size, 4 * gallery.n_max);
    gallery.idler = scatter::shifted_mode_curves(gallery.decomposition, decomp::Side::idler, grid, modes);
    gallery.signal = scatter::shifted_mode_curves(gallery.decomposition, decomp::Side::signal, grid, modes);
    return gallery;
}

} // namespace thzmodes::scan
