#include "thzmodes/physics.hpp"

#include <cmath>
#include <stdexcept>

namespace thzmodes::physics {

void ExperimentConfig::validate() const {
    if (!(pump_wavelength > 0.0))
        throw std::invalid_argument("config: pump_wavelength must be > 0");
    if (!(crystal_length > 0.0))
        throw std::invalid_argument("config: crystal_length must be > 0");
    if (!(beam_diameter > 0.0))
        throw std::invalid_argument("config: beam_diameter must be > 0");
    if (!(idler_polar_angle > 0.0) || !(idler_polar_angle < kPi / 2.0))
        throw std::invalid_argument("config: idler_polar_angle must be in (0, pi/2)");
    if (!(thz_refractive_index >= 1.0))
        throw std::invalid_argument("config: thz_refractive_index must be >= 1");
    if (!(gain_ref >= 0.0) || !std::isfinite(gain_ref))
        throw std::invalid_argument("config: gain_ref must be finite and >= 0");
    if (gain_model == GainModel::pump_scaled && !(gain_ref_frequency > 0.0))
        throw std::invalid_argument("config: gain_ref_frequency must be > 0 for pump_scaled");
}

double tau_of_frequency(double f_i, const ExperimentConfig& cfg) {
    if (!(f_i > 0.0) || !std::isfinite(f_i))
        throw std::invalid_argument("tau_of_frequency: frequency must be finite and > 0");
    const double k_i = 2.0 * kPi * f_i * cfg.thz_refractive_index / kSpeedOfLight;
    const double x = k_i * cfg.beam_diameter * std::sin(cfg.idler_polar_angle);
    return 0.5 * x * x;
}

double gain_of_frequency(double f_i, const ExperimentConfig& cfg) {
    if (!(f_i > 0.0) || !std::isfinite(f_i))
        throw std::invalid_argument("gain_of_frequency: frequency must be finite and > 0");
    switch (cfg.gain_model) {
    case GainModel::fixed:
        return cfg.gain_ref;
    case GainModel::pump_scaled:
        if (!(cfg.gain_ref_frequency > 0.0))
            throw std::invalid_argument("gain_of_frequency: reference frequency must be > 0");
        return cfg.gain_ref * (f_i / cfg.gain_ref_frequency);
    }
    throw std::logic_error("gain_of_frequency: unknown gain model");
}

DimensionlessPoint dimensionless_point(double f_i, const ExperimentConfig& cfg) {
    return DimensionlessPoint{f_i / 1e12, tau_of_frequency(f_i, cfg), gain_of_frequency(f_i, cfg)};
}

std::string to_string(GainModel m) {
    return m == GainModel::fixed ? "fixed" : "pump_scaled";
}

GainModel gain_model_from_string(const std::string& s) {
    if (s == "fixed")
        return GainModel::fixed;
    if (s == "pump_scaled" || s == "pump-scaled")
        return GainModel::pump_scaled;
    throw std::invalid_argument("unknown gain model '" + s + "' (expected fixed or pump_scaled)");
}

} // namespace thzmodes::physics
