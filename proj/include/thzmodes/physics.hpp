#ifndef THZMODES_PHYSICS_HPP
#define THZMODES_PHYSICS_HPP

#include <string>

namespace thzmodes::physics {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;

/// How the dimensionless pump gain varies with idler frequency.
/// `fixed` keeps gainLG_ref at every frequency; `pump_scaled` scales it
/// linearly, gainLG_ref * (f / gain_ref_frequency), which models a constant
/// pump intensity (the interaction coefficient grows with idler frequency).
enum class GainModel { fixed, pump_scaled };

/// Experimental setup.  All quantities in SI units internally; the config
/// file loader accepts unit suffixes (nm, um, mm, THz, deg, ...).
struct ExperimentConfig {
    double pump_wavelength = 523.3e-9;      // m
    double crystal_length = 1.0e-3;         // m
    double beam_diameter = 300.0e-6;        // m
    double idler_polar_angle = 60.0 * kPi / 180.0; // rad
    double thz_refractive_index = 5.20;
    double gain_ref = 0.01;                 // dimensionless gainLG at reference
    GainModel gain_model = GainModel::fixed;
    double gain_ref_frequency = 1.0e12;     // Hz, used only by pump_scaled

    /// Throws std::invalid_argument if any field is out of range.
    void validate() const;

    bool operator==(const ExperimentConfig&) const = default;
};

/// The two dimensionless numbers the math core consumes, at one frequency.
struct DimensionlessPoint {
    double f_thz = 0.0;
    double tau = 0.0;
    double gainLG = 0.0;
};

/// Geometry parameter tau = (k_i d sin(theta_i))^2 / 2 with
/// k_i = 2 pi f n_THz / c.  Frequency in Hz.
double tau_of_frequency(double f_i, const ExperimentConfig& cfg);

/// Dimensionless gain gainLG at frequency f_i (Hz) under cfg's gain model.
double gain_of_frequency(double f_i, const ExperimentConfig& cfg);

/// Bundle of both numbers, with the frequency echoed in THz for reporting.
DimensionlessPoint dimensionless_point(double f_i, const ExperimentConfig& cfg);

std::string to_string(GainModel m);
GainModel gain_model_from_string(const std::string& s);

} // namespace thzmodes::physics

#endif
