#include "thzmodes/physics.hpp"

#include "thzmodes/io.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace thzmodes::physics;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

} // namespace

TEST_CASE("tau endpoints of the default geometry") {
    ExperimentConfig cfg;
    CHECK(tau_of_frequency(0.01e12, cfg) == doctest::Approx(0.04).epsilon(0.10));
    CHECK(tau_of_frequency(2e12, cfg) == doctest::Approx(1600.0).epsilon(0.10));
    CHECK(tau_of_frequency(0.1e12, cfg) == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("tau scales exactly quadratically in frequency") {
    ExperimentConfig cfg;
    const double f1 = 0.037e12, f2 = 1.21e12;
    const double t1 = tau_of_frequency(f1, cfg), t2 = tau_of_frequency(f2, cfg);
    CHECK(t1 * f2 * f2 == doctest::Approx(t2 * f1 * f1).epsilon(1e-12));
}

TEST_CASE("tau is monotone in every geometric knob") {
    ExperimentConfig cfg;
    const double base = tau_of_frequency(0.5e12, cfg);
    CHECK(tau_of_frequency(0.6e12, cfg) > base);

    ExperimentConfig wider = cfg;
    wider.beam_diameter *= 1.2;
    CHECK(tau_of_frequency(0.5e12, wider) > base);

    ExperimentConfig denser = cfg;
    denser.thz_refractive_index += 0.3;
    CHECK(tau_of_frequency(0.5e12, denser) > base);

    ExperimentConfig steeper = cfg;
    steeper.idler_polar_angle += 0.1;
    CHECK(tau_of_frequency(0.5e12, steeper) > base);
}

TEST_CASE("gain models") {
    ExperimentConfig cfg;
    cfg.gain_ref = 0.5;
    cfg.gain_model = GainModel::fixed;
    CHECK(gain_of_frequency(1e12, cfg) == 0.5);
    CHECK(gain_of_frequency(1.7e12, cfg) == 0.5);

    cfg.gain_model = GainModel::pump_scaled;
    cfg.gain_ref_frequency = 1e12;
    CHECK(gain_of_frequency(2e12, cfg) == doctest::Approx(1.0).epsilon(1e-15));
    for (double g : {0.01, 0.37, 2.0}) {
        cfg.gain_ref = g;
        CHECK(gain_of_frequency(cfg.gain_ref_frequency, cfg) == doctest::Approx(g).epsilon(1e-15));
    }
}

TEST_CASE("bad frequencies and configs are rejected") {
    ExperimentConfig cfg;
    CHECK_THROWS_AS(tau_of_frequency(0.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(tau_of_frequency(-1e12, cfg), std::invalid_argument);

    cfg.gain_model = GainModel::pump_scaled;
    cfg.gain_ref_frequency = 0.0;
    CHECK_THROWS_AS(gain_of_frequency(1e12, cfg), std::invalid_argument);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    ExperimentConfig bad;
    bad.thz_refractive_index = 0.2;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = ExperimentConfig{};
    bad.beam_diameter = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("dimensionless point bundles tau and gain") {
    ExperimentConfig cfg;
    cfg.gain_ref = 0.25;
    const auto pt = dimensionless_point(0.5e12, cfg);
    CHECK(pt.f_thz == doctest::Approx(0.5));
    CHECK(pt.tau == doctest::Approx(tau_of_frequency(0.5e12, cfg)));
    CHECK(pt.gainLG == 0.25);
}

TEST_CASE("config file loading with unit suffixes") {
    const auto path = write_temp("thzmodes_cfg_test.conf",
                                 "# test configuration\n"
                                 "pump_wavelength = 523.3 nm\n"
                                 "crystal_length = 1 mm\n"
                                 "beam_diameter = 150 um\n"
                                 "idler_polar_angle = 60 deg\n"
                                 "thz_refractive_index = 5.20\n"
                                 "gain_ref = 0.25\n"
                                 "gain_model = pump_scaled\n"
                                 "gain_ref_frequency = 1 THz\n");
    const auto cfg = thzmodes::io::load_config(path);
    CHECK(cfg.pump_wavelength == doctest::Approx(523.3e-9).epsilon(1e-14));
    CHECK(cfg.crystal_length == doctest::Approx(1e-3).epsilon(1e-14));
    CHECK(cfg.beam_diameter == doctest::Approx(150e-6).epsilon(1e-14));
    CHECK(cfg.idler_polar_angle == doctest::Approx(60.0 * kPi / 180.0).epsilon(1e-14));
    CHECK(cfg.gain_model == GainModel::pump_scaled);
    CHECK(cfg.gain_ref_frequency == doctest::Approx(1e12).epsilon(1e-14));

    // halving the beam diameter quarters tau
    ExperimentConfig defaults;
    CHECK(tau_of_frequency(1e12, cfg)
          == doctest::Approx(0.25 * tau_of_frequency(1e12, defaults)).epsilon(1e-12));
}

TEST_CASE("config file loading from JSON") {
    const auto path = write_temp("thzmodes_cfg_test.json",
                                 "{\n"
                                 "  \"beam_diameter\": \"0.3 mm\",\n"
                                 "  \"gain_ref\": 0.125,\n"
                                 "  \"gain_model\": \"fixed\"\n"
                                 "}\n");
    const auto cfg = thzmodes::io::load_config(path);
    CHECK(cfg.beam_diameter == doctest::Approx(300e-6).epsilon(1e-14));
    CHECK(cfg.gain_ref == 0.125);
    // untouched fields keep their defaults
    CHECK(cfg.pump_wavelength == doctest::Approx(523.3e-9).epsilon(1e-14));
    CHECK(cfg.thz_refractive_index == 5.20);
}

TEST_CASE("unknown config keys and bad units are errors") {
    const auto path = write_temp("thzmodes_cfg_bad.conf", "beam_radius = 300 um\n");
    CHECK_THROWS_AS(thzmodes::io::load_config(path), std::invalid_argument);
    CHECK_THROWS_AS(thzmodes::io::parse_quantity("3 parsec"), std::invalid_argument);
    CHECK_THROWS_AS(thzmodes::io::parse_quantity("fast"), std::invalid_argument);
    CHECK(thzmodes::io::parse_quantity("2.5") == 2.5);
    CHECK(thzmodes::io::parse_quantity("90 deg") == doctest::Approx(kPi / 2).epsilon(1e-15));
}
