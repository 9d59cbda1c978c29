// Command-line driver: mode galleries, K scans, intensity profiles, the
// oracle verification suite, and a small deterministic SVG plotter.

#include "thzmodes/coupling.hpp"
#include "thzmodes/decomp.hpp"
#include "thzmodes/io.hpp"
#include "thzmodes/oracle.hpp"
#include "thzmodes/physics.hpp"
#include "thzmodes/scan.hpp"
#include "thzmodes/scatter.hpp"
#include "thzmodes/svg.hpp"
#include "thzmodes/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace thzmodes;

namespace {

constexpr int kExitBadArgs = 2;
constexpr int kExitInvalidFrequency = 3;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
}

void write_metadata(const fs::path& dir, io::RunMetadata meta, double wall_s) {
    meta.version = kVersion;
    meta.wall_time_s = wall_s;
    write_file(dir / "meta.json", io::to_json(meta));
}

physics::ExperimentConfig resolve_config(const std::string& config_path, double gain,
                                         const std::string& gain_model) {
    physics::ExperimentConfig cfg;
    if (!config_path.empty())
        cfg = io::load_config(config_path);
    if (gain >= 0.0)
        cfg.gain_ref = gain;
    if (!gain_model.empty())
        cfg.gain_model = physics::gain_model_from_string(gain_model);
    cfg.validate();
    return cfg;
}

std::vector<double> parse_gain_list(const std::string& text) {
    std::vector<double> gains;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            gains.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--gains", "bad gain value '" + item + "'");
        }
        if (gains.back() < 0.0)
            throw CLI::ValidationError("--gains", "gains must be >= 0");
    }
    if (gains.empty())
        throw CLI::ValidationError("--gains", "empty gain list");
    return gains;
}

int run_modes(int chi_int, double freq_thz, double gain, int mode_count, int grid,
              const std::string& config_path, const std::string& out_dir, bool emit_svg) {
    Timer timer;
    scan::check_frequency_valid(freq_thz);
    auto cfg = resolve_config(config_path, gain, "");
    const auto chi = coupling::chi_from_int(chi_int);

    auto gallery = scan::mode_gallery(cfg, chi, freq_thz, mode_count, grid);
    const auto& dec = gallery.decomposition;
    const int modes = static_cast<int>(gallery.idler.values.size());

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);

    {
        std::ostringstream s;
        decomp::ModeDecomposition top = dec; // trim the value table to the gallery modes
        top.values.resize(static_cast<std::size_t>(modes));
        top.parity.resize(static_cast<std::size_t>(modes));
        decomp::write_values_csv(top, s);
        write_file(dir / "eigenvalues.csv", s.str());
    }
    for (auto side : {decomp::Side::idler, decomp::Side::signal}) {
        const auto& curves = side == decomp::Side::idler ? gallery.idler : gallery.signal;
        std::vector<std::string> headers = {"phi_rad"};
        std::vector<std::vector<double>> columns = {curves.phi};
        for (int j = 0; j < modes; ++j) {
            headers.push_back("curve_" + std::to_string(j));
            columns.push_back(curves.curves[static_cast<std::size_t>(j)]);
        }
        std::ostringstream s;
        io::write_csv(s, headers, columns);
        write_file(dir / (side == decomp::Side::idler ? "modes_idler.csv" : "modes_signal.csv"),
                   s.str());
    }
    if (emit_svg) {
        std::vector<svg::Series> series;
        for (int j = 0; j < modes; ++j)
            series.push_back(svg::Series{"curve_" + std::to_string(j), gallery.idler.phi,
                                         gallery.idler.curves[static_cast<std::size_t>(j)]});
        std::ostringstream s;
        svg::write_line_chart(s, svg::ChartSpec{"azimuthal eigenmodes", "phi [rad]", "I_j"},
                              series);
        write_file(dir / "modes.svg", s.str());
    }

    io::RunMetadata meta;
    meta.command = "modes";
    meta.chi = chi_int;
    meta.config = cfg;
    meta.params = {{"f_thz", freq_thz},
                   {"gainLG", gallery.gainLG},
                   {"tau", gallery.tau},
                   {"n_max", static_cast<double>(gallery.n_max)},
                   {"grid", static_cast<double>(gallery.idler.phi.size())},
                   {"modes", static_cast<double>(modes)}};
    meta.files = {"eigenvalues.csv", "modes_idler.csv", "modes_signal.csv"};
    if (emit_svg)
        meta.files.push_back("modes.svg");
    write_metadata(dir, meta, timer.seconds());
    return 0;
}

int run_scan(int chi_int, double freq_min, double freq_max, int steps,
             const std::string& gains_text, const std::string& gain_model,
             const std::string& config_path, const std::string& out_dir) {
    Timer timer;
    const auto gains = parse_gain_list(gains_text);
    auto cfg = resolve_config(config_path, -1.0, gain_model);
    const auto chi = coupling::chi_from_int(chi_int);
    if (steps < 1)
        throw CLI::ValidationError("--steps", "need at least one step");
    scan::check_frequency_valid(freq_min);
    scan::check_frequency_valid(freq_max);
    if (freq_max < freq_min)
        throw CLI::ValidationError("--freq-max", "must be >= --freq-min");

    std::vector<double> freqs;
    for (int i = 0; i < steps; ++i)
        freqs.push_back(steps == 1 ? freq_min
                                   : freq_min + (freq_max - freq_min) * i / (steps - 1.0));

    const auto result = scan::scan_k(cfg, chi, freqs, gains);

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    std::vector<std::vector<double>> cols(6);
    for (const auto& r : result.rows) {
        cols[0].push_back(r.f_thz);
        cols[1].push_back(r.gainLG);
        cols[2].push_back(r.tau);
        cols[3].push_back(static_cast<double>(r.n_max));
        cols[4].push_back(r.k_eff);
        cols[5].push_back(r.schmidt_k);
    }
    std::ostringstream s;
    io::write_csv(s, {"f_THz", "gainLG", "tau", "n_max", "K", "schmidt_K"}, cols);
    write_file(dir / "k_scan.csv", s.str());

    io::RunMetadata meta;
    meta.command = "scan";
    meta.chi = chi_int;
    meta.config = cfg;
    meta.params = {{"freq_min_thz", freq_min},
                   {"freq_max_thz", freq_max},
                   {"steps", static_cast<double>(steps)},
                   {"gain_count", static_cast<double>(gains.size())},
                   {"tau_max", result.rows.empty() ? 0.0 : result.rows.back().tau},
                   {"n_max_max", result.rows.empty() ? 0.0
                                                     : static_cast<double>(result.rows.back().n_max)}};
    meta.files = {"k_scan.csv"};
    write_metadata(dir, meta, timer.seconds());
    return 0;
}

int run_intensity(int chi_int, double freq_thz, double gain, int mode_count, int grid,
                  const std::string& config_path, const std::string& out_dir) {
    Timer timer;
    scan::check_frequency_valid(freq_thz);
    auto cfg = resolve_config(config_path, gain, "");
    const auto chi = coupling::chi_from_int(chi_int);

    const double f_hz = freq_thz * 1e12;
    const double tau = physics::tau_of_frequency(f_hz, cfg);
    const int n_max = coupling::truncation_order(tau, 1e-12);
    const auto dec = decomp::decompose(coupling::build(chi, tau, n_max));
    const auto gs = scatter::bogolyubov_gains(dec, physics::gain_of_frequency(f_hz, cfg));
    const int n_grid = std::max(grid, 4 * n_max);
    const int per_mode = std::min(mode_count, dec.mode_count());
    const auto profile = scatter::intensity(dec, gs, decomp::Side::idler, n_grid, per_mode);

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    std::vector<std::string> headers = {"phi_rad", "total"};
    std::vector<std::vector<double>> columns = {profile.phi, profile.total};
    for (int j = 0; j < per_mode; ++j) {
        headers.push_back("mode_" + std::to_string(j));
        columns.push_back(profile.per_mode[static_cast<std::size_t>(j)]);
    }
    std::ostringstream s;
    io::write_csv(s, headers, columns);
    write_file(dir / "intensity.csv", s.str());

    io::RunMetadata meta;
    meta.command = "intensity";
    meta.chi = chi_int;
    meta.config = cfg;
    meta.params = {{"f_thz", freq_thz},
                   {"gainLG", gs.gainLG},
                   {"tau", tau},
                   {"n_max", static_cast<double>(n_max)},
                   {"grid", static_cast<double>(n_grid)},
                   {"modes", static_cast<double>(per_mode)}};
    meta.files = {"intensity.csv"};
    write_metadata(dir, meta, timer.seconds());
    return 0;
}

int run_verify(const std::string& level_text, double inject, const std::string& json_path) {
    const auto level = level_text == "full" ? oracle::VerifyLevel::full : oracle::VerifyLevel::quick;
    const auto checks = oracle::run_verify(level, inject);

    std::size_t name_width = 4;
    for (const auto& c : checks)
        name_width = std::max(name_width, c.name.size());
    bool all_pass = true;
    std::printf("%-*s  %12s  %12s  %s\n", static_cast<int>(name_width), "check", "residual",
                "tolerance", "status");
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        std::printf("%-*s  %12.3e  %12.3e  %s\n", static_cast<int>(name_width), c.name.c_str(),
                    c.residual, c.tolerance, c.pass ? "ok" : "FAIL");
    }
    std::printf("verify: %zu checks, %s\n", checks.size(), all_pass ? "all ok" : "FAILURES");
    if (!all_pass) {
        for (const auto& c : checks)
            if (!c.pass)
                std::printf("verify: failed check: %s (residual %.3e > tolerance %.3e)\n",
                            c.name.c_str(), c.residual, c.tolerance);
    }

    if (!json_path.empty()) {
        nlohmann::json j;
        j["version"] = kVersion;
        j["level"] = level_text;
        j["pass"] = all_pass;
        auto& arr = j["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
        write_file(json_path, j.dump(2) + "\n");
    }
    return all_pass ? 0 : 1;
}

int run_plot(const std::string& in_path, const std::string& kind, const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in)
        throw std::runtime_error("cannot open '" + in_path + "'");
    const auto table = io::read_csv(in);

    std::vector<svg::Series> series;
    svg::ChartSpec spec;
    if (kind == "modes") {
        // column 0 is the phi axis; one series per remaining column
        spec = svg::ChartSpec{"azimuthal modes", table.headers[0], "intensity"};
        for (std::size_t c = 1; c < table.headers.size(); ++c) {
            svg::Series s;
            s.label = table.headers[c];
            for (const auto& row : table.rows) {
                s.x.push_back(row[0]);
                s.y.push_back(row[c]);
            }
            series.push_back(std::move(s));
        }
    } else if (kind == "kscan") {
        // k_scan.csv schema: group rows by gainLG, plot K against frequency
        spec = svg::ChartSpec{"effective mode number", "f [THz]", "K"};
        std::map<double, svg::Series> by_gain;
        for (const auto& row : table.rows) {
            auto& s = by_gain[row[1]];
            s.x.push_back(row[0]);
            s.y.push_back(row[4]);
        }
        for (auto& [gain, s] : by_gain) {
            char label[48];
            std::snprintf(label, sizeof(label), "gainLG=%g", gain);
            s.label = label;
            series.push_back(std::move(s));
        }
    } else {
        throw CLI::ValidationError("--kind", "expected 'modes' or 'kscan'");
    }
    if (series.empty())
        throw std::runtime_error("plot: no data series in '" + in_path + "'");

    std::ostringstream s;
    svg::write_line_chart(s, spec, series);
    write_file(out_path, s.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"azimuthal eigenmode simulator for strongly non-degenerate "
                 "parametric down-conversion (terahertz idler)"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // modes
    auto* modes = app.add_subcommand("modes", "eigenvalue table and shifted mode curves at one frequency");
    int chi = 1;
    double freq = 0.1, gain = -1.0;
    int mode_count = 8, grid = 512;
    std::string config_path, out_dir = ".", plot_kind, in_path, out_path;
    bool emit_svg = false;
    modes->add_option("--chi", chi, "susceptibility variant (1 or 2)")->check(CLI::IsMember({1, 2}));
    modes->add_option("--freq", freq, "idler frequency in THz")->required();
    modes->add_option("--gain", gain, "dimensionless gain gainLG")->check(CLI::NonNegativeNumber);
    modes->add_option("--modes", mode_count, "number of modes to emit");
    modes->add_option("--grid", grid, "azimuthal grid size");
    modes->add_option("--config", config_path, "config file (JSON or key=value)");
    modes->add_option("--out", out_dir, "output directory");
    modes->add_flag("--svg", emit_svg, "also write modes.svg");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "K and Schmidt number over a frequency/gain grid");
    double freq_min = 0.2, freq_max = 2.0;
    int steps = 10;
    std::string gains_text = "0.01", gain_model;
    scan_cmd->add_option("--chi", chi, "susceptibility variant (1 or 2)")->check(CLI::IsMember({1, 2}));
    scan_cmd->add_option("--freq-min", freq_min, "lowest frequency in THz")->required();
    scan_cmd->add_option("--freq-max", freq_max, "highest frequency in THz")->required();
    scan_cmd->add_option("--steps", steps, "number of frequency points");
    scan_cmd->add_option("--gains", gains_text, "comma-separated gain list");
    scan_cmd->add_option("--gain-model", gain_model, "fixed or pump-scaled")
        ->check(CLI::IsMember({"fixed", "pump-scaled"}));
    scan_cmd->add_option("--config", config_path, "config file");
    scan_cmd->add_option("--out", out_dir, "output directory");

    // intensity
    auto* intensity_cmd = app.add_subcommand("intensity", "total angular intensity profile");
    intensity_cmd->add_option("--chi", chi, "susceptibility variant (1 or 2)")->check(CLI::IsMember({1, 2}));
    intensity_cmd->add_option("--freq", freq, "idler frequency in THz")->required();
    intensity_cmd->add_option("--gain", gain, "dimensionless gain gainLG")->check(CLI::NonNegativeNumber);
    intensity_cmd->add_option("--modes", mode_count, "per-mode columns to emit");
    intensity_cmd->add_option("--grid", grid, "azimuthal grid size");
    intensity_cmd->add_option("--config", config_path, "config file");
    intensity_cmd->add_option("--out", out_dir, "output directory");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the brute-force oracle cross-checks");
    std::string level = "quick", verify_json;
    double inject = 0.0;
    verify_cmd->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--json", verify_json, "also write a JSON report to this path");
    verify_cmd->add_option("--inject", inject, "fault-injection test hook")->group(""); // hidden

    // plot
    auto* plot_cmd = app.add_subcommand("plot", "render a CSV produced by this tool as SVG");
    plot_cmd->add_option("--in", in_path, "input CSV")->required();
    plot_cmd->add_option("--kind", plot_kind, "modes or kscan")
        ->required()
        ->check(CLI::IsMember({"modes", "kscan"}));
    plot_cmd->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (*modes)
            return run_modes(chi, freq, gain, mode_count, grid, config_path, out_dir, emit_svg);
        if (*scan_cmd)
            return run_scan(chi, freq_min, freq_max, steps, gains_text, gain_model, config_path,
                            out_dir);
        if (*intensity_cmd)
            return run_intensity(chi, freq, gain, mode_count, grid, config_path, out_dir);
        if (*verify_cmd)
            return run_verify(level, inject, verify_json);
        if (*plot_cmd)
            return run_plot(in_path, plot_kind, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        const std::string what = e.what();
        return what.find("validity") != std::string::npos ? kExitInvalidFrequency : kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
