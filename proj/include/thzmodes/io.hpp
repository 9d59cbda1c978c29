#ifndef THZMODES_IO_HPP
#define THZMODES_IO_HPP

#include "thzmodes/physics.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace thzmodes::io {

/// Fixed 17-significant-digit scientific notation; doubles survive a
/// write/read round trip bit-exactly.
std::string format_double(double v);

/// Parse a number with an optional unit suffix (nm um mm cm m, THz GHz MHz
/// Hz, deg rad) into SI units.  Plain numbers pass through unchanged.
double parse_quantity(const std::string& text);

/// Load an ExperimentConfig from a JSON file ({"beam_diameter": "300 um",
/// ...}) or a plain-text file (beam_diameter = 300 um, '#' comments).
/// Unknown keys are an error; missing keys keep their defaults.
physics::ExperimentConfig load_config(const std::string& path);

/// In-memory CSV table; all data cells are doubles.
struct CsvTable {
    std::vector<std::string> headers;
    std::vector<std::vector<double>> rows;
};

/// Parse CSV with a header line.  Throws std::runtime_error naming the
/// 1-based row and column of the first malformed cell; an empty data
/// section is reported at row 2.
CsvTable read_csv(std::istream& in);

void write_csv(std::ostream& out, const std::vector<std::string>& headers,
               const std::vector<std::vector<double>>& columns);

/// One metadata record accompanying the output files of a CLI run.
struct RunMetadata {
    std::string version;
    std::string command;
    int chi = 1;
    physics::ExperimentConfig config;
    std::map<std::string, double> params; // per-run tau, n_max, grid, ...
    std::vector<std::string> files;
    double wall_time_s = 0.0;

    bool operator==(const RunMetadata&) const = default;
};

std::string to_json(const RunMetadata& meta);
RunMetadata metadata_from_json(const std::string& text);

} // namespace thzmodes::io

#endif
