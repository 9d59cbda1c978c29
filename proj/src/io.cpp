#include "thzmodes/io.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace thzmodes::io {

namespace {

using nlohmann::json;

const std::map<std::string, double>& unit_table() {
    static const std::map<std::string, double> table = {
        {"nm", 1e-9}, {"um", 1e-6}, {"mm", 1e-3}, {"cm", 1e-2}, {"m", 1.0},
        {"THz", 1e12}, {"GHz", 1e9}, {"MHz", 1e6}, {"Hz", 1.0},
        {"deg", physics::kPi / 180.0}, {"rad", 1.0},
    };
    return table;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

void apply_config_key(physics::ExperimentConfig& cfg, const std::string& key,
                      const std::string& value) {
    if (key == "pump_wavelength")
        cfg.pump_wavelength = parse_quantity(value);
    else if (key == "crystal_length")
        cfg.crystal_length = parse_quantity(value);
    else if (key == "beam_diameter")
        cfg.beam_diameter = parse_quantity(value);
    else if (key == "idler_polar_angle")
        cfg.idler_polar_angle = parse_quantity(value);
    else if (key == "thz_refractive_index")
        cfg.thz_refractive_index = parse_quantity(value);
    else if (key == "gain_ref")
        cfg.gain_ref = parse_quantity(value);
    else if (key == "gain_model")
        cfg.gain_model = physics::gain_model_from_string(trim(value));
    else if (key == "gain_ref_frequency")
        cfg.gain_ref_frequency = parse_quantity(value);
    else
        throw std::invalid_argument("config: unknown key '" + key + "'");
}

json config_to_json(const physics::ExperimentConfig& cfg) {
    return json{{"pump_wavelength", cfg.pump_wavelength},
                {"crystal_length", cfg.crystal_length},
                {"beam_diameter", cfg.beam_diameter},
                {"idler_polar_angle", cfg.idler_polar_angle},
                {"thz_refractive_index", cfg.thz_refractive_index},
                {"gain_ref", cfg.gain_ref},
                {"gain_model", physics::to_string(cfg.gain_model)},
                {"gain_ref_frequency", cfg.gain_ref_frequency}};
}

physics::ExperimentConfig config_from_json_object(const json& j) {
    physics::ExperimentConfig cfg;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_string())
            apply_config_key(cfg, it.key(), it.value().get<std::string>());
        else if (it.value().is_number())
            apply_config_key(cfg, it.key(), format_double(it.value().get<double>()));
        else
            throw std::invalid_argument("config: value for '" + it.key()
                                        + "' must be a number or a unit-suffixed string");
    }
    return cfg;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

double parse_quantity(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty())
        throw std::invalid_argument("empty quantity");
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse quantity '" + text + "'");
    }
    const std::string suffix = trim(s.substr(pos));
    if (suffix.empty())
        return value;
    const auto it = unit_table().find(suffix);
    if (it == unit_table().end())
        throw std::invalid_argument("unknown unit '" + suffix + "' in '" + text + "'");
    return value * it->second;
}

physics::ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();

    const std::string lead = trim(content);
    if (!lead.empty() && lead.front() == '{') {
        json j = json::parse(content);
        auto cfg = config_from_json_object(j);
        cfg.validate();
        return cfg;
    }

    physics::ExperimentConfig cfg;
    std::istringstream lines(content);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno)
                                        + ": expected 'key = value'");
        apply_config_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    cfg.validate();
    return cfg;
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("csv: missing header at row 1");
    std::stringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ','))
        table.headers.push_back(trim(cell));
    if (table.headers.empty())
        throw std::runtime_error("csv: empty header at row 1");

    int row_number = 1;
    while (std::getline(in, line)) {
        ++row_number;
        if (trim(line).empty())
            continue;
        std::stringstream row_stream(line);
        std::vector<double> row;
        int col = 0;
        while (std::getline(row_stream, cell, ',')) {
            ++col;
            const std::string v = trim(cell);
            try {
                std::size_t pos = 0;
                row.push_back(std::stod(v, &pos));
                if (pos != v.size())
                    throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw std::runtime_error("csv: bad value at row " + std::to_string(row_number)
                                         + ", column " + std::to_string(col));
            }
        }
        if (row.size() != table.headers.size())
            throw std::runtime_error("csv: row " + std::to_string(row_number) + " has "
                                     + std::to_string(row.size()) + " cells, expected "
                                     + std::to_string(table.headers.size()));
        table.rows.push_back(std::move(row));
    }
    if (table.rows.empty())
        throw std::runtime_error("csv: empty data section at row 2");
    return table;
}

void write_csv(std::ostream& out, const std::vector<std::string>& headers,
               const std::vector<std::vector<double>>& columns) {
    if (columns.size() != headers.size())
        throw std::invalid_argument("write_csv: header/column count mismatch");
    for (std::size_t c = 0; c < headers.size(); ++c)
        out << (c ? "," : "") << headers[c];
    out << "\n";
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& col : columns)
        if (col.size() != rows)
            throw std::invalid_argument("write_csv: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << (c ? "," : "") << format_double(columns[c][r]);
        out << "\n";
    }
}

std::string to_json(const RunMetadata& meta) {
    json j{{"version", meta.version},
           {"command", meta.command},
           {"chi", meta.chi},
           {"config", config_to_json(meta.config)},
           {"params", meta.params},
           {"files", meta.files},
           {"wall_time_s", meta.wall_time_s}};
    return j.dump(2) + "\n";
}

RunMetadata metadata_from_json(const std::string& text) {
    const json j = json::parse(text);
    RunMetadata meta;
    meta.version = j.at("version").get<std::string>();
    meta.command = j.at("command").get<std::string>();
    meta.chi = j.at("chi").get<int>();
    meta.config = config_from_json_object(j.at("config"));
    meta.params = j.at("params").get<std::map<std::string, double>>();
    meta.files = j.at("files").get<std::vector<std::string>>();
    meta.wall_time_s = j.at("wall_time_s").get<double>();
    return meta;
}

} // namespace thzmodes::io
