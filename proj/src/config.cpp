#include "spoofsim/config.hpp"
#include "spoofsim/constants.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spoofsim {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Config::Config() {
    // Experiment defaults: vehicle 40 m at 135 deg, RIS 30 m at 90 deg.
    const double dv = 40.0, thv = deg2rad(135.0);
    const double dr = 30.0, thr = deg2rad(90.0);
    values_ = {
        {"rsu.tx_antennas", "32"},
        {"rsu.rx_antennas", "32"},
        {"rsu.power_dbm", "30"},
        {"rsu.noise_dbm", "-130"},
        {"rsu.carrier_hz", "28e9"},
        {"rsu.beam_deg", "90"},
        {"rsu.epoch_s", "0.010"},
        {"vu.x_m", format_number(dv * std::cos(thv))},
        {"vu.y_m", format_number(dv * std::sin(thv))},
        {"vu.speed_mps", "10"},
        {"vu.rcs_dbsm", "7"},
        {"ris.x_m", format_number(dr * std::cos(thr))},
        {"ris.y_m", format_number(dr * std::sin(thr))},
        {"ris.elements", "32"},
        {"ris.efficiency", "0.8"},
        {"ris.area_m2", "0.05"},
        {"ris.interval_s", "0.001"},
        {"ris.max_delay_s", "1e-6"},
        {"spoof.frequency_hz", "500"},
        {"surface.noise", "0"},
        {"run.seed", "1"},
        {"run.trials", "2000"},
        {"run.grid_hz", "1"},
        {"mle.angle_min_deg", "1"},
        {"mle.angle_max_deg", "179"},
        {"mle.angle_step_deg", "0.05"},
        {"mle.refine_step_deg", "0.005"},
        {"fig3.theta_min_deg", "60"},
        {"fig3.theta_max_deg", "160"},
        {"fig3.theta_step_deg", "1"},
        {"fig4.m_values", "1,2,4,8,12,16,20,24,28,32,40,48,56,64"},
        {"fig4.theta_list", "90,110,130,135,155"},
        {"fig5.dmu_step_hz", "20"},
        {"fig5.theta_list", "130,135"},
    };
}

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (values_.find(key) == values_.end())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (value.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty value for '" + key + "'");
        values_[key] = value;
    }
}

void Config::set(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override must have the form key=value: " + assignment);
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void Config::set(const std::string& key, const std::string& value) {
    if (values_.find(key) == values_.end())
        throw ConfigError("unknown key '" + key + "'");
    if (value.empty())
        throw ConfigError("empty value for '" + key + "'");
    values_[key] = value;
}

double Config::number(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw ConfigError("unknown key '" + key + "'");
    try {
        size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size())
            throw ConfigError("");
        return v;
    } catch (...) {
        throw ConfigError("field '" + key + "': not a number: '" + it->second + "'");
    }
}

int Config::integer(const std::string& key) const {
    const double v = number(key);
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
        throw ConfigError("field '" + key + "': expected an integer");
    return static_cast<int>(r);
}

std::string Config::text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw ConfigError("unknown key '" + key + "'");
    return it->second;
}

std::vector<double> Config::number_list(const std::string& key) const {
    const std::string raw = text(key);
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            continue;
        try {
            out.push_back(std::stod(item));
        } catch (...) {
            throw ConfigError("field '" + key + "': bad list entry '" + item + "'");
        }
    }
    if (out.empty())
        throw ConfigError("field '" + key + "': empty list");
    return out;
}

Scene Config::scene() const {
    RsuConfig rsu;
    rsu.n_t = integer("rsu.tx_antennas");
    rsu.n_r = integer("rsu.rx_antennas");
    rsu.power_w = dbm_to_watt(number("rsu.power_dbm"));
    rsu.noise_w = dbm_to_watt(number("rsu.noise_dbm"));
    rsu.carrier_hz = number("rsu.carrier_hz");
    rsu.beam_deg = number("rsu.beam_deg");
    rsu.epoch_s = number("rsu.epoch_s");

    VehicleTarget vu;
    vu.x_m = number("vu.x_m");
    vu.y_m = number("vu.y_m");
    vu.speed_mps = number("vu.speed_mps");
    vu.rcs_m2 = dbsm_to_m2(number("vu.rcs_dbsm"));

    RisConfig ris;
    ris.x_m = number("ris.x_m");
    ris.y_m = number("ris.y_m");
    ris.elements = integer("ris.elements");
    ris.efficiency = number("ris.efficiency");
    ris.area_m2 = number("ris.area_m2");
    ris.interval_s = number("ris.interval_s");
    ris.max_delay_s = number("ris.max_delay_s");

    try {
        return build_scene(rsu, vu, ris);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid scene: ") + e.what());
    }
}

AngleGrid Config::angle_grid() const {
    AngleGrid g;
    g.lo_deg = number("mle.angle_min_deg");
    g.hi_deg = number("mle.angle_max_deg");
    g.step_deg = number("mle.angle_step_deg");
    g.refine_step_deg = number("mle.refine_step_deg");
    return g;
}

std::vector<std::string> Config::dump() const {
    std::vector<std::string> lines;
    lines.reserve(values_.size());
    for (const auto& kv : values_)
        lines.push_back(kv.first + "=" + kv.second);
    return lines;
}

} // namespace spoofsim
