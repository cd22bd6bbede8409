#ifndef SPOOFSIM_CONFIG_HPP
#define SPOOFSIM_CONFIG_HPP

#include "spoofsim/scenario.hpp"
#include "spoofsim/estimator.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spoofsim {

/// Raised for malformed configuration input; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a run requires delay alignment and the scene violates the
/// alignment condition; the CLI maps it to exit code 3.
struct InfeasibleSceneError : std::runtime_error {
    explicit InfeasibleSceneError(const std::string& what) : std::runtime_error(what) {}
};

/// Flat key-value configuration with the experiment defaults baked in.
/// Power-like quantities are configured in dB units and converted to linear
/// exactly once, inside scene().
class Config {
public:
    Config(); // defaults

    /// Parses `key = value` lines ('#' comments). Unknown keys and malformed
    /// lines raise ConfigError with a line diagnostic.
    void load_file(const std::string& path);

    /// Applies one `key=value` override (CLI precedence over file).
    void set(const std::string& assignment);
    void set(const std::string& key, const std::string& value);

    double number(const std::string& key) const;
    int integer(const std::string& key) const;
    std::string text(const std::string& key) const;
    std::vector<double> number_list(const std::string& key) const;

    /// Builds the scene from the resolved values (dB -> linear here).
    Scene scene() const;
    AngleGrid angle_grid() const;

    std::uint64_t seed() const { return static_cast<std::uint64_t>(integer("run.seed")); }
    int trials() const { return integer("run.trials"); }
    double grid_hz() const { return number("run.grid_hz"); }

    /// Resolved configuration as "key=value" lines in key order; embedding
    /// this block in an output header is sufficient to re-run the experiment.
    std::vector<std::string> dump() const;

    static double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }
    static double dbsm_to_m2(double dbsm) { return std::pow(10.0, dbsm / 10.0); }

private:
    std::map<std::string, std::string> values_;
};

} // namespace spoofsim

#endif
