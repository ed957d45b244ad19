#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wsn/types.hpp"

namespace wsn {

/**
 * Deployment and protocol parameters of one simulation run.
 *
 * Defaults describe the reference scenario: 100 sensors on a 100 x 100 m
 * field reporting to a single central sink, 1 J batteries, four transmit
 * power levels and a first-order radio energy model.
 */
struct SimConfig {
    double area_width = 100.0;
    double area_height = 100.0;
    int n_sensors = 100;
    std::vector<Position> sink_positions{{50.0, 50.0}};
    std::uint64_t seed = 1;
    double initial_energy = 1.0;
    /// Transmission range of each power level in meters, strictly increasing.
    std::vector<double> power_level_ranges{12.5, 25.0, 37.5, 50.0};
    int neighbor_limit = 3;
    /// Normalized residual energy below which a sensor stops relaying.
    double selfish_threshold = 0.05;
    int packet_bits = 1000;
    double e_elec = 50e-9;   // J/bit
    double eps_amp = 100e-12; // J/bit/m^2
    /// Documentation only; rounds abstract the reporting interval.
    double data_rate_bps = 20000.0;
    int snapshot_interval = 1;
    Round max_rounds = 1000000;

    double max_range() const { return power_level_ranges.back(); }

    friend bool operator==(const SimConfig &, const SimConfig &) = default;
};

/// A config value that is missing, malformed or out of its valid domain.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string &message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Throws ConfigError naming the first offending field.
void validate(const SimConfig &config);

/**
 * Parses the flat `key = value` config format.
 *
 * Blank lines, `#` comments and `[section]` headers are ignored. List
 * values are comma separated; sink positions are `x y` pairs separated by
 * `;` (e.g. `sink_positions = 50 50; 10 90`). Unset keys keep their
 * defaults. The result is validated.
 */
SimConfig parse_config(std::string_view text);
SimConfig load_config(const std::filesystem::path &path);

std::string format_config(const SimConfig &config);

void to_json(nlohmann::json &j, const SimConfig &config);
void from_json(const nlohmann::json &j, SimConfig &config);

} // namespace wsn
