#include "wsn/config.hpp"

#include <fstream>
#include <limits>
#include <functional>
#include <map>
#include <sstream>

#include "wsn/format.hpp"

namespace wsn {

namespace {

double to_double(const std::string &field, std::string_view text) {
    auto value = parse_double(text);
    if (!value)
        throw ConfigError(field, "expected a number, got '" + std::string(trim(text)) + "'");
    return *value;
}

long long to_integer(const std::string &field, std::string_view text) {
    auto value = parse_integer(text);
    if (!value)
        throw ConfigError(field, "expected an integer, got '" + std::string(trim(text)) + "'");
    return *value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

std::vector<double> to_double_list(const std::string &field, std::string_view text) {
    std::vector<double> values;
    for (auto part : split(text, ','))
        values.push_back(to_double(field, part));
    return values;
}

std::vector<Position> to_positions(const std::string &field, std::string_view text) {
    std::vector<Position> positions;
    for (auto part : split(text, ';')) {
        if (part.empty())
            continue;
        std::istringstream in{std::string(part)};
        std::string xs, ys, rest;
        in >> xs >> ys;
        if (xs.empty() || ys.empty() || (in >> rest))
            throw ConfigError(field, "expected 'x y' pairs separated by ';'");
        positions.push_back({to_double(field, xs), to_double(field, ys)});
    }
    return positions;
}

template <typename Int> Int narrow(const std::string &field, long long value) {
    if (value < static_cast<long long>(std::numeric_limits<Int>::min()) ||
        value > static_cast<long long>(std::numeric_limits<Int>::max()))
        throw ConfigError(field, "value out of range");
    return static_cast<Int>(value);
}

using Setter = std::function<void(SimConfig &, const std::string &, std::string_view)>;

const std::map<std::string, Setter> &setters() {
    static const std::map<std::string, Setter> table = {
        {"area_width", [](SimConfig &c, const std::string &f, std::string_view v) { c.area_width = to_double(f, v); }},
        {"area_height", [](SimConfig &c, const std::string &f, std::string_view v) { c.area_height = to_double(f, v); }},
        {"n_sensors", [](SimConfig &c, const std::string &f, std::string_view v) { c.n_sensors = narrow<int>(f, to_integer(f, v)); }},
        {"sink_positions", [](SimConfig &c, const std::string &f, std::string_view v) { c.sink_positions = to_positions(f, v); }},
        {"seed",
         [](SimConfig &c, const std::string &f, std::string_view v) {
             auto value = to_integer(f, v);
             if (value < 0)
                 throw ConfigError(f, "must be non-negative");
             c.seed = static_cast<std::uint64_t>(value);
         }},
        {"initial_energy", [](SimConfig &c, const std::string &f, std::string_view v) { c.initial_energy = to_double(f, v); }},
        {"power_level_ranges", [](SimConfig &c, const std::string &f, std::string_view v) { c.power_level_ranges = to_double_list(f, v); }},
        {"neighbor_limit", [](SimConfig &c, const std::string &f, std::string_view v) { c.neighbor_limit = narrow<int>(f, to_integer(f, v)); }},
        {"selfish_threshold", [](SimConfig &c, const std::string &f, std::string_view v) { c.selfish_threshold = to_double(f, v); }},
        {"packet_bits", [](SimConfig &c, const std::string &f, std::string_view v) { c.packet_bits = narrow<int>(f, to_integer(f, v)); }},
        {"e_elec", [](SimConfig &c, const std::string &f, std::string_view v) { c.e_elec = to_double(f, v); }},
        {"eps_amp", [](SimConfig &c, const std::string &f, std::string_view v) { c.eps_amp = to_double(f, v); }},
        {"data_rate_bps", [](SimConfig &c, const std::string &f, std::string_view v) { c.data_rate_bps = to_double(f, v); }},
        {"snapshot_interval", [](SimConfig &c, const std::string &f, std::string_view v) { c.snapshot_interval = narrow<int>(f, to_integer(f, v)); }},
        {"max_rounds", [](SimConfig &c, const std::string &f, std::string_view v) { c.max_rounds = to_integer(f, v); }},
    };
    return table;
}

} // namespace

void validate(const SimConfig &c) {
    if (!(c.area_width > 0.0))
        throw ConfigError("area_width", "must be positive");
    if (!(c.area_height > 0.0))
        throw ConfigError("area_height", "must be positive");
    if (c.n_sensors < 0)
        throw ConfigError("n_sensors", "must be non-negative");
    if (c.sink_positions.empty())
        throw ConfigError("sink_positions", "at least one sink is required");
    for (const auto &p : c.sink_positions)
        if (!(p.x >= 0.0 && p.x <= c.area_width && p.y >= 0.0 && p.y <= c.area_height))
            throw ConfigError("sink_positions", "sink lies outside the deployment area");
    if (!(c.initial_energy > 0.0))
        throw ConfigError("initial_energy", "must be positive");
    if (c.power_level_ranges.empty())
        throw ConfigError("power_level_ranges", "at least one power level is required");
    for (std::size_t i = 0; i < c.power_level_ranges.size(); ++i) {
        double r = c.power_level_ranges[i];
        if (!(r >= 10.0 && r <= 50.0))
            throw ConfigError("power_level_ranges", "each range must lie in [10, 50] m");
        if (i > 0 && !(r > c.power_level_ranges[i - 1]))
            throw ConfigError("power_level_ranges", "ranges must be strictly increasing");
    }
    if (c.neighbor_limit < 1)
        throw ConfigError("neighbor_limit", "must be at least 1");
    if (!(c.selfish_threshold > 0.0 && c.selfish_threshold < 1.0))
        throw ConfigError("selfish_threshold", "must lie strictly between 0 and 1");
    if (c.packet_bits < 1)
        throw ConfigError("packet_bits", "must be positive");
    if (!(c.e_elec >= 0.0))
        throw ConfigError("e_elec", "must be non-negative");
    if (!(c.eps_amp >= 0.0))
        throw ConfigError("eps_amp", "must be non-negative");
    if (!(c.e_elec + c.eps_amp > 0.0))
        throw ConfigError("e_elec", "radio model must charge a positive cost per bit");
    if (!(c.data_rate_bps > 0.0))
        throw ConfigError("data_rate_bps", "must be positive");
    if (c.snapshot_interval < 1)
        throw ConfigError("snapshot_interval", "must be at least 1");
    if (c.max_rounds < 0)
        throw ConfigError("max_rounds", "must be non-negative");
}

SimConfig parse_config(std::string_view text) {
    SimConfig config;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '[')
            continue;
        auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(std::string(view), "expected 'key = value'");
        std::string key(trim(view.substr(0, eq)));
        std::string_view value = trim(view.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        auto it = setters().find(key);
        if (it == setters().end())
            throw ConfigError(key, "unknown key");
        it->second(config, key, value);
    }
    validate(config);
    return config;
}

SimConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("config", "cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string format_config(const SimConfig &c) {
    std::ostringstream out;
    auto list = [](const std::vector<double> &values) {
        std::string s;
        for (std::size_t i = 0; i < values.size(); ++i)
            s += (i ? ", " : "") + format_double(values[i]);
        return s;
    };
    std::string sinks;
    for (std::size_t i = 0; i < c.sink_positions.size(); ++i)
        sinks += (i ? "; " : "") + format_double(c.sink_positions[i].x) + " " + format_double(c.sink_positions[i].y);
    out << "area_width = " << format_double(c.area_width) << '\n'
        << "area_height = " << format_double(c.area_height) << '\n'
        << "n_sensors = " << c.n_sensors << '\n'
        << "sink_positions = " << sinks << '\n'
        << "seed = " << c.seed << '\n'
        << "initial_energy = " << format_double(c.initial_energy) << '\n'
        << "power_level_ranges = " << list(c.power_level_ranges) << '\n'
        << "neighbor_limit = " << c.neighbor_limit << '\n'
        << "selfish_threshold = " << format_double(c.selfish_threshold) << '\n'
        << "packet_bits = " << c.packet_bits << '\n'
        << "e_elec = " << format_double(c.e_elec) << '\n'
        << "eps_amp = " << format_double(c.eps_amp) << '\n'
        << "data_rate_bps = " << format_double(c.data_rate_bps) << '\n'
        << "snapshot_interval = " << c.snapshot_interval << '\n'
        << "max_rounds = " << c.max_rounds << '\n';
    return out.str();
}

void to_json(nlohmann::json &j, const SimConfig &c) {
    nlohmann::json sinks = nlohmann::json::array();
    for (const auto &p : c.sink_positions)
        sinks.push_back({p.x, p.y});
    j = nlohmann::json{{"area_width", c.area_width},
                       {"area_height", c.area_height},
                       {"n_sensors", c.n_sensors},
                       {"sink_positions", sinks},
                       {"seed", c.seed},
                       {"initial_energy", c.initial_energy},
                       {"power_level_ranges", c.power_level_ranges},
                       {"neighbor_limit", c.neighbor_limit},
                       {"selfish_threshold", c.selfish_threshold},
                       {"packet_bits", c.packet_bits},
                       {"e_elec", c.e_elec},
                       {"eps_amp", c.eps_amp},
                       {"data_rate_bps", c.data_rate_bps},
                       {"snapshot_interval", c.snapshot_interval},
                       {"max_rounds", c.max_rounds}};
}

void from_json(const nlohmann::json &j, SimConfig &c) {
    c = SimConfig{};
    j.at("area_width").get_to(c.area_width);
    j.at("area_height").get_to(c.area_height);
    j.at("n_sensors").get_to(c.n_sensors);
    c.sink_positions.clear();
    for (const auto &p : j.at("sink_positions"))
        c.sink_positions.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    j.at("seed").get_to(c.seed);
    j.at("initial_energy").get_to(c.initial_energy);
    j.at("power_level_ranges").get_to(c.power_level_ranges);
    j.at("neighbor_limit").get_to(c.neighbor_limit);
    j.at("selfish_threshold").get_to(c.selfish_threshold);
    j.at("packet_bits").get_to(c.packet_bits);
    j.at("e_elec").get_to(c.e_elec);
    j.at("eps_amp").get_to(c.eps_amp);
    j.at("data_rate_bps").get_to(c.data_rate_bps);
    j.at("snapshot_interval").get_to(c.snapshot_interval);
    j.at("max_rounds").get_to(c.max_rounds);
}

} // namespace wsn
