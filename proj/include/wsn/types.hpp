#pragma once

#include <cstdint>
#include <string_view>

namespace wsn {

using NodeId = std::int64_t;
using Round = std::int64_t;

enum class Role { Sensor, Sink };

/// Operating state of a sensor. Sinks are always Normal.
enum class Mode { Normal, Selfish, Dead };

struct Position {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position &, const Position &) = default;
};

double distance(const Position &a, const Position &b);

std::string_view to_string(Role role);
std::string_view to_string(Mode mode);

// Both throw std::invalid_argument on unknown names.
Role parse_role(std::string_view text);
Mode parse_mode(std::string_view text);

} // namespace wsn
