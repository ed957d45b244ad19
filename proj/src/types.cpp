#include "wsn/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wsn {

double distance(const Position &a, const Position &b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::string_view to_string(Role role) { return role == Role::Sink ? "sink" : "sensor"; }

std::string_view to_string(Mode mode) {
    switch (mode) {
    case Mode::Normal:
        return "normal";
    case Mode::Selfish:
        return "selfish";
    case Mode::Dead:
        return "dead";
    }
    return "normal";
}

Role parse_role(std::string_view text) {
    if (text == "sensor")
        return Role::Sensor;
    if (text == "sink")
        return Role::Sink;
    throw std::invalid_argument("unknown role '" + std::string(text) + "'");
}

Mode parse_mode(std::string_view text) {
    if (text == "normal")
        return Mode::Normal;
    if (text == "selfish")
        return Mode::Selfish;
    if (text == "dead")
        return Mode::Dead;
    throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

} // namespace wsn
