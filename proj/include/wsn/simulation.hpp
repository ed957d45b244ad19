#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "wsn/config.hpp"
#include "wsn/graph.hpp"

namespace wsn {

/// Per-bit transmit energy toward a neighbor and the power level that reaches it.
struct LinkCost {
    double joules_per_bit = 0.0;
    std::size_t level = 0;
};

class OutOfRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/**
 * First-order radio cost of one transmission over `distance` meters.
 *
 * The transmitter uses the smallest power level whose range covers the
 * distance and pays e_elec + eps_amp * range^2 per bit. Throws
 * OutOfRangeError beyond the top level.
 */
LinkCost link_cost(double distance, const SimConfig &config);
LinkCost link_cost(const Position &from, const Position &to, const SimConfig &config);

/// Per-bit cost of transmitting at the given power level.
double level_cost(std::size_t level, const SimConfig &config);

/// Sensor positions drawn i.i.d. uniform over the area from `rng`.
std::vector<Position> deploy(const SimConfig &config, std::mt19937_64 &rng);
std::vector<Position> deploy(const SimConfig &config);

struct NextHop {
    NodeId neighbor = 0;
    std::size_t power_level = 0;
    double probability = 0.0;
};

/// Input of the routing setup: one entry per sink and sensor.
struct FieldNode {
    NodeId id = 0;
    Role role = Role::Sensor;
    Position position;
    Mode mode = Mode::Normal;
};

struct RouteEntry {
    /// Energy-wise distance to the sink for one packet, +inf when unreachable.
    double cost_to_sink = std::numeric_limits<double>::infinity();
    std::vector<NextHop> next_hops;
};

/**
 * Energy-wise Bellman-Ford over the radio neighborhood graph.
 *
 * Only sinks and Normal sensors relay; Selfish sensors still get a route
 * for their own packets and Dead sensors get none. Each sensor keeps at
 * most `neighbor_limit` candidates with a strictly smaller cost, ranked by
 * the total cost through them (ties by smaller id). Result is aligned with
 * `nodes`.
 */
std::vector<RouteEntry> setup_phase(std::span<const FieldNode> nodes, const SimConfig &config);

struct Candidate {
    NodeId id = 0;
    bool is_sink = false;
    double cost_to_sink = 0.0;
};

/**
 * Next-hop selection probabilities, inversely proportional to each
 * candidate's cost to the sink. A sink candidate (zero cost) takes the
 * whole probability mass; among several sinks the smallest id wins.
 * Returns nullopt for an empty candidate set.
 */
std::optional<std::vector<double>> bpr_probabilities(std::span<const Candidate> candidates);

struct SensorState {
    NodeId id = 0;
    Position position;
    double residual_energy = 0.0;
    Mode mode = Mode::Normal;
    double cost_to_sink = std::numeric_limits<double>::infinity();
    std::vector<NextHop> next_hops;
};

enum class EventKind { Delivered, Dropped, Selfish, Died };

std::string_view to_string(EventKind kind);

/**
 * One simulation event. `energy` is what sensors actually paid for it: the
 * whole hop-by-hop cost of a packet for Delivered/Dropped, the mode-change
 * broadcast for Selfish, zero for Died.
 */
struct Event {
    Round round = 0;
    EventKind kind = EventKind::Delivered;
    NodeId node = 0;
    double energy = 0.0;
    int hops = 0;
    std::string_view reason;
};

nlohmann::json to_json(const Event &event);

/// Round-based simulation state. Sinks take ids 0..k-1, sensors follow.
class Simulator {
public:
    /// Deploys sensors from the config seed.
    explicit Simulator(SimConfig config);
    /// Uses the given sensor positions; the RNG is still seeded from the config.
    Simulator(SimConfig config, std::vector<Position> sensor_positions);

    const SimConfig &config() const { return config_; }
    Round round() const { return round_; }
    std::span<const SensorState> sensors() const { return sensors_; }

    /// True when every sensor is dead or routeless, or max_rounds is reached.
    bool finished() const;

    std::vector<Event> run_round();

    GraphSnapshot snapshot() const;

private:
    void recompute_routes();
    /// Deducts up to `amount` from a sensor, handling mode changes. Returns what was paid.
    double charge(std::size_t sensor, double amount, std::vector<Event> &events);
    std::size_t pick_next_hop(const SensorState &holder);
    std::optional<std::size_t> sensor_index(NodeId id) const;

    SimConfig config_;
    std::mt19937_64 rng_;
    std::vector<SensorState> sensors_;
    Round round_ = 0;
    bool routes_dirty_ = false;
};

using EventSink = std::function<void(const Event &)>;

TemporalTrace simulate(const SimConfig &config, const EventSink &on_event = {});
TemporalTrace simulate(const SimConfig &config, std::vector<Position> sensor_positions,
                       const EventSink &on_event = {});

} // namespace wsn
