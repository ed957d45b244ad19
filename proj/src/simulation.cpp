#include "wsn/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wsn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool relays(const FieldNode &node) { return node.role == Role::Sink || node.mode == Mode::Normal; }

} // namespace

double level_cost(std::size_t level, const SimConfig &config) {
    const double range = config.power_level_ranges.at(level);
    return config.e_elec + config.eps_amp * range * range;
}

LinkCost link_cost(double distance, const SimConfig &config) {
    const auto &ranges = config.power_level_ranges;
    auto it = std::lower_bound(ranges.begin(), ranges.end(), distance);
    if (it == ranges.end())
        throw OutOfRangeError("distance " + std::to_string(distance) + " m exceeds the maximum range " +
                              std::to_string(config.max_range()) + " m");
    const auto level = static_cast<std::size_t>(it - ranges.begin());
    return {level_cost(level, config), level};
}

LinkCost link_cost(const Position &from, const Position &to, const SimConfig &config) {
    return link_cost(distance(from, to), config);
}

std::vector<Position> deploy(const SimConfig &config, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> xs(0.0, config.area_width);
    std::uniform_real_distribution<double> ys(0.0, config.area_height);
    std::vector<Position> positions;
    positions.reserve(static_cast<std::size_t>(config.n_sensors));
    for (int i = 0; i < config.n_sensors; ++i) {
        const double x = xs(rng);
        const double y = ys(rng);
        positions.push_back({x, y});
    }
    return positions;
}

std::vector<Position> deploy(const SimConfig &config) {
    std::mt19937_64 rng(config.seed);
    return deploy(config, rng);
}

std::vector<RouteEntry> setup_phase(std::span<const FieldNode> nodes, const SimConfig &config) {
    const std::size_t n = nodes.size();
    const double bits = config.packet_bits;
    const double reach = config.max_range();

    struct Edge {
        std::size_t to;
        LinkCost cost;
    };
    std::vector<std::vector<Edge>> radio(n);
    for (std::size_t u = 0; u < n; ++u) {
        if (nodes[u].role == Role::Sink || nodes[u].mode == Mode::Dead)
            continue;
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v || !relays(nodes[v]) || nodes[v].mode == Mode::Dead)
                continue;
            const double d = distance(nodes[u].position, nodes[v].position);
            if (d <= reach)
                radio[u].push_back({v, link_cost(d, config)});
        }
    }

    std::vector<double> cost(n, kInf);
    for (std::size_t v = 0; v < n; ++v)
        if (nodes[v].role == Role::Sink)
            cost[v] = 0.0;

    // Synchronous rounds: every sensor relaxes against last round's estimates.
    for (std::size_t iteration = 0; iteration <= n; ++iteration) {
        std::vector<double> next = cost;
        for (std::size_t u = 0; u < n; ++u)
            for (const auto &e : radio[u])
                if (cost[e.to] < kInf)
                    next[u] = std::min(next[u], e.cost.joules_per_bit * bits + cost[e.to]);
        if (next == cost)
            break;
        cost = std::move(next);
    }

    std::vector<RouteEntry> routes(n);
    for (std::size_t u = 0; u < n; ++u) {
        routes[u].cost_to_sink = cost[u];
        if (radio[u].empty() || cost[u] == kInf)
            continue;

        struct Ranked {
            double total;
            std::size_t index;
            LinkCost link;
        };
        std::vector<Ranked> ranked;
        for (const auto &e : radio[u])
            if (cost[e.to] < cost[u])
                ranked.push_back({e.cost.joules_per_bit * bits + cost[e.to], e.to, e.cost});
        std::sort(ranked.begin(), ranked.end(), [&](const Ranked &a, const Ranked &b) {
            if (a.total != b.total)
                return a.total < b.total;
            return nodes[a.index].id < nodes[b.index].id;
        });
        if (ranked.size() > static_cast<std::size_t>(config.neighbor_limit))
            ranked.resize(static_cast<std::size_t>(config.neighbor_limit));

        std::vector<Candidate> candidates;
        for (const auto &r : ranked)
            candidates.push_back({nodes[r.index].id, nodes[r.index].role == Role::Sink, cost[r.index]});
        const auto probabilities = bpr_probabilities(candidates);
        if (!probabilities)
            continue;
        for (std::size_t k = 0; k < ranked.size(); ++k)
            routes[u].next_hops.push_back({nodes[ranked[k].index].id, ranked[k].link.level, (*probabilities)[k]});
    }
    return routes;
}

std::optional<std::vector<double>> bpr_probabilities(std::span<const Candidate> candidates) {
    if (candidates.empty())
        return std::nullopt;
    std::vector<double> p(candidates.size(), 0.0);

    std::optional<std::size_t> sink;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (candidates[k].is_sink && (!sink || candidates[k].id < candidates[*sink].id))
            sink = k;
    if (sink) {
        p[*sink] = 1.0;
        return p;
    }

    double total = 0.0;
    for (const auto &c : candidates)
        total += 1.0 / c.cost_to_sink;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        p[k] = (1.0 / candidates[k].cost_to_sink) / total;
    return p;
}

std::string_view to_string(EventKind kind) {
    switch (kind) {
    case EventKind::Delivered:
        return "delivered";
    case EventKind::Dropped:
        return "dropped";
    case EventKind::Selfish:
        return "selfish";
    case EventKind::Died:
        return "died";
    }
    return "delivered";
}

nlohmann::json to_json(const Event &event) {
    nlohmann::json detail{{"energy", event.energy}};
    if (event.kind == EventKind::Delivered || event.kind == EventKind::Dropped)
        detail["hops"] = event.hops;
    if (!event.reason.empty())
        detail["reason"] = std::string(event.reason);
    return {{"round", event.round}, {"kind", std::string(to_string(event.kind))}, {"node", event.node}, {"detail", detail}};
}

Simulator::Simulator(SimConfig config) : config_(std::move(config)), rng_(config_.seed) {
    validate(config_);
    const auto positions = deploy(config_, rng_);
    const auto first = static_cast<NodeId>(config_.sink_positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        sensors_.push_back({first + static_cast<NodeId>(i), positions[i], config_.initial_energy, Mode::Normal, kInf, {}});
    recompute_routes();
}

Simulator::Simulator(SimConfig config, std::vector<Position> sensor_positions)
    : config_(std::move(config)), rng_(config_.seed) {
    config_.n_sensors = static_cast<int>(sensor_positions.size());
    validate(config_);
    const auto first = static_cast<NodeId>(config_.sink_positions.size());
    for (std::size_t i = 0; i < sensor_positions.size(); ++i) {
        const auto &p = sensor_positions[i];
        if (!(p.x >= 0.0 && p.x <= config_.area_width && p.y >= 0.0 && p.y <= config_.area_height))
            throw ConfigError("sensor_positions", "sensor " + std::to_string(i) + " lies outside the deployment area");
        sensors_.push_back({first + static_cast<NodeId>(i), p, config_.initial_energy, Mode::Normal, kInf, {}});
    }
    recompute_routes();
}

void Simulator::recompute_routes() {
    std::vector<FieldNode> field;
    field.reserve(config_.sink_positions.size() + sensors_.size());
    for (std::size_t i = 0; i < config_.sink_positions.size(); ++i)
        field.push_back({static_cast<NodeId>(i), Role::Sink, config_.sink_positions[i], Mode::Normal});
    for (const auto &s : sensors_)
        field.push_back({s.id, Role::Sensor, s.position, s.mode});
    const auto routes = setup_phase(field, config_);
    const auto offset = config_.sink_positions.size();
    for (std::size_t i = 0; i < sensors_.size(); ++i) {
        sensors_[i].cost_to_sink = routes[offset + i].cost_to_sink;
        sensors_[i].next_hops = routes[offset + i].next_hops;
    }
    routes_dirty_ = false;
}

std::optional<std::size_t> Simulator::sensor_index(NodeId id) const {
    const auto first = static_cast<NodeId>(config_.sink_positions.size());
    if (id < first)
        return std::nullopt;
    return static_cast<std::size_t>(id - first);
}

bool Simulator::finished() const {
    if (round_ >= config_.max_rounds)
        return true;
    return std::none_of(sensors_.begin(), sensors_.end(),
                        [](const SensorState &s) { return s.mode != Mode::Dead && !s.next_hops.empty(); });
}

double Simulator::charge(std::size_t index, double amount, std::vector<Event> &events) {
    auto &s = sensors_[index];
    const double paid = std::min(amount, s.residual_energy);
    s.residual_energy -= paid;
    if (s.residual_energy <= 0.0) {
        s.residual_energy = 0.0;
        s.mode = Mode::Dead;
        routes_dirty_ = true;
        events.push_back({round_, EventKind::Died, s.id, 0.0, 0, {}});
        return paid;
    }
    if (s.mode == Mode::Normal && s.residual_energy / config_.initial_energy < config_.selfish_threshold) {
        s.mode = Mode::Selfish;
        routes_dirty_ = true;
        // Announce at top power, unless nobody else is left to hear it.
        const bool audience = std::any_of(sensors_.begin(), sensors_.end(), [&](const SensorState &other) {
            return other.id != s.id && other.mode != Mode::Dead;
        });
        events.push_back({round_, EventKind::Selfish, s.id, 0.0, 0, {}});
        const auto at = events.size() - 1;
        if (audience) {
            const double broadcast = level_cost(config_.power_level_ranges.size() - 1, config_) * config_.packet_bits;
            const double spent = charge(index, broadcast, events);
            events[at].energy = spent;
        } else {
            events[at].reason = "no_audience";
        }
    }
    return paid;
}

std::size_t Simulator::pick_next_hop(const SensorState &holder) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double draw = unit(rng_);
    double cumulative = 0.0;
    for (std::size_t k = 0; k < holder.next_hops.size(); ++k) {
        cumulative += holder.next_hops[k].probability;
        if (draw < cumulative)
            return k;
    }
    // Rounding left the draw above the last cumulative sum; take the last positive entry.
    for (std::size_t k = holder.next_hops.size(); k-- > 0;)
        if (holder.next_hops[k].probability > 0.0)
            return k;
    return 0;
}

std::vector<Event> Simulator::run_round() {
    ++round_;
    std::vector<Event> events;
    const double bits = config_.packet_bits;
    const double receive = config_.e_elec * bits;
    const int hop_limit = static_cast<int>(sensors_.size()) + 1;

    for (std::size_t origin = 0; origin < sensors_.size(); ++origin) {
        if (sensors_[origin].mode == Mode::Dead)
            continue;
        const NodeId source = sensors_[origin].id;
        std::size_t holder = origin;
        double spent = 0.0;
        int hops = 0;

        auto drop = [&](std::string_view reason) {
            events.push_back({round_, EventKind::Dropped, source, spent, hops, reason});
        };

        while (true) {
            if (routes_dirty_)
                recompute_routes();
            const auto &state = sensors_[holder];
            if (state.mode == Mode::Dead) {
                drop("relay_dead");
                break;
            }
            if (state.next_hops.empty()) {
                drop("no_route");
                break;
            }
            if (hops >= hop_limit) {
                drop("hop_limit");
                break;
            }
            const NextHop hop = state.next_hops[pick_next_hop(state)];
            const double transmit = level_cost(hop.power_level, config_) * bits;
            const double paid = charge(holder, transmit, events);
            spent += paid;
            if (paid < transmit) {
                drop("sender_died");
                break;
            }
            ++hops;

            const auto next = sensor_index(hop.neighbor);
            if (!next) {
                events.push_back({round_, EventKind::Delivered, source, spent, hops, {}});
                break;
            }
            const double got = charge(*next, receive, events);
            spent += got;
            if (got < receive) {
                drop("receiver_died");
                break;
            }
            holder = *next;
        }
    }
    if (routes_dirty_)
        recompute_routes();
    return events;
}

GraphSnapshot Simulator::snapshot() const {
    GraphSnapshot s;
    s.t = round_;
    for (std::size_t i = 0; i < config_.sink_positions.size(); ++i) {
        const auto &p = config_.sink_positions[i];
        s.nodes.push_back({static_cast<NodeId>(i), Role::Sink, p.x, p.y, 0.0, Mode::Normal});
    }
    for (const auto &sensor : sensors_) {
        s.nodes.push_back({sensor.id, Role::Sensor, sensor.position.x, sensor.position.y, sensor.residual_energy, sensor.mode});
        if (sensor.mode == Mode::Dead)
            continue;
        for (const auto &hop : sensor.next_hops)
            s.links.push_back({sensor.id, hop.neighbor});
    }
    return s;
}

namespace {

TemporalTrace run_to_completion(Simulator &sim, const EventSink &on_event) {
    TemporalTrace trace{sim.config(), {}};
    trace.snapshots.push_back(sim.snapshot());
    while (!sim.finished()) {
        auto events = sim.run_round();
        if (on_event)
            for (const auto &e : events)
                on_event(e);
        if (sim.round() % sim.config().snapshot_interval == 0 || sim.finished())
            trace.snapshots.push_back(sim.snapshot());
    }
    return trace;
}

} // namespace

TemporalTrace simulate(const SimConfig &config, const EventSink &on_event) {
    Simulator sim(config);
    return run_to_completion(sim, on_event);
}

TemporalTrace simulate(const SimConfig &config, std::vector<Position> sensor_positions, const EventSink &on_event) {
    Simulator sim(config, std::move(sensor_positions));
    return run_to_completion(sim, on_event);
}

} // namespace wsn
