#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wsn/graph.hpp"
#include "wsn/metrics_classic.hpp"

// Sink-centric measures: reachability of the sinks, hop distance to the
// nearest sink and the share of sensor-to-sink shortest paths each sensor
// carries.

namespace wsn {

class NoSinkError : public std::invalid_argument {
public:
    NoSinkError() : std::invalid_argument("snapshot has no sink") {}
};

struct SinkConnectedSet {
    Round t = 0;
    /// Sorted ids of the sinks and of every sensor with a directed path to one.
    std::vector<NodeId> members;

    bool contains(NodeId id) const;
};

/// Throws NoSinkError when the snapshot holds no sink.
SinkConnectedSet sink_connected(const GraphSnapshot &s);
std::vector<bool> sink_connected_mask(const Digraph &g);

/// Density of the sink-connected component; undefined below two members.
std::optional<double> density_connected(const GraphSnapshot &s);

/// Hop distance to the closest sink per node index (sinks 0, nullopt = unreachable).
std::vector<std::optional<std::size_t>> sink_distances(const Digraph &g);

/// nullopt when no sink is reachable. Sinks are at distance 0.
std::optional<std::size_t> sink_distance(const GraphSnapshot &s, NodeId node);

struct SinkDistanceSummary {
    std::size_t radius = 0;
    double average = 0.0;
    Histogram distribution;
};

/// Over sensors with a finite sink-distance; undefined when there are none.
std::optional<SinkDistanceSummary> sink_distance_summary(const GraphSnapshot &s);
std::optional<std::size_t> sink_radius(const GraphSnapshot &s);
std::optional<double> avg_sink_distance(const GraphSnapshot &s);
std::optional<Histogram> sink_distance_distribution(const GraphSnapshot &s);

/**
 * Sink-betweenness of every sensor, indexed like `g` (0 for sinks).
 *
 * sb(v) = (1/|S|) sum over sensors s != v with a finite sink-distance of
 * sigma_s(v) / sigma_s, where sigma_s counts the shortest paths from s to
 * its nearest sink(s) and sigma_s(v) those with v as an interior node.
 */
std::vector<double> sink_betweenness_values(const Digraph &g);

std::map<NodeId, double> sink_betweenness(const GraphSnapshot &s);
/// Throws std::invalid_argument when `node` is unknown or a sink.
double sink_betweenness(const GraphSnapshot &s, NodeId node);

struct SinkBetweennessFunctions {
    double max = 0.0;
    double mean = 0.0;
    Histogram histogram;
    FunctionSamples by_degree;
    NeighborPairs neighbor_pairs;
};

/// Statistics over sensors only; undefined without sensors.
std::optional<SinkBetweennessFunctions> sink_betweenness_functions(const GraphSnapshot &s,
                                                                   DegreeMode mode = DegreeMode::All);

} // namespace wsn
