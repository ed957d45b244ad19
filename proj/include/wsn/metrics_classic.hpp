#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wsn/graph.hpp"

// Classic per-snapshot topology measures. Every function is pure; an
// undefined value (too few nodes, zero variance, no finite pair) comes back
// as std::nullopt rather than as 0 or NaN.

namespace wsn {

enum class DegreeMode { In, Out, All };

/// Node set a measure is computed over.
enum class Restriction {
    All,
    /// Sensors with a directed path to a sink, plus the sinks.
    SinkConnected,
};

struct Histogram {
    /// Bin edges, strictly increasing; bin i covers [edges[i], edges[i+1]).
    std::vector<double> edges;
    std::vector<std::size_t> counts;

    std::size_t total() const;
    /// Count of the unit-width bin starting at `value`; 0 when absent.
    std::size_t count_at(double value) const;

    friend bool operator==(const Histogram &, const Histogram &) = default;
};

/// One bin per integer value from min to max, width 1.
Histogram integer_histogram(std::span<const std::size_t> values);

/// `bins` equal-width bins over [0, max]; the last bin is closed on the right.
Histogram equal_width_histogram(std::span<const double> values, std::size_t bins = 20);

struct FunctionPoint {
    double x = 0.0;
    double y = 0.0;
    std::size_t support = 0;

    friend bool operator==(const FunctionPoint &, const FunctionPoint &) = default;
};

/// Samples of y as a function of x, x strictly increasing.
using FunctionSamples = std::vector<FunctionPoint>;

/// Raw (own value, mean neighbor value) pairs, one per node with neighbors.
using NeighborPairs = std::vector<std::pair<double, double>>;

struct NodeLinkCounts {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t n_plus = 0;
    /// Isolates: nodes with no incident link.
    std::size_t n_minus = 0;

    friend bool operator==(const NodeLinkCounts &, const NodeLinkCounts &) = default;
};

NodeLinkCounts node_link_counts(const GraphSnapshot &s);

/// m / (n (n - 1)); undefined below two nodes.
std::optional<double> density(const GraphSnapshot &s);

std::size_t degree(const Digraph &g, std::size_t v, DegreeMode mode);
/// Throws std::invalid_argument for an unknown node.
std::size_t degree(const GraphSnapshot &s, NodeId node, DegreeMode mode);

/// Nodes selected by `restriction`, as a mask over `g`'s indices.
std::vector<bool> restriction_mask(const Digraph &g, Restriction restriction);

struct DegreeStats {
    std::size_t min = 0;
    std::size_t max = 0;
    double mean = 0.0;
};

// Degrees are counted over the whole snapshot; the restriction only picks
// which nodes enter the statistic.
std::optional<DegreeStats> degree_stats(const GraphSnapshot &s, DegreeMode mode, Restriction restriction);
std::optional<Histogram> degree_distribution(const GraphSnapshot &s, DegreeMode mode, Restriction restriction);

/// Pearson correlation of the all-degrees at both ends of every link.
std::optional<double> assortativity(const GraphSnapshot &s);

/// <k_nn>_k: mean all-degree of a node's in/out neighbors, averaged per all-degree k.
FunctionSamples avg_neighbor_degree(const GraphSnapshot &s);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Directed hop distances, indexed like `GraphSnapshot::nodes`.
using DistanceTable = std::vector<std::vector<std::size_t>>;

DistanceTable all_pairs_distances(const Digraph &g);
DistanceTable all_pairs_distances(const GraphSnapshot &s);

/// Statistics over ordered pairs u != v at finite distance.
struct DistanceSummary {
    std::size_t diameter = 0;
    double average = 0.0;
    std::size_t finite_pairs = 0;
    Histogram distribution;
    /// (h, number of pairs with distance <= h) for h = 1..diameter.
    FunctionSamples hop_plot;
};

std::optional<DistanceSummary> distance_summary(const GraphSnapshot &s);
std::optional<std::size_t> diameter(const GraphSnapshot &s);
std::optional<double> average_distance(const GraphSnapshot &s);
std::optional<Histogram> distance_distribution(const GraphSnapshot &s);
std::optional<FunctionSamples> hop_plot(const GraphSnapshot &s);

/**
 * Unnormalized shortest-path betweenness (Brandes accumulation).
 *
 * b(v) sums sigma_uw(v) / sigma_uw over ordered pairs u != v != w at
 * finite distance. Sources are processed in index order so the floating
 * point result is reproducible.
 */
std::vector<double> brandes_betweenness(const Digraph &g);

/// Betweenness divided by (N-1)(N-2), N the size of the restricted node set.
/// Undefined for N < 3.
std::optional<std::map<NodeId, double>> betweenness(const GraphSnapshot &s, Restriction restriction);

struct BetweennessFunctions {
    double mean = 0.0;
    Histogram histogram;
    /// <b>_k over all-degree within the restricted subgraph.
    FunctionSamples by_degree;
    /// (b, mean neighbor b) per node.
    NeighborPairs neighbor_pairs;
};

std::optional<BetweennessFunctions> betweenness_functions(const GraphSnapshot &s, Restriction restriction);

/// Groups (x, y) samples by x and averages y. Helper shared by the <.>_k functions.
FunctionSamples group_mean(std::vector<std::pair<double, double>> samples);

} // namespace wsn
