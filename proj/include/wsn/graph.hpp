#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wsn/config.hpp"
#include "wsn/types.hpp"

namespace wsn {

struct NodeRecord {
    NodeId id = 0;
    Role role = Role::Sensor;
    double x = 0.0;
    double y = 0.0;
    /// Residual energy in joules; ignored for sinks.
    double energy = 0.0;
    Mode mode = Mode::Normal;

    Position position() const { return {x, y}; }

    friend bool operator==(const NodeRecord &, const NodeRecord &) = default;
};

/// Directed link; data flows from `src` toward `dst` (and on to a sink).
struct Link {
    NodeId src = 0;
    NodeId dst = 0;

    friend auto operator<=>(const Link &, const Link &) = default;
};

/// Topology of the network at round `t`. Dead sensors stay as isolates.
struct GraphSnapshot {
    Round t = 0;
    std::vector<NodeRecord> nodes;
    std::vector<Link> links;

    friend bool operator==(const GraphSnapshot &, const GraphSnapshot &) = default;
};

struct TemporalTrace {
    SimConfig config;
    std::vector<GraphSnapshot> snapshots;

    friend bool operator==(const TemporalTrace &, const TemporalTrace &) = default;
};

enum class ViolationKind {
    DuplicateNodeId,
    PositionOutsideArea,
    NegativeEnergy,
    SinkNotNormal,
    SelfLink,
    DuplicateLink,
    DanglingEndpoint,
    LinkFromSink,
    DeadNodeWithLink,
    OutDegreeExceeded,
    TimeNotIncreasing,
    NodeSetChanged,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

/// Optional bounds checked in addition to the structural invariants.
struct SnapshotLimits {
    std::optional<double> area_width;
    std::optional<double> area_height;
    std::optional<int> neighbor_limit;

    static SnapshotLimits from(const SimConfig &config) {
        return {config.area_width, config.area_height, config.neighbor_limit};
    }
};

/// Every invariant violation of `s`; empty when the snapshot is well formed.
std::vector<Violation> validate(const GraphSnapshot &s, const SnapshotLimits &limits = {});

/// Per-snapshot violations plus time ordering and node-set stability.
std::vector<Violation> validate(const TemporalTrace &trace);

/**
 * Dense adjacency index over a snapshot.
 *
 * Node indices follow the order of `GraphSnapshot::nodes`. Adjacency lists
 * follow link order. Built once per snapshot and shared by the metric
 * engines.
 */
class Digraph {
public:
    explicit Digraph(const GraphSnapshot &s);

    std::size_t size() const { return ids_.size(); }
    std::size_t link_count() const { return link_count_; }

    NodeId id(std::size_t v) const { return ids_[v]; }
    std::optional<std::size_t> index_of(NodeId id) const;
    bool is_sink(std::size_t v) const { return sink_[v]; }

    std::span<const std::size_t> out(std::size_t v) const { return out_[v]; }
    std::span<const std::size_t> in(std::size_t v) const { return in_[v]; }

    std::size_t out_degree(std::size_t v) const { return out_[v].size(); }
    std::size_t in_degree(std::size_t v) const { return in_[v].size(); }

    /// Subgraph induced by the nodes with `keep[v]`, indices renumbered in order.
    Digraph induced(const std::vector<bool> &keep) const;

private:
    Digraph() = default;

    std::vector<NodeId> ids_;
    std::vector<bool> sink_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::unordered_map<NodeId, std::size_t> index_;
    std::size_t link_count_ = 0;
};

} // namespace wsn
