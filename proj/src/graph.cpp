#include "wsn/graph.hpp"

#include <set>
#include <stdexcept>
#include <unordered_set>

namespace wsn {

std::vector<Violation> validate(const GraphSnapshot &s, const SnapshotLimits &limits) {
    std::vector<Violation> out;
    auto report = [&](ViolationKind kind, std::string message) { out.push_back({kind, std::move(message)}); };

    std::unordered_map<NodeId, const NodeRecord *> by_id;
    for (const auto &node : s.nodes) {
        const auto label = std::to_string(node.id);
        if (!by_id.emplace(node.id, &node).second)
            report(ViolationKind::DuplicateNodeId, "duplicate node id " + label);
        if (!(node.x >= 0.0 && node.y >= 0.0) || (limits.area_width && node.x > *limits.area_width) ||
            (limits.area_height && node.y > *limits.area_height))
            report(ViolationKind::PositionOutsideArea, "node " + label + " outside the deployment area");
        if (node.role == Role::Sensor && !(node.energy >= 0.0))
            report(ViolationKind::NegativeEnergy, "negative energy at node " + label);
        if (node.role == Role::Sink && node.mode != Mode::Normal)
            report(ViolationKind::SinkNotNormal, "sink " + label + " is not in normal mode");
    }

    std::set<Link> seen;
    std::unordered_map<NodeId, int> out_degree;
    std::unordered_set<NodeId> dead_reported;
    for (const auto &link : s.links) {
        const auto label = "(" + std::to_string(link.src) + "," + std::to_string(link.dst) + ")";
        if (link.src == link.dst)
            report(ViolationKind::SelfLink, "self-link at " + std::to_string(link.src));
        if (!seen.insert(link).second)
            report(ViolationKind::DuplicateLink, "duplicate link " + label);
        auto src = by_id.find(link.src);
        auto dst = by_id.find(link.dst);
        if (src == by_id.end() || dst == by_id.end()) {
            report(ViolationKind::DanglingEndpoint, "link " + label + " has an unknown endpoint");
            continue;
        }
        if (src->second->role == Role::Sink)
            report(ViolationKind::LinkFromSink, "link " + label + " leaves a sink");
        for (const auto *node : {src->second, dst->second})
            if (node->mode == Mode::Dead && dead_reported.insert(node->id).second)
                report(ViolationKind::DeadNodeWithLink,
                       "dead node with incident link at " + std::to_string(node->id));
        ++out_degree[link.src];
    }

    if (limits.neighbor_limit)
        for (const auto &[id, degree] : out_degree)
            if (degree > *limits.neighbor_limit)
                report(ViolationKind::OutDegreeExceeded, "node " + std::to_string(id) + " has out-degree " +
                                                              std::to_string(degree) + " above the neighbor limit");
    return out;
}

std::vector<Violation> validate(const TemporalTrace &trace) {
    std::vector<Violation> out;
    const auto limits = SnapshotLimits::from(trace.config);
    std::optional<std::set<NodeId>> reference_ids;
    for (std::size_t i = 0; i < trace.snapshots.size(); ++i) {
        const auto &s = trace.snapshots[i];
        const auto where = "snapshot t=" + std::to_string(s.t) + ": ";
        for (auto &v : validate(s, limits))
            out.push_back({v.kind, where + v.message});
        if (i > 0 && s.t <= trace.snapshots[i - 1].t)
            out.push_back({ViolationKind::TimeNotIncreasing, where + "time does not strictly increase"});
        std::set<NodeId> ids;
        for (const auto &node : s.nodes)
            ids.insert(node.id);
        if (!reference_ids)
            reference_ids = std::move(ids);
        else if (ids != *reference_ids)
            out.push_back({ViolationKind::NodeSetChanged, where + "node id set differs from the first snapshot"});
    }
    return out;
}

Digraph::Digraph(const GraphSnapshot &s) {
    const auto n = s.nodes.size();
    ids_.reserve(n);
    sink_.reserve(n);
    out_.resize(n);
    in_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto &node = s.nodes[v];
        if (!index_.emplace(node.id, v).second)
            throw std::invalid_argument("duplicate node id " + std::to_string(node.id));
        ids_.push_back(node.id);
        sink_.push_back(node.role == Role::Sink);
    }
    for (const auto &link : s.links) {
        auto src = index_of(link.src);
        auto dst = index_of(link.dst);
        if (!src || !dst)
            throw std::invalid_argument("link (" + std::to_string(link.src) + "," + std::to_string(link.dst) +
                                        ") has an unknown endpoint");
        out_[*src].push_back(*dst);
        in_[*dst].push_back(*src);
    }
    link_count_ = s.links.size();
}

std::optional<std::size_t> Digraph::index_of(NodeId id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Digraph Digraph::induced(const std::vector<bool> &keep) const {
    if (keep.size() != size())
        throw std::invalid_argument("Digraph::induced: mask size mismatch");
    std::vector<std::size_t> remap(size(), SIZE_MAX);
    Digraph g;
    for (std::size_t v = 0; v < size(); ++v) {
        if (!keep[v])
            continue;
        remap[v] = g.ids_.size();
        g.index_.emplace(ids_[v], g.ids_.size());
        g.ids_.push_back(ids_[v]);
        g.sink_.push_back(sink_[v]);
    }
    g.out_.resize(g.ids_.size());
    g.in_.resize(g.ids_.size());
    for (std::size_t v = 0; v < size(); ++v) {
        if (!keep[v])
            continue;
        for (auto w : out_[v]) {
            if (!keep[w])
                continue;
            g.out_[remap[v]].push_back(remap[w]);
            g.in_[remap[w]].push_back(remap[v]);
            ++g.link_count_;
        }
    }
    return g;
}

} // namespace wsn
