#include "wsn/metrics_sink.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace wsn {

bool SinkConnectedSet::contains(NodeId id) const { return std::binary_search(members.begin(), members.end(), id); }

std::vector<std::optional<std::size_t>> sink_distances(const Digraph &g) {
    std::vector<std::optional<std::size_t>> dist(g.size());
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.is_sink(v)) {
            dist[v] = 0;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto u : g.in(v))
            if (!dist[u]) {
                dist[u] = *dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

std::vector<bool> sink_connected_mask(const Digraph &g) {
    const auto dist = sink_distances(g);
    std::vector<bool> mask(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        mask[v] = dist[v].has_value();
    return mask;
}

SinkConnectedSet sink_connected(const GraphSnapshot &s) {
    const Digraph g(s);
    bool any_sink = false;
    for (std::size_t v = 0; v < g.size() && !any_sink; ++v)
        any_sink = g.is_sink(v);
    if (!any_sink)
        throw NoSinkError();
    SinkConnectedSet set{s.t, {}};
    const auto mask = sink_connected_mask(g);
    for (std::size_t v = 0; v < g.size(); ++v)
        if (mask[v])
            set.members.push_back(g.id(v));
    std::sort(set.members.begin(), set.members.end());
    return set;
}

std::optional<double> density_connected(const GraphSnapshot &s) {
    const Digraph full(s);
    const Digraph g = full.induced(sink_connected_mask(full));
    if (g.size() < 2)
        return std::nullopt;
    const double n = static_cast<double>(g.size());
    return static_cast<double>(g.link_count()) / (n * (n - 1.0));
}

std::optional<std::size_t> sink_distance(const GraphSnapshot &s, NodeId node) {
    const Digraph g(s);
    auto v = g.index_of(node);
    if (!v)
        throw std::invalid_argument("unknown node " + std::to_string(node));
    return sink_distances(g)[*v];
}

std::optional<SinkDistanceSummary> sink_distance_summary(const GraphSnapshot &s) {
    const Digraph g(s);
    const auto dist = sink_distances(g);
    std::vector<std::size_t> finite;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (!g.is_sink(v) && dist[v])
            finite.push_back(*dist[v]);
    if (finite.empty())
        return std::nullopt;
    SinkDistanceSummary summary;
    summary.radius = *std::max_element(finite.begin(), finite.end());
    summary.average = std::accumulate(finite.begin(), finite.end(), 0.0) / static_cast<double>(finite.size());
    summary.distribution = integer_histogram(finite);
    return summary;
}

std::optional<std::size_t> sink_radius(const GraphSnapshot &s) {
    auto summary = sink_distance_summary(s);
    return summary ? std::optional(summary->radius) : std::nullopt;
}

std::optional<double> avg_sink_distance(const GraphSnapshot &s) {
    auto summary = sink_distance_summary(s);
    return summary ? std::optional(summary->average) : std::nullopt;
}

std::optional<Histogram> sink_distance_distribution(const GraphSnapshot &s) {
    auto summary = sink_distance_summary(s);
    return summary ? std::optional(std::move(summary->distribution)) : std::nullopt;
}

std::vector<double> sink_betweenness_values(const Digraph &g) {
    const std::size_t n = g.size();
    const auto dist = sink_distances(g);

    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < n; ++v)
        if (dist[v])
            order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return *dist[a] < *dist[b]; });

    // sigma[v]: shortest paths from v to its nearest sinks.
    std::vector<double> sigma(n, 0.0);
    for (auto v : order) {
        if (g.is_sink(v)) {
            sigma[v] = 1.0;
            continue;
        }
        for (auto w : g.out(v))
            if (dist[w] && *dist[w] + 1 == *dist[v])
                sigma[v] += sigma[w];
    }

    // reach[v] = sum over sources s of paths(s -> v) / sigma[s], s = v included.
    std::vector<double> reach(n, 0.0);
    std::size_t sources = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = *it;
        if (g.is_sink(v))
            continue;
        ++sources;
        reach[v] += 1.0 / sigma[v];
        for (auto w : g.out(v))
            if (!g.is_sink(w) && dist[w] && *dist[w] + 1 == *dist[v])
                reach[w] += reach[v];
    }

    std::vector<double> sb(n, 0.0);
    if (sources < 2)
        return sb;
    const double others = static_cast<double>(sources - 1);
    for (std::size_t v = 0; v < n; ++v)
        if (!g.is_sink(v) && dist[v])
            sb[v] = std::max(0.0, sigma[v] * reach[v] - 1.0) / others;
    return sb;
}

std::map<NodeId, double> sink_betweenness(const GraphSnapshot &s) {
    const Digraph g(s);
    const auto sb = sink_betweenness_values(g);
    std::map<NodeId, double> out;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (!g.is_sink(v))
            out.emplace(g.id(v), sb[v]);
    return out;
}

double sink_betweenness(const GraphSnapshot &s, NodeId node) {
    const Digraph g(s);
    auto v = g.index_of(node);
    if (!v)
        throw std::invalid_argument("unknown node " + std::to_string(node));
    if (g.is_sink(*v))
        throw std::invalid_argument("sink-betweenness is undefined for sink " + std::to_string(node));
    return sink_betweenness_values(g)[*v];
}

std::optional<SinkBetweennessFunctions> sink_betweenness_functions(const GraphSnapshot &s, DegreeMode mode) {
    const Digraph g(s);
    const auto sb = sink_betweenness_values(g);
    std::vector<double> values;
    std::vector<std::pair<double, double>> by_degree;
    SinkBetweennessFunctions f;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.is_sink(v))
            continue;
        values.push_back(sb[v]);
        by_degree.emplace_back(static_cast<double>(degree(g, v, mode)), sb[v]);

        std::vector<std::size_t> nb(g.out(v).begin(), g.out(v).end());
        nb.insert(nb.end(), g.in(v).begin(), g.in(v).end());
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        std::erase_if(nb, [&](std::size_t w) { return g.is_sink(w); });
        if (nb.empty())
            continue;
        double sum = 0.0;
        for (auto w : nb)
            sum += sb[w];
        f.neighbor_pairs.emplace_back(sb[v], sum / static_cast<double>(nb.size()));
    }
    if (values.empty())
        return std::nullopt;
    f.max = *std::max_element(values.begin(), values.end());
    f.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    f.histogram = equal_width_histogram(values);
    f.by_degree = group_mean(std::move(by_degree));
    return f;
}

} // namespace wsn
