#include "wsn/metrics_classic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "wsn/metrics_sink.hpp"

namespace wsn {

std::size_t Histogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

std::size_t Histogram::count_at(double value) const {
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (edges[i] == value)
            return counts[i];
    return 0;
}

Histogram integer_histogram(std::span<const std::size_t> values) {
    Histogram h;
    if (values.empty())
        return h;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    for (std::size_t k = *lo; k <= *hi + 1; ++k)
        h.edges.push_back(static_cast<double>(k));
    h.counts.assign(*hi - *lo + 1, 0);
    for (auto v : values)
        ++h.counts[v - *lo];
    return h;
}

Histogram equal_width_histogram(std::span<const double> values, std::size_t bins) {
    if (bins == 0)
        throw std::invalid_argument("equal_width_histogram: zero bins");
    Histogram h;
    double top = 0.0;
    for (double v : values)
        top = std::max(top, v);
    if (!(top > 0.0))
        top = 1.0;
    for (std::size_t i = 0; i <= bins; ++i)
        h.edges.push_back(top * static_cast<double>(i) / static_cast<double>(bins));
    h.counts.assign(bins, 0);
    for (double v : values) {
        auto bin = static_cast<std::size_t>(std::floor(v / top * static_cast<double>(bins)));
        ++h.counts[std::min(bin, bins - 1)];
    }
    return h;
}

FunctionSamples group_mean(std::vector<std::pair<double, double>> samples) {
    std::sort(samples.begin(), samples.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    FunctionSamples out;
    for (std::size_t i = 0; i < samples.size();) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < samples.size() && samples[j].first == samples[i].first)
            sum += samples[j++].second;
        out.push_back({samples[i].first, sum / static_cast<double>(j - i), j - i});
        i = j;
    }
    return out;
}

NodeLinkCounts node_link_counts(const GraphSnapshot &s) {
    const Digraph g(s);
    NodeLinkCounts c{g.size(), g.link_count(), 0, 0};
    for (std::size_t v = 0; v < g.size(); ++v)
        if (degree(g, v, DegreeMode::All) == 0)
            ++c.n_minus;
    c.n_plus = c.n - c.n_minus;
    return c;
}

std::optional<double> density(const GraphSnapshot &s) {
    const double n = static_cast<double>(s.nodes.size());
    if (s.nodes.size() < 2)
        return std::nullopt;
    return static_cast<double>(s.links.size()) / (n * (n - 1.0));
}

std::size_t degree(const Digraph &g, std::size_t v, DegreeMode mode) {
    switch (mode) {
    case DegreeMode::In:
        return g.in_degree(v);
    case DegreeMode::Out:
        return g.out_degree(v);
    case DegreeMode::All:
        return g.in_degree(v) + g.out_degree(v);
    }
    return 0;
}

std::size_t degree(const GraphSnapshot &s, NodeId node, DegreeMode mode) {
    const Digraph g(s);
    auto v = g.index_of(node);
    if (!v)
        throw std::invalid_argument("unknown node " + std::to_string(node));
    return degree(g, *v, mode);
}

std::vector<bool> restriction_mask(const Digraph &g, Restriction restriction) {
    if (restriction == Restriction::All)
        return std::vector<bool>(g.size(), true);
    return sink_connected_mask(g);
}

namespace {

std::vector<std::size_t> restricted_degrees(const GraphSnapshot &s, DegreeMode mode, Restriction restriction) {
    const Digraph g(s);
    const auto keep = restriction_mask(g, restriction);
    std::vector<std::size_t> degrees;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (keep[v])
            degrees.push_back(degree(g, v, mode));
    return degrees;
}

std::vector<std::size_t> neighbor_union(const Digraph &g, std::size_t v) {
    std::vector<std::size_t> nb(g.out(v).begin(), g.out(v).end());
    nb.insert(nb.end(), g.in(v).begin(), g.in(v).end());
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    return nb;
}

} // namespace

std::optional<DegreeStats> degree_stats(const GraphSnapshot &s, DegreeMode mode, Restriction restriction) {
    const auto degrees = restricted_degrees(s, mode, restriction);
    if (degrees.empty())
        return std::nullopt;
    const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
    const double sum = std::accumulate(degrees.begin(), degrees.end(), 0.0);
    return DegreeStats{*lo, *hi, sum / static_cast<double>(degrees.size())};
}

std::optional<Histogram> degree_distribution(const GraphSnapshot &s, DegreeMode mode, Restriction restriction) {
    const auto degrees = restricted_degrees(s, mode, restriction);
    if (degrees.empty())
        return std::nullopt;
    return integer_histogram(degrees);
}

std::optional<double> assortativity(const GraphSnapshot &s) {
    const Digraph g(s);
    if (g.link_count() < 2)
        return std::nullopt;
    std::vector<double> xs, ys;
    for (std::size_t v = 0; v < g.size(); ++v)
        for (auto w : g.out(v)) {
            xs.push_back(static_cast<double>(degree(g, v, DegreeMode::All)));
            ys.push_back(static_cast<double>(degree(g, w, DegreeMode::All)));
        }
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        return std::nullopt;
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

FunctionSamples avg_neighbor_degree(const GraphSnapshot &s) {
    const Digraph g(s);
    std::vector<std::pair<double, double>> samples;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto nb = neighbor_union(g, v);
        if (nb.empty())
            continue;
        double sum = 0.0;
        for (auto w : nb)
            sum += static_cast<double>(degree(g, w, DegreeMode::All));
        samples.emplace_back(static_cast<double>(degree(g, v, DegreeMode::All)), sum / static_cast<double>(nb.size()));
    }
    return group_mean(std::move(samples));
}

DistanceTable all_pairs_distances(const Digraph &g) {
    DistanceTable table(g.size(), std::vector<std::size_t>(g.size(), kUnreachable));
    std::deque<std::size_t> queue;
    for (std::size_t source = 0; source < g.size(); ++source) {
        auto &dist = table[source];
        dist[source] = 0;
        queue.assign(1, source);
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto w : g.out(u))
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
    }
    return table;
}

DistanceTable all_pairs_distances(const GraphSnapshot &s) { return all_pairs_distances(Digraph(s)); }

std::optional<DistanceSummary> distance_summary(const GraphSnapshot &s) {
    const auto table = all_pairs_distances(s);
    std::vector<std::size_t> finite;
    for (std::size_t u = 0; u < table.size(); ++u)
        for (std::size_t v = 0; v < table.size(); ++v)
            if (u != v && table[u][v] != kUnreachable)
                finite.push_back(table[u][v]);
    if (finite.empty())
        return std::nullopt;

    DistanceSummary summary;
    summary.finite_pairs = finite.size();
    summary.diameter = *std::max_element(finite.begin(), finite.end());
    summary.average = std::accumulate(finite.begin(), finite.end(), 0.0) / static_cast<double>(finite.size());
    summary.distribution = integer_histogram(finite);

    std::vector<std::size_t> at(summary.diameter + 1, 0);
    for (auto d : finite)
        ++at[d];
    std::size_t cumulative = 0;
    for (std::size_t h = 1; h <= summary.diameter; ++h) {
        cumulative += at[h];
        summary.hop_plot.push_back({static_cast<double>(h), static_cast<double>(cumulative), cumulative});
    }
    return summary;
}

std::optional<std::size_t> diameter(const GraphSnapshot &s) {
    auto summary = distance_summary(s);
    return summary ? std::optional(summary->diameter) : std::nullopt;
}

std::optional<double> average_distance(const GraphSnapshot &s) {
    auto summary = distance_summary(s);
    return summary ? std::optional(summary->average) : std::nullopt;
}

std::optional<Histogram> distance_distribution(const GraphSnapshot &s) {
    auto summary = distance_summary(s);
    return summary ? std::optional(std::move(summary->distribution)) : std::nullopt;
}

std::optional<FunctionSamples> hop_plot(const GraphSnapshot &s) {
    auto summary = distance_summary(s);
    return summary ? std::optional(std::move(summary->hop_plot)) : std::nullopt;
}

std::vector<double> brandes_betweenness(const Digraph &g) {
    const std::size_t n = g.size();
    std::vector<double> centrality(n, 0.0);
    std::vector<std::size_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue;
    order.reserve(n);

    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (auto w : g.out(u)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[u] + 1)
                    sigma[w] += sigma[u];
            }
        }
        // Predecessors of w are its in-neighbors one level closer to s.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto w = *it;
            for (auto v : g.in(w))
                if (dist[v] != kUnreachable && dist[v] + 1 == dist[w])
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s)
                centrality[w] += delta[w];
        }
    }
    return centrality;
}

namespace {

struct RestrictedBetweenness {
    Digraph graph;
    std::vector<double> normalized;
};

std::optional<RestrictedBetweenness> restricted_betweenness(const GraphSnapshot &s, Restriction restriction) {
    const Digraph full(s);
    Digraph g = full.induced(restriction_mask(full, restriction));
    const std::size_t n = g.size();
    if (n < 3)
        return std::nullopt;
    auto values = brandes_betweenness(g);
    const double scale = static_cast<double>(n - 1) * static_cast<double>(n - 2);
    for (auto &b : values)
        b /= scale;
    return RestrictedBetweenness{std::move(g), std::move(values)};
}

} // namespace

std::optional<std::map<NodeId, double>> betweenness(const GraphSnapshot &s, Restriction restriction) {
    auto result = restricted_betweenness(s, restriction);
    if (!result)
        return std::nullopt;
    std::map<NodeId, double> out;
    for (std::size_t v = 0; v < result->graph.size(); ++v)
        out.emplace(result->graph.id(v), result->normalized[v]);
    return out;
}

std::optional<BetweennessFunctions> betweenness_functions(const GraphSnapshot &s, Restriction restriction) {
    auto result = restricted_betweenness(s, restriction);
    if (!result)
        return std::nullopt;
    const auto &g = result->graph;
    const auto &b = result->normalized;

    BetweennessFunctions f;
    f.mean = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(b.size());
    f.histogram = equal_width_histogram(b);
    std::vector<std::pair<double, double>> by_degree;
    for (std::size_t v = 0; v < g.size(); ++v) {
        by_degree.emplace_back(static_cast<double>(degree(g, v, DegreeMode::All)), b[v]);
        const auto nb = neighbor_union(g, v);
        if (nb.empty())
            continue;
        double sum = 0.0;
        for (auto w : nb)
            sum += b[w];
        f.neighbor_pairs.emplace_back(b[v], sum / static_cast<double>(nb.size()));
    }
    f.by_degree = group_mean(std::move(by_degree));
    return f;
}

} // namespace wsn
