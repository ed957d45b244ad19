#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wsn/metrics_sink.hpp"

using namespace wsn;
using oracle::make_snapshot;

namespace {

/// Random digraph whose sinks (the first `sinks` ids) have no out-links.
GraphSnapshot random_with_sinks(std::mt19937_64 &rng, std::size_t n, std::size_t sinks, double p) {
    auto s = oracle::random_digraph(rng, n, p);
    std::erase_if(s.links, [&](const Link &l) { return static_cast<std::size_t>(l.src) < sinks; });
    for (std::size_t i = 0; i < sinks && i < n; ++i) {
        s.nodes[i].role = Role::Sink;
        s.nodes[i].energy = 0.0;
    }
    return s;
}

GraphSnapshot without(const GraphSnapshot &s, NodeId gone) {
    GraphSnapshot out;
    for (const auto &n : s.nodes)
        if (n.id != gone)
            out.nodes.push_back(n);
    for (const auto &l : s.links)
        if (l.src != gone && l.dst != gone)
            out.links.push_back(l);
    return out;
}

// Sink 0; sensors 1..k all link to it.
GraphSnapshot star_into_sink(std::size_t k) {
    std::vector<std::pair<NodeId, NodeId>> links;
    for (std::size_t i = 1; i <= k; ++i)
        links.emplace_back(i, 0);
    return make_snapshot(k + 1, links, {0});
}

} // namespace

TEST_CASE("sink-connected set") {
    auto star = star_into_sink(4);
    CHECK(sink_connected(star).members.size() == 5);

    // 1 -> 2 -> sink 0, 3 stranded.
    auto chain = make_snapshot(4, {{1, 2}, {2, 0}}, {0});
    auto set = sink_connected(chain);
    CHECK(set.members == std::vector<NodeId>{0, 1, 2});
    CHECK_FALSE(set.contains(3));
    CHECK(*density_connected(chain) == doctest::Approx(1.0 / 3.0));

    CHECK_THROWS_AS(sink_connected(make_snapshot(3, {{1, 2}})), NoSinkError);
}

TEST_CASE("sink-connected set matches forward reachability") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = random_with_sinks(rng, 2 + trial % 10, 1 + trial % 2, 0.2);
        auto set = sink_connected(s);
        auto reach = oracle::reaches_sink(s);
        for (std::size_t v = 0; v < s.nodes.size(); ++v)
            CHECK(set.contains(static_cast<NodeId>(v)) == reach[v]);
    }
}

TEST_CASE("sink distances") {
    auto chain = make_snapshot(4, {{1, 2}, {2, 0}}, {0});
    CHECK(*sink_distance(chain, 2) == 1);
    CHECK(*sink_distance(chain, 1) == 2);
    CHECK_FALSE(sink_distance(chain, 3).has_value());
    CHECK(*sink_distance(chain, 0) == 0);

    auto star = star_into_sink(5);
    auto summary = *sink_distance_summary(star);
    CHECK(summary.radius == 1);
    CHECK(summary.average == 1.0);
    CHECK(summary.distribution.count_at(1) == 5);

    // Three sensors into relay 4, relay into the sink.
    auto tree = make_snapshot(5, {{1, 4}, {2, 4}, {3, 4}, {4, 0}}, {0});
    CHECK(*sink_radius(tree) == 2);
    CHECK(*avg_sink_distance(tree) == 1.75);

    CHECK_FALSE(sink_radius(make_snapshot(3, {}, {0})).has_value());
}

TEST_CASE("sink-distance properties on random graphs") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = random_with_sinks(rng, 3 + trial % 8, 1 + trial % 3, 0.3);
        auto dist = oracle::floyd_warshall(s);
        for (const auto &node : s.nodes) {
            if (node.role == Role::Sink)
                continue;
            auto sd = sink_distance(s, node.id);
            std::size_t best = oracle::kInf;
            for (const auto &t : s.nodes)
                if (t.role == Role::Sink)
                    best = std::min(best, dist[node.id][t.id]);
            CHECK(sd.value_or(oracle::kInf) == best);
        }
        auto radius = sink_radius(s);
        auto diam = diameter(s);
        if (radius)
            CHECK(*radius <= *diam);

        // Dropping a sensor that carries no sink traffic leaves the others' distances alone.
        auto sb = sink_betweenness(s);
        for (auto [id, value] : sb) {
            if (value != 0.0)
                continue;
            auto smaller = without(s, id);
            for (const auto &node : smaller.nodes)
                if (node.role == Role::Sensor)
                    CHECK(sink_distance(smaller, node.id) == sink_distance(s, node.id));
        }
    }
}

TEST_CASE("sink-betweenness hand cases") {
    auto star = star_into_sink(4);
    for (auto [id, value] : sink_betweenness(star))
        CHECK(value == 0.0);
    auto sf = *sink_betweenness_functions(star);
    CHECK(sf.max == 0.0);
    CHECK(sf.mean == 0.0);

    // Diamond: s1=1 -> a=2, b=3 -> sink 0, and a, b link to the sink directly.
    auto diamond = make_snapshot(4, {{1, 2}, {1, 3}, {2, 0}, {3, 0}}, {0});
    CHECK(sink_betweenness(diamond, 2) == 0.25);
    CHECK(sink_betweenness(diamond, 3) == 0.25);
    CHECK(sink_betweenness(diamond, 1) == 0.0);
    CHECK_THROWS_AS(sink_betweenness(diamond, 0), std::invalid_argument);
    CHECK_THROWS_AS(sink_betweenness(diamond, 42), std::invalid_argument);

    // Sole gateway 1: everyone else routes through it.
    auto gateway = make_snapshot(6, {{1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 3}, {5, 2}}, {0});
    CHECK(sink_betweenness(gateway, 1) == 1.0);
    CHECK(sink_betweenness_functions(gateway)->max == 1.0);

    // Lone sensor: nobody else to carry.
    CHECK(sink_betweenness(make_snapshot(2, {{1, 0}}, {0}), 1) == 0.0);
}

TEST_CASE("sink-betweenness matches enumeration") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 9;
        auto s = trial % 2 ? oracle::random_sink_dag(rng, n, 1 + trial % 2, 0.4)
                           : random_with_sinks(rng, n, 1 + trial % 2, 0.3);
        auto want = oracle::sink_betweenness(s);
        auto got = sink_betweenness(s);
        for (const auto &node : s.nodes) {
            if (node.role == Role::Sink)
                continue;
            const double v = got.at(node.id);
            CHECK(v == doctest::Approx(want[node.id]).epsilon(1e-12));
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            if (sink_distance(s, node.id) == 1u && degree(s, node.id, DegreeMode::In) == 0)
                CHECK(v == 0.0);
        }
    }
}
