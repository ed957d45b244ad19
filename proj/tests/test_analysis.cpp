#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wsn/analysis.hpp"
#include "wsn/metrics_sink.hpp"
#include "wsn/simulation.hpp"

using namespace wsn;
using oracle::make_snapshot;

namespace {

double at(const MetricTable &table, std::size_t row, std::string_view column) {
    return *table.rows[row].values[*table.column(column)];
}

} // namespace

TEST_CASE("chain into a sink") {
    // 1 -> 2 -> sink 0.
    TemporalTrace tr;
    tr.snapshots.push_back(make_snapshot(3, {{1, 2}, {2, 0}}, {0}));
    auto table = analyze(tr);
    REQUIRE(table.rows.size() == 1);
    CHECK(at(table, 0, "n") == 3);
    CHECK(at(table, 0, "m") == 2);
    CHECK(at(table, 0, "d_plus") == doctest::Approx(0.3333).epsilon(1e-4));
    CHECK(at(table, 0, "sink_radius") == 2);
    CHECK(at(table, 0, "isolate_fraction") == 0.0);
    CHECK(at(table, 0, "max_sink_betweenness") == 1.0);
}

TEST_CASE("selection and column order") {
    TemporalTrace tr;
    tr.snapshots.push_back(make_snapshot(3, {{1, 2}, {2, 0}}, {0}));
    CHECK(analyze(tr).columns == metric_names());
    CHECK(metric_names().front() == "n");
    CHECK(metric_names().back() == "avg_sink_betweenness");

    std::vector<std::string> pick{"sink_radius", "n"};
    auto table = analyze(tr, pick);
    CHECK(table.columns == pick);
    CHECK(to_csv(table) == "t,sink_radius,n\n0,2,3\n");

    std::vector<std::string> bad{"n", "nope"};
    CHECK_THROWS_AS(analyze(tr, bad), UnknownMetricError);
    try {
        analyze(tr, bad);
    } catch (const UnknownMetricError &e) {
        CHECK(std::string(e.what()).find("avg_sink_distance") != std::string::npos);
    }
}

TEST_CASE("an all-isolates snapshot leaves distance cells empty") {
    TemporalTrace tr;
    tr.snapshots.push_back(make_snapshot(4, {}, {0}));
    std::vector<std::string> pick{"n_minus", "diameter", "avg_distance", "sink_radius", "avg_sink_distance"};
    CHECK(to_csv(analyze(tr, pick)) == "t,n_minus,diameter,avg_distance,sink_radius,avg_sink_distance\n0,4,,,,\n");
}

TEST_CASE("csv round trip") {
    SimConfig c;
    c.n_sensors = 20;
    c.initial_energy = 0.01;
    auto table = analyze(simulate(c));
    auto text = to_csv(table);
    CHECK(parse_csv(text) == table);
    CHECK(to_csv(parse_csv(text)) == text);
    CHECK_THROWS(parse_csv("t,n\n0,1,2\n"));
}

TEST_CASE("values equal the library calls and caching changes nothing") {
    SimConfig c;
    c.n_sensors = 30;
    c.initial_energy = 0.02;
    c.seed = 3;
    auto tr = simulate(c);
    auto table = analyze(tr);
    REQUIRE(table.rows.size() == tr.snapshots.size());
    for (std::size_t i = 0; i < tr.snapshots.size(); ++i) {
        const auto &s = tr.snapshots[i];
        CHECK(table.rows[i].t == s.t);
        CHECK(table.rows[i].values == snapshot_metrics(s));
        auto col = [&](std::string_view name) { return table.rows[i].values[*table.column(name)]; };
        CHECK(col("d_plus") == density_connected(s));
        CHECK(col("rho") == assortativity(s));
        CHECK(col("avg_sink_distance") == avg_sink_distance(s));
    }
    CHECK(to_csv(analyze(tr)) == to_csv(table));
}

TEST_CASE("isolate fraction never falls on a simulated trace") {
    SimConfig c;
    c.n_sensors = 30;
    c.initial_energy = 0.02;
    auto series = analyze(simulate(c)).series("isolate_fraction");
    for (std::size_t i = 1; i < series.values.size(); ++i)
        CHECK(*series.values[i] >= *series.values[i - 1]);
}

TEST_CASE("distribution sidecars") {
    auto s = make_snapshot(5, {{1, 4}, {2, 4}, {3, 4}, {4, 0}}, {0});
    auto sidecars = distribution_sidecars(s);
    CHECK(sidecars.size() == sidecar_names().size());
    for (const auto &name : sidecar_names())
        CHECK(sidecars.count(name));
    CHECK(sidecars.at("sink_distance_distribution").rfind("bin_lo,bin_hi,count\n", 0) == 0);
    CHECK(sidecars.at("sink_distance_distribution").find("\n1,2,1\n") != std::string::npos);
    CHECK(sidecars.at("sink_distance_distribution").find("\n2,3,3\n") != std::string::npos);
    CHECK(sidecars.at("hop_plot").rfind("x,y,support\n", 0) == 0);
}
