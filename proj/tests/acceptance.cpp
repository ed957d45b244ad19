// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wsn/analysis.hpp"
#include "wsn/metrics_classic.hpp"
#include "wsn/metrics_sink.hpp"
#include "wsn/simulation.hpp"
#include "wsn/trace_io.hpp"

using namespace wsn;

namespace {

constexpr int kSeeds = 10;
constexpr int kOracleGraphs = 500;

int failures = 0;

void verdict(int id, bool pass, const std::string &what, const std::string &detail) {
    std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += !pass;
}

std::string fmt(const char *pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

/// Least-squares slope of the defined points.
std::optional<double> slope(const MetricSeries &s) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < s.t.size(); ++i)
        if (s.values[i]) {
            x.push_back(static_cast<double>(s.t[i]));
            y.push_back(*s.values[i]);
        }
    if (x.size() < 2)
        return std::nullopt;
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxx == 0 ? std::nullopt : std::optional<double>(sxy / sxx);
}

std::vector<double> ranks(const std::vector<double> &v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]])
            ++j;
        for (std::size_t k = i; k <= j; ++k)
            r[order[k]] = (static_cast<double>(i + j) / 2.0) + 1.0;
        i = j + 1;
    }
    return r;
}

std::optional<double> spearman(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() < 2)
        return std::nullopt;
    const double rho = oracle::pearson(ranks(x), ranks(y));
    return std::isfinite(rho) ? std::optional<double>(rho) : std::nullopt;
}

/// Neumaier-compensated running sum; a million event energies overwhelm naive addition.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double t = sum + x;
        carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

bool acyclic(const GraphSnapshot &s) {
    std::map<NodeId, std::size_t> indeg;
    std::map<NodeId, std::vector<NodeId>> out;
    for (const auto &n : s.nodes)
        indeg[n.id] = 0;
    for (const auto &l : s.links) {
        ++indeg[l.dst];
        out[l.src].push_back(l.dst);
    }
    std::vector<NodeId> ready;
    for (auto [id, d] : indeg)
        if (d == 0)
            ready.push_back(id);
    std::size_t seen = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++seen;
        for (auto w : out[v])
            if (--indeg[w] == 0)
                ready.push_back(w);
    }
    return seen == s.nodes.size();
}

// ---- criteria 1-3: oracle equivalence ------------------------------------

void betweenness_oracle() {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> size(3, 8);
    std::uniform_real_distribution<double> density(0.1, 0.7);
    double worst = 0.0;
    for (int i = 0; i < kOracleGraphs; ++i) {
        auto s = oracle::random_digraph(rng, size(rng), density(rng));
        const double n = static_cast<double>(s.nodes.size());
        auto got = *betweenness(s, Restriction::All);
        auto want = oracle::betweenness(s);
        for (std::size_t v = 0; v < s.nodes.size(); ++v)
            worst = std::max(worst, std::abs(got.at(static_cast<NodeId>(v)) - want[v] / ((n - 1) * (n - 2))));
    }
    verdict(1, worst <= 1e-12, "betweenness equals path enumeration",
            std::to_string(kOracleGraphs) + " graphs, max |err| " + fmt("%.3g", worst) + " (tol 1e-12)");
}

void sink_betweenness_oracle() {
    std::mt19937_64 rng(202);
    std::uniform_int_distribution<std::size_t> size(2, 10), sinks(1, 2);
    std::uniform_real_distribution<double> density(0.15, 0.7);
    double worst = 0.0;
    for (int i = 0; i < kOracleGraphs; ++i) {
        const auto n = size(rng);
        auto s = oracle::random_sink_dag(rng, n, std::min(sinks(rng), n - 1), density(rng));
        auto got = sink_betweenness(s);
        auto want = oracle::sink_betweenness(s);
        for (auto [id, value] : got)
            worst = std::max(worst, std::abs(value - want[static_cast<std::size_t>(id)]));
    }
    // Sole gateway 1 in front of sink 0; a small tree hangs behind it.
    auto gateway = oracle::make_snapshot(7, {{1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 3}, {5, 2}, {6, 4}}, {0});
    const double g = sink_betweenness(gateway, 1);
    verdict(2, worst <= 1e-12 && g == 1.0, "sink-betweenness equals path enumeration",
            std::to_string(kOracleGraphs) + " DAGs, max |err| " + fmt("%.3g", worst) + " (tol 1e-12); sole gateway sb = " +
                fmt("%.17g", g));
}

void distance_oracle() {
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_real_distribution<double> density(0.0, 0.5);
    std::size_t mismatches = 0;
    for (int i = 0; i < kOracleGraphs; ++i) {
        auto s = oracle::random_digraph(rng, size(rng), density(rng));
        auto got = all_pairs_distances(s);
        auto want = oracle::floyd_warshall(s);
        for (std::size_t u = 0; u < s.nodes.size(); ++u)
            for (std::size_t v = 0; v < s.nodes.size(); ++v)
                mismatches += got[u][v] != (want[u][v] == oracle::kInf ? kUnreachable : want[u][v]);
    }
    verdict(3, mismatches == 0, "all-pairs distances equal Floyd-Warshall",
            std::to_string(kOracleGraphs) + " graphs, " + std::to_string(mismatches) + " mismatching entries");
}

// ---- criteria 4-9: seed sweep ------------------------------------------

struct SeedResult {
    std::uint64_t seed = 0;
    Round lifetime = 0;
    double seconds = 0.0;
    // criterion 4
    bool isolates_monotone = true;
    double max_isolate_jump = 0.0;
    // criterion 5
    std::optional<double> d_plus_0;
    std::optional<double> d_plus_slope;
    // criterion 6
    double max_abs_rho = 0.0;
    // criterion 7
    std::optional<double> b_k_spearman;
    // criterion 8
    std::optional<double> sink_distance_slope;
    std::optional<double> distance_slope;
    // criterion 9
    double ledger_gap = 0.0;
    std::vector<std::string> broken;
};

/// Steps a simulator by hand, checking the invariants as the trace is built.
TemporalTrace run_checked(const SimConfig &config, SeedResult &r) {
    Simulator sim(config);
    TemporalTrace trace{sim.config(), {sim.snapshot()}};
    std::set<std::string> broken;
    std::set<NodeId> selfish_seen;
    CompensatedSum spent;

    auto check_snapshot = [&](const GraphSnapshot &s) {
        if (!acyclic(s))
            broken.insert("cycle in snapshot");
        std::map<NodeId, int> out;
        for (const auto &l : s.links)
            if (++out[l.src] > config.neighbor_limit)
                broken.insert("out-degree above limit");
        for (const auto &l : s.links)
            if (selfish_seen.count(l.dst))
                broken.insert("selfish sensor kept an in-link");
        if (!validate(s, SnapshotLimits::from(config)).empty())
            broken.insert("snapshot fails validation");
    };
    check_snapshot(trace.snapshots.back());

    while (!sim.finished()) {
        for (const auto &e : sim.run_round()) {
            spent.add(e.energy);
            if (e.kind == EventKind::Selfish)
                selfish_seen.insert(e.node);
        }
        // Routing along next hops must strictly lower the energy cost to the sink.
        std::map<NodeId, double> cost;
        for (const auto &st : sim.sensors())
            cost[st.id] = st.cost_to_sink;
        for (const auto &st : sim.sensors())
            if (st.mode != Mode::Dead)
                for (const auto &h : st.next_hops)
                    if (!((cost.count(h.neighbor) ? cost[h.neighbor] : 0.0) < st.cost_to_sink))
                        broken.insert("next hop not closer to the sink");

        if (sim.round() % config.snapshot_interval == 0 || sim.finished()) {
            auto s = sim.snapshot();
            const auto &prev = trace.snapshots.back();
            for (std::size_t i = 0; i < s.nodes.size(); ++i) {
                if (s.nodes[i].energy > prev.nodes[i].energy)
                    broken.insert("energy increased");
                if (prev.nodes[i].mode == Mode::Dead && s.nodes[i].mode != Mode::Dead)
                    broken.insert("dead sensor revived");
            }
            check_snapshot(s);
            trace.snapshots.push_back(std::move(s));
        }
    }

    CompensatedSum drained;
    for (const auto &st : sim.sensors())
        drained.add(config.initial_energy - st.residual_energy);
    const double gap = std::abs(spent.value() - drained.value()) / drained.value();
    r.ledger_gap = gap;
    if (!(gap <= 1e-12))
        broken.insert("energy ledger off by " + fmt("%.3g", gap) + " relative");

    r.broken.assign(broken.begin(), broken.end());
    return trace;
}

SeedResult run_seed(std::uint64_t seed) {
    SeedResult r;
    r.seed = seed;
    SimConfig config;
    config.seed = seed;

    const auto start = std::chrono::steady_clock::now();
    auto trace = run_checked(config, r);
    const auto text = trace_to_string(trace);
    // Determinism: an independent run through the public entry point must produce the same bytes.
    if (trace_to_string(simulate(config)) != text)
        r.broken.push_back("trace bytes differ between runs");
    if (trace_from_string(text) != trace)
        r.broken.push_back("trace does not round-trip");

    auto table = analyze(trace);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.lifetime = trace.snapshots.back().t;

    auto isolates = table.series("isolate_fraction");
    for (std::size_t i = 1; i < isolates.values.size(); ++i) {
        const double step = *isolates.values[i] - *isolates.values[i - 1];
        r.isolates_monotone = r.isolates_monotone && step >= 0.0;
        r.max_isolate_jump = std::max(r.max_isolate_jump, step);
    }

    auto d_plus = table.series("d_plus");
    r.d_plus_0 = d_plus.values.front();
    r.d_plus_slope = slope(d_plus);

    auto rho = table.series("rho");
    for (std::size_t i = 0; i < rho.t.size(); ++i)
        if (rho.t[i] <= 0.8 * static_cast<double>(r.lifetime) && rho.values[i])
            r.max_abs_rho = std::max(r.max_abs_rho, std::abs(*rho.values[i]));

    if (auto f = betweenness_functions(trace.snapshots.front(), Restriction::SinkConnected)) {
        std::vector<double> k, b;
        for (const auto &p : f->by_degree) {
            k.push_back(p.x);
            b.push_back(p.y);
        }
        r.b_k_spearman = spearman(k, b);
    }

    r.sink_distance_slope = slope(table.series("avg_sink_distance"));
    r.distance_slope = slope(table.series("avg_distance"));
    return r;
}

std::string show(const std::optional<double> &v, const char *pattern = "%.4g") {
    return v ? fmt(pattern, *v) : std::string("undefined");
}

void seed_sweep() {
    std::vector<SeedResult> runs;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        runs.push_back(run_seed(seed));
        const auto &r = runs.back();
        std::printf("  seed %2llu: lifetime %lld rounds, %.1f s; max isolate step %.4f; d+(0) %s, d+ slope %s; "
                    "max |rho| (first 80%%) %.3f; spearman(<b>_k, k) %s; slopes: sink-distance %s, distance %s\n",
                    static_cast<unsigned long long>(r.seed), static_cast<long long>(r.lifetime), r.seconds,
                    r.max_isolate_jump, show(r.d_plus_0).c_str(), show(r.d_plus_slope, "%.3g").c_str(), r.max_abs_rho,
                    show(r.b_k_spearman, "%.3f").c_str(), show(r.sink_distance_slope, "%.3g").c_str(),
                    show(r.distance_slope, "%.3g").c_str());
        std::fflush(stdout);
    }
    auto count = [&](const std::function<bool(const SeedResult &)> &ok) {
        return static_cast<int>(std::count_if(runs.begin(), runs.end(), ok));
    };
    auto of = [](int k) { return std::to_string(k) + "/" + std::to_string(kSeeds); };

    const int monotone = count([](const SeedResult &r) { return r.isolates_monotone; });
    const int small_steps = count([](const SeedResult &r) { return r.max_isolate_jump <= 0.15; });
    verdict(4, monotone == kSeeds && small_steps >= 8, "isolate fraction rises steadily",
            "non-decreasing in " + of(monotone) + " runs, no step above 0.15 in " + of(small_steps) + " (need all, >= 8)");

    const int d0_in = count([](const SeedResult &r) { return r.d_plus_0 && *r.d_plus_0 >= 0.01 && *r.d_plus_0 <= 0.03; });
    const int d_down = count([](const SeedResult &r) { return r.d_plus_slope && *r.d_plus_slope < 0.0; });
    verdict(5, d0_in == kSeeds && d_down == kSeeds, "d+ starts in [0.01, 0.03] and trends downward",
            "d+(0) in range in " + of(d0_in) + ", negative slope in " + of(d_down) + " (need all)");

    const int rho_small = count([](const SeedResult &r) { return r.max_abs_rho < 0.25; });
    verdict(6, rho_small >= 8, "|rho| < 0.25 over the first 80% of lifetime",
            "holds in " + of(rho_small) + " (need >= 8)");

    const int bk = count([](const SeedResult &r) { return r.b_k_spearman && *r.b_k_spearman >= 0.0; });
    verdict(7, bk >= 8, "<b>_k rank-correlates non-negatively with k at t = 0", "holds in " + of(bk) + " (need >= 8)");

    const int up = count([](const SeedResult &r) {
        return r.sink_distance_slope && *r.sink_distance_slope >= 0.0 && r.distance_slope && *r.distance_slope >= 0.0;
    });
    verdict(8, up == kSeeds, "average sink-distance and average distance trend upward",
            "both slopes >= 0 in " + of(up) + " (need all)");

    double widest = 0.0;
    for (const auto &r : runs)
        widest = std::max(widest, r.ledger_gap);
    std::string problems = " (worst energy ledger gap " + fmt("%.2g", widest) + " relative, tol 1e-12)";
    for (const auto &r : runs)
        for (const auto &b : r.broken)
            problems += " seed " + std::to_string(r.seed) + ": " + b + ";";
    const int clean = count([](const SeedResult &r) { return r.broken.empty(); });
    verdict(9, clean == kSeeds, "simulation invariants (energy, DAG, out-degree, selfish, determinism, conservation)",
            "clean on " + of(clean) + problems);

    double slowest = 0.0;
    for (const auto &r : runs)
        slowest = std::max(slowest, r.seconds);
    std::printf("  slowest simulate+analyze pipeline: %.1f s per seed\n", slowest);
}

// ---- criterion 10 ---------------------------------------------------------

void single_sensor_ledger() {
    SimConfig config;
    const double per_packet = link_cost(10.0, config).joules_per_bit * config.packet_bits;
    const auto expected = static_cast<long long>(std::floor(config.initial_energy / per_packet));
    long long delivered = 0;
    auto trace = simulate(config, {{config.sink_positions[0].x + 10.0, config.sink_positions[0].y}},
                          [&](const Event &e) { delivered += e.kind == EventKind::Delivered; });
    verdict(10, std::llabs(delivered - expected) <= 1, "single sensor 10 m from the sink",
            std::to_string(delivered) + " deliveries vs floor(E0 / " + fmt("%.6g", per_packet) + " J) = " +
                std::to_string(expected) + " (tol 1); last round " + std::to_string(trace.snapshots.back().t));
}

} // namespace

int main() {
    betweenness_oracle();
    sink_betweenness_oracle();
    distance_oracle();
    seed_sweep();
    single_sensor_ledger();
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
