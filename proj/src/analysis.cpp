#include "wsn/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "wsn/format.hpp"
#include "wsn/metrics_classic.hpp"
#include "wsn/metrics_sink.hpp"

namespace wsn {

namespace {

constexpr DegreeMode kModes[] = {DegreeMode::In, DegreeMode::Out, DegreeMode::All};
constexpr std::string_view kModeNames[] = {"in", "out", "all"};

std::vector<std::string> build_metric_names() {
    std::vector<std::string> names{"n", "m", "n_plus", "n_minus", "isolate_fraction", "d", "d_plus"};
    for (std::string_view restriction : {"all", "conn"})
        for (auto mode : kModeNames)
            for (std::string_view stat : {"min", "max", "mean"})
                names.push_back("deg_" + std::string(mode) + "_" + std::string(stat) + "_" + std::string(restriction));
    for (const char *name : {"rho", "diameter", "avg_distance", "sink_radius", "avg_sink_distance", "avg_betweenness",
                             "max_sink_betweenness", "avg_sink_betweenness"})
        names.emplace_back(name);
    return names;
}

std::string histogram_csv(const std::optional<Histogram> &h) {
    std::string out = "bin_lo,bin_hi,count\n";
    if (h)
        for (std::size_t i = 0; i < h->counts.size(); ++i)
            out += format_double(h->edges[i]) + "," + format_double(h->edges[i + 1]) + "," +
                   std::to_string(h->counts[i]) + "\n";
    return out;
}

std::string function_csv(const std::optional<FunctionSamples> &f) {
    std::string out = "x,y,support\n";
    if (f)
        for (const auto &p : *f)
            out += format_double(p.x) + "," + format_double(p.y) + "," + std::to_string(p.support) + "\n";
    return out;
}

std::string pairs_csv(const std::optional<NeighborPairs> &pairs) {
    std::string out = "x,y\n";
    if (pairs)
        for (const auto &[x, y] : *pairs)
            out += format_double(x) + "," + format_double(y) + "\n";
    return out;
}

std::vector<std::string_view> split_view(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

UnknownMetricError::UnknownMetricError(const std::string &name)
    : std::invalid_argument([&] {
          std::string text = "unknown metric '" + name + "'; valid names:";
          for (const auto &valid : metric_names())
              text += " " + valid;
          return text;
      }()) {}

const std::vector<std::string> &metric_names() {
    static const auto names = build_metric_names();
    return names;
}

std::optional<std::size_t> MetricTable::column(std::string_view name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - columns.begin());
}

MetricSeries MetricTable::series(std::string_view name) const {
    auto index = column(name);
    if (!index)
        throw std::out_of_range("no column '" + std::string(name) + "'");
    MetricSeries out{std::string(name), {}, {}};
    for (const auto &row : rows) {
        out.t.push_back(row.t);
        out.values.push_back(row.values[*index]);
    }
    return out;
}

std::vector<std::optional<double>> snapshot_metrics(const GraphSnapshot &s) {
    std::vector<std::optional<double>> v;
    v.reserve(metric_names().size());

    const auto counts = node_link_counts(s);
    v.push_back(static_cast<double>(counts.n));
    v.push_back(static_cast<double>(counts.m));
    v.push_back(static_cast<double>(counts.n_plus));
    v.push_back(static_cast<double>(counts.n_minus));
    v.push_back(counts.n > 0 ? std::optional(static_cast<double>(counts.n_minus) / static_cast<double>(counts.n))
                             : std::nullopt);
    v.push_back(density(s));
    v.push_back(density_connected(s));

    for (auto restriction : {Restriction::All, Restriction::SinkConnected})
        for (auto mode : kModes) {
            const auto stats = degree_stats(s, mode, restriction);
            v.push_back(stats ? std::optional(static_cast<double>(stats->min)) : std::nullopt);
            v.push_back(stats ? std::optional(static_cast<double>(stats->max)) : std::nullopt);
            v.push_back(stats ? std::optional(stats->mean) : std::nullopt);
        }

    v.push_back(assortativity(s));
    const auto distances = distance_summary(s);
    v.push_back(distances ? std::optional(static_cast<double>(distances->diameter)) : std::nullopt);
    v.push_back(distances ? std::optional(distances->average) : std::nullopt);
    const auto sink = sink_distance_summary(s);
    v.push_back(sink ? std::optional(static_cast<double>(sink->radius)) : std::nullopt);
    v.push_back(sink ? std::optional(sink->average) : std::nullopt);
    const auto b = betweenness_functions(s, Restriction::SinkConnected);
    v.push_back(b ? std::optional(b->mean) : std::nullopt);
    const auto sb = sink_betweenness_functions(s);
    v.push_back(sb ? std::optional(sb->max) : std::nullopt);
    v.push_back(sb ? std::optional(sb->mean) : std::nullopt);
    return v;
}

MetricTable analyze(const TemporalTrace &trace, std::span<const std::string> selection) {
    const auto &names = metric_names();
    std::vector<std::size_t> picked;
    if (selection.empty()) {
        for (std::size_t i = 0; i < names.size(); ++i)
            picked.push_back(i);
    } else {
        for (const auto &name : selection) {
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end())
                throw UnknownMetricError(name);
            picked.push_back(static_cast<std::size_t>(it - names.begin()));
        }
    }

    MetricTable table;
    for (auto i : picked)
        table.columns.push_back(names[i]);

    const GraphSnapshot *previous = nullptr;
    std::vector<std::optional<double>> values;
    for (const auto &s : trace.snapshots) {
        const bool same_topology = previous && previous->links == s.links && previous->nodes.size() == s.nodes.size() &&
                                   std::equal(s.nodes.begin(), s.nodes.end(), previous->nodes.begin(),
                                              [](const NodeRecord &a, const NodeRecord &b) {
                                                  return a.id == b.id && a.role == b.role;
                                              });
        if (!same_topology)
            values = snapshot_metrics(s);
        previous = &s;
        MetricRow row{s.t, {}};
        for (auto i : picked)
            row.values.push_back(values[i]);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string to_csv(const MetricTable &table) {
    std::string out = "t";
    for (const auto &c : table.columns)
        out += "," + c;
    out += "\n";
    for (const auto &row : table.rows) {
        out += std::to_string(row.t);
        for (const auto &value : row.values)
            out += "," + format_optional(value);
        out += "\n";
    }
    return out;
}

MetricTable parse_csv(std::string_view text) {
    MetricTable table;
    std::size_t line_no = 0;
    bool header = true;
    for (auto line : split_view(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        auto cells = split_view(line, ',');
        if (header) {
            if (cells.empty() || cells.front() != "t")
                throw std::runtime_error("line 1: header must start with 't'");
            for (std::size_t i = 1; i < cells.size(); ++i)
                table.columns.emplace_back(cells[i]);
            header = false;
            continue;
        }
        if (cells.size() != table.columns.size() + 1)
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(table.columns.size() + 1) + " cells");
        auto t = parse_integer(cells[0]);
        if (!t)
            throw std::runtime_error("line " + std::to_string(line_no) + ": bad time value");
        MetricRow row{*t, {}};
        for (std::size_t i = 1; i < cells.size(); ++i) {
            if (cells[i].empty()) {
                row.values.emplace_back();
                continue;
            }
            auto value = parse_double(cells[i]);
            if (!value)
                throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + std::string(cells[i]) +
                                         "'");
            row.values.push_back(value);
        }
        table.rows.push_back(std::move(row));
    }
    if (header)
        throw std::runtime_error("empty CSV: missing header");
    return table;
}

const std::vector<std::string> &sidecar_names() {
    static const std::vector<std::string> names{
        "degree_in_conn",        "degree_out_conn",     "degree_all_conn",          "knn",
        "distance_distribution", "hop_plot",            "sink_distance_distribution", "betweenness_hist",
        "betweenness_by_degree", "betweenness_nn",      "sink_betweenness_hist",    "sink_betweenness_by_degree",
        "sink_betweenness_nn"};
    return names;
}

std::map<std::string, std::string> distribution_sidecars(const GraphSnapshot &s) {
    std::map<std::string, std::string> out;
    out["degree_in_conn"] = histogram_csv(degree_distribution(s, DegreeMode::In, Restriction::SinkConnected));
    out["degree_out_conn"] = histogram_csv(degree_distribution(s, DegreeMode::Out, Restriction::SinkConnected));
    out["degree_all_conn"] = histogram_csv(degree_distribution(s, DegreeMode::All, Restriction::SinkConnected));
    out["knn"] = function_csv(avg_neighbor_degree(s));

    const auto distances = distance_summary(s);
    out["distance_distribution"] = histogram_csv(distances ? std::optional(distances->distribution) : std::nullopt);
    out["hop_plot"] = function_csv(distances ? std::optional(distances->hop_plot) : std::nullopt);
    out["sink_distance_distribution"] = histogram_csv(sink_distance_distribution(s));

    const auto b = betweenness_functions(s, Restriction::SinkConnected);
    out["betweenness_hist"] = histogram_csv(b ? std::optional(b->histogram) : std::nullopt);
    out["betweenness_by_degree"] = function_csv(b ? std::optional(b->by_degree) : std::nullopt);
    out["betweenness_nn"] = pairs_csv(b ? std::optional(b->neighbor_pairs) : std::nullopt);

    const auto sb = sink_betweenness_functions(s);
    out["sink_betweenness_hist"] = histogram_csv(sb ? std::optional(sb->histogram) : std::nullopt);
    out["sink_betweenness_by_degree"] = function_csv(sb ? std::optional(sb->by_degree) : std::nullopt);
    out["sink_betweenness_nn"] = pairs_csv(sb ? std::optional(sb->neighbor_pairs) : std::nullopt);
    return out;
}

} // namespace wsn
