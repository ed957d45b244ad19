#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wsn/graph.hpp"

namespace wsn {

/// Scalar series; nullopt marks a snapshot where the metric is undefined.
struct MetricSeries {
    std::string name;
    std::vector<Round> t;
    std::vector<std::optional<double>> values;
};

struct MetricRow {
    Round t = 0;
    std::vector<std::optional<double>> values;

    friend bool operator==(const MetricRow &, const MetricRow &) = default;
};

/// One row per snapshot, columns in the fixed analyze order (without `t`).
struct MetricTable {
    std::vector<std::string> columns;
    std::vector<MetricRow> rows;

    std::optional<std::size_t> column(std::string_view name) const;
    /// Throws std::out_of_range for an unknown column.
    MetricSeries series(std::string_view name) const;

    friend bool operator==(const MetricTable &, const MetricTable &) = default;
};

class UnknownMetricError : public std::invalid_argument {
public:
    explicit UnknownMetricError(const std::string &name);
};

/**
 * Every scalar column `analyze` can produce, in CSV order:
 *
 *   n, m, n_plus, n_minus, isolate_fraction, d, d_plus,
 *   deg_<in|out|all>_<min|max|mean>_<all|conn>  (restriction varies slowest),
 *   rho, diameter, avg_distance, sink_radius, avg_sink_distance,
 *   avg_betweenness, max_sink_betweenness, avg_sink_betweenness
 *
 * `_conn` columns and avg_betweenness are restricted to the sink-connected
 * component.
 */
const std::vector<std::string> &metric_names();

/// All scalar metrics of one snapshot, aligned with metric_names().
std::vector<std::optional<double>> snapshot_metrics(const GraphSnapshot &s);

/**
 * Scalar metrics for every snapshot of the trace. An empty selection means
 * every metric; otherwise columns follow the selection order. Consecutive
 * snapshots with the same topology share one evaluation.
 */
MetricTable analyze(const TemporalTrace &trace, std::span<const std::string> selection = {});

std::string to_csv(const MetricTable &table);
/// Parses analyze output; throws std::runtime_error on malformed text.
MetricTable parse_csv(std::string_view text);

/// Per-snapshot distribution tables keyed by sidecar name, each rendered as CSV text.
std::map<std::string, std::string> distribution_sidecars(const GraphSnapshot &s);

/// Names of the sidecars produced by distribution_sidecars().
const std::vector<std::string> &sidecar_names();

} // namespace wsn
