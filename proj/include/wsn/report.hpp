#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsn/analysis.hpp"

namespace wsn {

using Point = std::pair<double, double>;

struct Bar {
    double lo = 0.0;
    double hi = 0.0;
    double height = 0.0;
};

/// Everything needed to draw one self-contained SVG chart.
struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    /// Polylines; a gap in a series starts a new segment.
    std::vector<std::vector<Point>> segments;
    std::vector<Point> markers;
    std::vector<Bar> bars;
};

std::string render_svg(const Plot &plot);

/// Splits a series at undefined values into drawable segments.
std::vector<std::vector<Point>> series_segments(const MetricSeries &series);

enum class FigureKind { TimeSeries, Snapshot };
enum class SnapshotStyle { Bars, Markers, Steps };

struct FigureSpec {
    std::string name;
    FigureKind kind = FigureKind::TimeSeries;
    /// CSV column for time series, sidecar name for snapshot figures.
    std::string source;
    std::string title;
    std::string x_label;
    std::string y_label;
    SnapshotStyle style = SnapshotStyle::Markers;
};

const std::vector<FigureSpec> &figure_specs();
const FigureSpec *find_figure(std::string_view name);

Plot time_series_plot(const FigureSpec &figure, const MetricTable &table);

/// Builds a snapshot figure from the sidecar CSV text written by analyze.
Plot snapshot_plot(const FigureSpec &figure, Round t, std::string_view sidecar_csv);

} // namespace wsn
