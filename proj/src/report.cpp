#include "wsn/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wsn/format.hpp"

namespace wsn {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string num(double value) {
    // Two decimals are plenty for pixel coordinates.
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << value;
    return out.str();
}

std::string tick_label(double value) {
    std::ostringstream out;
    out.precision(4);
    out << value;
    return out.str();
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void finish() {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo <= 0.0) {
            const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
            lo -= pad;
            hi += pad;
        }
    }
};

} // namespace

std::string render_svg(const Plot &plot) {
    Range xr, yr;
    for (const auto &segment : plot.segments)
        for (const auto &[x, y] : segment) {
            xr.add(x);
            yr.add(y);
        }
    for (const auto &[x, y] : plot.markers) {
        xr.add(x);
        yr.add(y);
    }
    for (const auto &bar : plot.bars) {
        xr.add(bar.lo);
        xr.add(bar.hi);
        yr.add(0.0);
        yr.add(bar.height);
    }
    xr.finish();
    yr.finish();

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto sy = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
        << escape(plot.title) << "</text>\n";

    svg << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
    svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(kLeft + pw) << "\" y2=\""
        << num(kTop + ph) << "\"/>\n";
    svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft) << "\" y2=\""
        << num(kTop + ph) << "\"/>\n";
    svg << "</g>\n";

    svg << "<g class=\"ticks\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / 5.0;
        const double fy = yr.lo + (yr.hi - yr.lo) * i / 5.0;
        svg << "<line x1=\"" << num(sx(fx)) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(sx(fx)) << "\" y2=\""
            << num(kTop + ph + 5) << "\" stroke=\"black\"/>";
        svg << "<text x=\"" << num(sx(fx)) << "\" y=\"" << num(kTop + ph + 18) << "\" text-anchor=\"middle\">"
            << tick_label(fx) << "</text>\n";
        svg << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(sy(fy)) << "\" x2=\"" << num(kLeft) << "\" y2=\""
            << num(sy(fy)) << "\" stroke=\"black\"/>";
        svg << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(sy(fy) + 4) << "\" text-anchor=\"end\">"
            << tick_label(fy) << "</text>\n";
    }
    svg << "</g>\n";
    svg << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 12) << "\" text-anchor=\"middle\">"
        << escape(plot.x_label) << "</text>\n";
    svg << "<text transform=\"translate(16," << num(kTop + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
        << escape(plot.y_label) << "</text>\n";

    for (const auto &bar : plot.bars)
        svg << "<rect class=\"bar\" x=\"" << num(sx(bar.lo)) << "\" y=\"" << num(sy(bar.height)) << "\" width=\""
            << num(std::max(0.0, sx(bar.hi) - sx(bar.lo) - 1.0)) << "\" height=\""
            << num(std::max(0.0, sy(0.0) - sy(bar.height))) << "\" fill=\"steelblue\"/>\n";

    for (const auto &segment : plot.segments) {
        svg << "<polyline class=\"series\" fill=\"none\" stroke=\"firebrick\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < segment.size(); ++i)
            svg << (i ? " " : "") << num(sx(segment[i].first)) << ',' << num(sy(segment[i].second));
        svg << "\"/>\n";
    }

    for (const auto &[x, y] : plot.markers)
        svg << "<circle class=\"marker\" cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y))
            << "\" r=\"3\" fill=\"darkgreen\"/>\n";

    svg << "</svg>\n";
    return svg.str();
}

std::vector<std::vector<Point>> series_segments(const MetricSeries &series) {
    std::vector<std::vector<Point>> segments;
    std::vector<Point> current;
    for (std::size_t i = 0; i < series.t.size(); ++i) {
        if (series.values[i]) {
            current.emplace_back(static_cast<double>(series.t[i]), *series.values[i]);
        } else if (!current.empty()) {
            segments.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty())
        segments.push_back(std::move(current));
    return segments;
}

const std::vector<FigureSpec> &figure_specs() {
    using K = FigureKind;
    using S = SnapshotStyle;
    static const std::vector<FigureSpec> specs{
        {"fig1a", K::TimeSeries, "isolate_fraction", "Proportion of isolates", "round", "n- / n"},
        {"fig1b", K::TimeSeries, "d_plus", "Density of the sink-connected component", "round", "d+"},
        {"fig1c", K::TimeSeries, "deg_out_max_all", "Maximal out-degree", "round", "max out-degree"},
        {"fig2a", K::Snapshot, "degree_all_conn", "All-degree distribution (sink-connected)", "degree", "nodes", S::Bars},
        {"fig2b", K::TimeSeries, "rho", "Degree correlation", "round", "rho"},
        {"fig2c", K::Snapshot, "knn", "Average neighbor degree", "degree k", "<k_nn>_k"},
        {"fig3a", K::TimeSeries, "sink_radius", "Sink-radius", "round", "sink-radius"},
        {"fig3b", K::TimeSeries, "avg_sink_distance", "Average sink-distance", "round", "average sink-distance"},
        {"fig3c", K::Snapshot, "sink_distance_distribution", "Sink-distance distribution", "sink-distance", "sensors",
         S::Bars},
        {"fig4a", K::TimeSeries, "max_sink_betweenness", "Maximal sink-betweenness", "round", "max sb"},
        {"fig4b", K::Snapshot, "sink_betweenness_by_degree", "Sink-betweenness by degree", "degree k", "<sb>_k"},
        {"fig4c", K::Snapshot, "sink_betweenness_nn", "Neighbor sink-betweenness", "sb", "mean neighbor sb"},
        {"diameter", K::TimeSeries, "diameter", "Diameter", "round", "diameter"},
        {"avg_distance", K::TimeSeries, "avg_distance", "Average distance", "round", "average distance"},
        {"avg_betweenness", K::TimeSeries, "avg_betweenness", "Average betweenness (sink-connected)", "round", "<b>"},
        {"hop_plot", K::Snapshot, "hop_plot", "Hop plot", "h", "pairs within h hops", S::Steps},
        {"distance_distribution", K::Snapshot, "distance_distribution", "Distance distribution", "distance", "pairs",
         S::Bars},
        {"betweenness_by_degree", K::Snapshot, "betweenness_by_degree", "Betweenness by degree", "degree k", "<b>_k"},
        {"betweenness_nn", K::Snapshot, "betweenness_nn", "Neighbor betweenness", "b", "mean neighbor b"},
    };
    return specs;
}

const FigureSpec *find_figure(std::string_view name) {
    for (const auto &spec : figure_specs())
        if (spec.name == name)
            return &spec;
    return nullptr;
}

Plot time_series_plot(const FigureSpec &figure, const MetricTable &table) {
    Plot plot{figure.title, figure.x_label, figure.y_label, {}, {}, {}};
    plot.segments = series_segments(table.series(figure.source));
    return plot;
}

Plot snapshot_plot(const FigureSpec &figure, Round t, std::string_view sidecar_csv) {
    Plot plot{figure.title + " at t = " + std::to_string(t), figure.x_label, figure.y_label, {}, {}, {}};
    std::istringstream in{std::string(sidecar_csv)};
    std::string line;
    std::getline(in, line); // header
    std::vector<Point> steps;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<double> cells;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            auto value = parse_double(cell);
            if (!value)
                throw std::runtime_error("bad sidecar value '" + cell + "'");
            cells.push_back(*value);
        }
        if (cells.size() < 2)
            throw std::runtime_error("bad sidecar row '" + line + "'");
        switch (figure.style) {
        case SnapshotStyle::Bars:
            if (cells.size() < 3)
                throw std::runtime_error("histogram sidecar needs three columns");
            plot.bars.push_back({cells[0], cells[1], cells[2]});
            break;
        case SnapshotStyle::Markers:
            plot.markers.emplace_back(cells[0], cells[1]);
            break;
        case SnapshotStyle::Steps:
            if (!steps.empty())
                steps.emplace_back(cells[0], steps.back().second);
            steps.emplace_back(cells[0], cells[1]);
            plot.markers.emplace_back(cells[0], cells[1]);
            break;
        }
    }
    if (!steps.empty())
        plot.segments.push_back(std::move(steps));
    return plot;
}

} // namespace wsn
