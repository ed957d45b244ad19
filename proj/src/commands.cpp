#include "wsn/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "wsn/analysis.hpp"
#include "wsn/config.hpp"
#include "wsn/metrics_classic.hpp"
#include "wsn/report.hpp"
#include "wsn/simulation.hpp"
#include "wsn/trace_io.hpp"

namespace wsn {

namespace {

bool write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        return false;
    out << text;
    out.flush();
    return static_cast<bool>(out);
}

std::optional<std::string> read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename Range> std::string join(const Range &values) {
    std::string text;
    for (const auto &v : values) {
        if (!text.empty())
            text += ", ";
        if constexpr (std::is_convertible_v<decltype(v), std::string>)
            text += v;
        else
            text += std::to_string(v);
    }
    return text;
}

} // namespace

std::filesystem::path sidecar_path(const std::filesystem::path &csv_path, Round t, const std::string &name) {
    auto file = csv_path.stem().string() + "_t" + std::to_string(t) + "_" + name + ".csv";
    return csv_path.parent_path() / file;
}

int cmd_simulate(const SimulateOptions &options, std::ostream &out, std::ostream &err) {
    SimConfig config;
    try {
        if (options.config_path)
            config = load_config(*options.config_path);
        if (options.seed)
            config.seed = *options.seed;
        validate(config);
    } catch (const ConfigError &e) {
        err << "error: invalid config: " << e.what() << '\n';
        return kExitBadInput;
    }

    std::ofstream events;
    if (options.events_path) {
        events.open(*options.events_path, std::ios::binary | std::ios::trunc);
        if (!events) {
            err << "error: cannot write event log '" << options.events_path->string() << "'\n";
            return kExitUnwritable;
        }
    }

    std::size_t delivered = 0, dropped = 0;
    const auto trace = simulate(config, [&](const Event &e) {
        delivered += e.kind == EventKind::Delivered;
        dropped += e.kind == EventKind::Dropped;
        if (events.is_open())
            events << to_json(e).dump() << '\n';
    });
    if (events.is_open() && !events.flush()) {
        err << "error: failed writing event log\n";
        return kExitUnwritable;
    }

    try {
        trace_write(trace, options.out_path);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUnwritable;
    }

    const auto &last = trace.snapshots.back();
    const auto counts = node_link_counts(last);
    out << "rounds: " << last.t << '\n'
        << "snapshots: " << trace.snapshots.size() << '\n'
        << "final n_minus: " << counts.n_minus << " / " << counts.n << '\n'
        << "packets delivered: " << delivered << ", dropped: " << dropped << '\n'
        << "lifetime (rounds): " << last.t << '\n';
    return kExitOk;
}

int cmd_analyze(const AnalyzeOptions &options, std::ostream &out, std::ostream &err) {
    TemporalTrace trace;
    try {
        trace = trace_read(options.trace_path);
    } catch (const std::exception &e) {
        err << "error: cannot load trace: " << e.what() << '\n';
        return kExitBadInput;
    }

    MetricTable table;
    try {
        table = analyze(trace, options.metrics);
    } catch (const UnknownMetricError &e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }

    std::vector<const GraphSnapshot *> picked;
    for (auto t : options.dists) {
        auto it = std::find_if(trace.snapshots.begin(), trace.snapshots.end(),
                               [&](const GraphSnapshot &s) { return s.t == t; });
        if (it == trace.snapshots.end()) {
            std::vector<Round> available;
            for (const auto &s : trace.snapshots)
                available.push_back(s.t);
            err << "error: no snapshot at t=" << t << "; available: " << join(available) << '\n';
            return kExitBadInput;
        }
        picked.push_back(&*it);
    }

    if (!write_file(options.out_path, to_csv(table))) {
        err << "error: cannot write '" << options.out_path.string() << "'\n";
        return kExitUnwritable;
    }
    for (const auto *s : picked)
        for (const auto &[name, text] : distribution_sidecars(*s))
            if (!write_file(sidecar_path(options.out_path, s->t, name), text)) {
                err << "error: cannot write sidecar for t=" << s->t << '\n';
                return kExitUnwritable;
            }
    out << "analyzed " << table.rows.size() << " snapshots, " << table.columns.size() << " metrics\n";
    return kExitOk;
}

int cmd_report(const ReportOptions &options, std::ostream &out, std::ostream &err) {
    auto text = read_file(options.csv_path);
    if (!text) {
        err << "error: cannot read '" << options.csv_path.string() << "'\n";
        return kExitBadInput;
    }
    MetricTable table;
    try {
        table = parse_csv(*text);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    if (table.rows.empty()) {
        err << "error: '" << options.csv_path.string() << "' holds no data rows\n";
        return kExitBadInput;
    }
    if (options.figures.empty()) {
        err << "error: no figures requested\n";
        return kExitBadInput;
    }

    std::vector<Round> available;
    for (const auto &row : table.rows)
        available.push_back(row.t);
    for (auto t : options.at)
        if (std::find(available.begin(), available.end(), t) == available.end()) {
            err << "error: no data at t=" << t << "; available t values: " << join(available) << '\n';
            return kExitBadInput;
        }

    // Validate the whole request before writing anything.
    std::vector<std::pair<std::string, std::string>> outputs;
    for (const auto &name : options.figures) {
        const auto *figure = find_figure(name);
        if (!figure) {
            std::vector<std::string> names;
            for (const auto &spec : figure_specs())
                names.push_back(spec.name);
            err << "error: unknown figure '" << name << "'; valid names: " << join(names) << '\n';
            return kExitBadInput;
        }
        if (figure->kind == FigureKind::TimeSeries) {
            if (!table.column(figure->source)) {
                err << "error: figure " << name << " needs column '" << figure->source << "' missing from the CSV\n";
                return kExitBadInput;
            }
            outputs.emplace_back(name + ".svg", render_svg(time_series_plot(*figure, table)));
            continue;
        }

        std::vector<Round> times = options.at;
        if (times.empty())
            for (auto t : available)
                if (std::filesystem::exists(sidecar_path(options.csv_path, t, figure->source)))
                    times.push_back(t);
        if (times.empty()) {
            err << "error: figure " << name << " needs distribution sidecars; rerun analyze with --dists\n";
            return kExitBadInput;
        }
        for (auto t : times) {
            const auto path = sidecar_path(options.csv_path, t, figure->source);
            auto sidecar = read_file(path);
            if (!sidecar) {
                err << "error: missing sidecar '" << path.string() << "'; rerun analyze with --dists " << t << '\n';
                return kExitBadInput;
            }
            try {
                outputs.emplace_back(name + "_t" + std::to_string(t) + ".svg",
                                     render_svg(snapshot_plot(*figure, t, *sidecar)));
            } catch (const std::exception &e) {
                err << "error: " << path.string() << ": " << e.what() << '\n';
                return kExitBadInput;
            }
        }
    }

    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec) {
        err << "error: cannot create '" << options.out_dir.string() << "': " << ec.message() << '\n';
        return kExitUnwritable;
    }
    for (const auto &[file, svg] : outputs) {
        if (!write_file(options.out_dir / file, svg)) {
            err << "error: cannot write '" << (options.out_dir / file).string() << "'\n";
            return kExitUnwritable;
        }
        out << "wrote " << (options.out_dir / file).string() << '\n';
    }
    return kExitOk;
}

} // namespace wsn
