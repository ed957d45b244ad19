// wsnet: simulate a sensor network, analyze its topology trace, render figures.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "wsn/commands.hpp"
#include "wsn/format.hpp"

namespace {

std::vector<wsn::Round> parse_times(const std::string &text) {
    std::vector<wsn::Round> times;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (wsn::trim(item).empty())
            continue;
        auto value = wsn::parse_integer(item);
        if (!value)
            throw CLI::ValidationError("times", "'" + item + "' is not an integer");
        times.push_back(*value);
    }
    return times;
}

std::vector<std::string> parse_list(const std::string &text) {
    std::vector<std::string> items;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (auto trimmed = wsn::trim(item); !trimmed.empty())
            items.emplace_back(trimmed);
    return items;
}

void configure_logging() {
    auto logger = spdlog::stderr_color_mt("wsnet");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char *level = std::getenv("WSNET_LOG_LEVEL"))
        spdlog::set_level(spdlog::level::from_str(level));
}

} // namespace

int main(int argc, char **argv) {
    configure_logging();

    CLI::App app{"Wireless sensor network lifetime simulator and topology analyzer"};
    app.require_subcommand(1);

    wsn::SimulateOptions sim;
    std::string config_path, events_path;
    std::uint64_t seed = 0;
    auto *simulate = app.add_subcommand("simulate", "Run a simulation and write its topology trace");
    simulate->add_option("--config", config_path, "Config file (key = value)");
    auto *seed_opt = simulate->add_option("--seed", seed, "Override the config seed");
    simulate->add_option("--out", sim.out_path, "Trace output path (JSON Lines)")->required();
    simulate->add_option("--events", events_path, "Optional event log output (JSON Lines)");

    wsn::AnalyzeOptions analyze;
    std::string metrics, dists;
    auto *analyze_cmd = app.add_subcommand("analyze", "Compute metric time series over a trace");
    analyze_cmd->add_option("--trace", analyze.trace_path, "Trace file")->required();
    analyze_cmd->add_option("--metrics", metrics, "Comma-separated metric names (default: all)");
    analyze_cmd->add_option("--out", analyze.out_path, "CSV output path")->required();
    analyze_cmd->add_option("--dists", dists, "Comma-separated snapshot times for distribution sidecars");

    wsn::ReportOptions report;
    std::string figures, at;
    auto *report_cmd = app.add_subcommand("report", "Render SVG figures from analyze output");
    report_cmd->add_option("--csv", report.csv_path, "CSV written by analyze")->required();
    report_cmd->add_option("--figures", figures, "Comma-separated figure names (fig1a ... fig4c)")->required();
    report_cmd->add_option("--out", report.out_dir, "Output directory")->required();
    report_cmd->add_option("--at", at, "Comma-separated snapshot times for distribution figures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : wsn::kExitBadInput;
    }

    try {
        if (*simulate) {
            if (!config_path.empty())
                sim.config_path = config_path;
            if (*seed_opt)
                sim.seed = seed;
            if (!events_path.empty())
                sim.events_path = events_path;
            spdlog::info("simulating into {}", sim.out_path.string());
            return wsn::cmd_simulate(sim, std::cout, std::cerr);
        }
        if (*analyze_cmd) {
            analyze.metrics = parse_list(metrics);
            analyze.dists = parse_times(dists);
            spdlog::info("analyzing {}", analyze.trace_path.string());
            return wsn::cmd_analyze(analyze, std::cout, std::cerr);
        }
        if (*report_cmd) {
            report.figures = parse_list(figures);
            report.at = parse_times(at);
            spdlog::info("rendering {} figure(s) into {}", report.figures.size(), report.out_dir.string());
            return wsn::cmd_report(report, std::cout, std::cerr);
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return wsn::kExitBadInput;
    }
    return wsn::kExitBadInput;
}
