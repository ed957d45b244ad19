#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wsn/types.hpp"

// Subcommand bodies behind the wsnet CLI. Each returns the process exit
// code: 0 when the artifact was fully written, 2 for bad input, 3 when the
// output cannot be written.

namespace wsn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitUnwritable = 3;

struct SimulateOptions {
    /// Defaults are used when no config file is given.
    std::optional<std::filesystem::path> config_path;
    std::optional<std::uint64_t> seed;
    std::filesystem::path out_path;
    /// Optional JSON Lines event log.
    std::optional<std::filesystem::path> events_path;
};

int cmd_simulate(const SimulateOptions &options, std::ostream &out, std::ostream &err);

struct AnalyzeOptions {
    std::filesystem::path trace_path;
    std::vector<std::string> metrics;
    std::filesystem::path out_path;
    /// Snapshot times whose distribution sidecars are written next to the CSV.
    std::vector<Round> dists;
};

int cmd_analyze(const AnalyzeOptions &options, std::ostream &out, std::ostream &err);

struct ReportOptions {
    std::filesystem::path csv_path;
    std::vector<std::string> figures;
    std::filesystem::path out_dir;
    /// Snapshot times for distribution figures; empty means every time with sidecars.
    std::vector<Round> at;
};

int cmd_report(const ReportOptions &options, std::ostream &out, std::ostream &err);

/// `<dir>/<stem>_t<t>_<name>.csv` for the analyze CSV `csv_path`.
std::filesystem::path sidecar_path(const std::filesystem::path &csv_path, Round t, const std::string &name);

} // namespace wsn
