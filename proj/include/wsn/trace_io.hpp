#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsn/graph.hpp"

namespace wsn {

/// Malformed trace text; `line()` is 1-based.
class TraceParseError : public std::runtime_error {
public:
    TraceParseError(std::size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed trace text describing an invalid trace.
class TraceValidationError : public std::runtime_error {
public:
    explicit TraceValidationError(std::vector<Violation> violations);

    const std::vector<Violation> &violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

// JSON Lines: the config object on line 1, then one snapshot object per line,
// each line terminated by LF.
void write_trace(std::ostream &out, const TemporalTrace &trace);
std::string trace_to_string(const TemporalTrace &trace);
void trace_write(const TemporalTrace &trace, const std::filesystem::path &path);

TemporalTrace read_trace(std::istream &in);
TemporalTrace trace_from_string(const std::string &text);
TemporalTrace trace_read(const std::filesystem::path &path);

nlohmann::json snapshot_to_json(const GraphSnapshot &s);
GraphSnapshot snapshot_from_json(const nlohmann::json &j);

} // namespace wsn
