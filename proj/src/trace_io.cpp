#include "wsn/trace_io.hpp"

#include <fstream>
#include <sstream>

namespace wsn {

namespace {

std::string summarize(const std::vector<Violation> &violations) {
    std::string text = "invalid trace";
    for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
        text += (i ? "; " : ": ") + violations[i].message;
    if (violations.size() > 5)
        text += "; ... (" + std::to_string(violations.size()) + " violations)";
    return text;
}

} // namespace

TraceValidationError::TraceValidationError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

nlohmann::json snapshot_to_json(const GraphSnapshot &s) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto &node : s.nodes)
        nodes.push_back({{"id", node.id},
                         {"role", to_string(node.role)},
                         {"x", node.x},
                         {"y", node.y},
                         {"energy", node.energy},
                         {"mode", to_string(node.mode)}});
    nlohmann::json links = nlohmann::json::array();
    for (const auto &link : s.links)
        links.push_back({link.src, link.dst});
    return {{"t", s.t}, {"nodes", std::move(nodes)}, {"links", std::move(links)}};
}

GraphSnapshot snapshot_from_json(const nlohmann::json &j) {
    GraphSnapshot s;
    j.at("t").get_to(s.t);
    for (const auto &node : j.at("nodes")) {
        NodeRecord r;
        node.at("id").get_to(r.id);
        r.role = parse_role(node.at("role").get<std::string>());
        node.at("x").get_to(r.x);
        node.at("y").get_to(r.y);
        node.at("energy").get_to(r.energy);
        r.mode = parse_mode(node.at("mode").get<std::string>());
        s.nodes.push_back(r);
    }
    for (const auto &link : j.at("links")) {
        if (!link.is_array() || link.size() != 2)
            throw std::invalid_argument("link must be a [src, dst] pair");
        s.links.push_back({link.at(0).get<NodeId>(), link.at(1).get<NodeId>()});
    }
    return s;
}

void write_trace(std::ostream &out, const TemporalTrace &trace) {
    auto violations = validate(trace);
    if (!violations.empty())
        throw TraceValidationError(std::move(violations));
    out << nlohmann::json(trace.config).dump() << '\n';
    for (const auto &s : trace.snapshots)
        out << snapshot_to_json(s).dump() << '\n';
}

std::string trace_to_string(const TemporalTrace &trace) {
    std::ostringstream out;
    write_trace(out, trace);
    return out.str();
}

void trace_write(const TemporalTrace &trace, const std::filesystem::path &path) {
    const auto text = trace_to_string(trace);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

TemporalTrace read_trace(std::istream &in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return trace_from_string(buf.str());
}

TemporalTrace trace_from_string(const std::string &text) {
    if (text.empty())
        throw TraceParseError(1, "empty trace: missing config line");
    TemporalTrace trace;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        ++line_no;
        const auto end = text.find('\n', start);
        if (end == std::string::npos)
            throw TraceParseError(line_no, "truncated: line is not terminated by LF");
        const std::string_view line(text.data() + start, end - start);
        start = end + 1;
        try {
            auto j = nlohmann::json::parse(line);
            if (line_no == 1) {
                trace.config = j.get<SimConfig>();
                validate(trace.config);
            } else {
                trace.snapshots.push_back(snapshot_from_json(j));
            }
        } catch (const TraceParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw TraceParseError(line_no, e.what());
        }
    }
    auto violations = validate(trace);
    if (!violations.empty())
        throw TraceValidationError(std::move(violations));
    return trace;
}

TemporalTrace trace_read(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path.string() + "'");
    return read_trace(in);
}

} // namespace wsn
