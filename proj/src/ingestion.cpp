#include "netclass/ingestion.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace netclass {
namespace {

std::vector<std::string> tokenize(const std::string& line, bool commas_split) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        const bool sep = std::isspace(static_cast<unsigned char>(c)) ||
                         (commas_split && c == ',');
        if (sep) {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::string strip_comment(const std::string& line, char marker) {
    const auto pos = line.find(marker);
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return s;
}

}  // namespace

std::pair<Graph, ParseReport> parse_edge_list(std::istream& in) {
    ParseReport report;
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto tokens = tokenize(strip_comment(line, '#'), true);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw ParseError(line_number, "expected two node labels, got " +
                                              std::to_string(tokens.size()));
        edges.emplace_back(tokens[0], tokens[1]);
    }
    report.edges_read = edges.size();
    BuildResult built = build_graph(edges);
    report.edges_collapsed = built.duplicate_edges_dropped;
    report.self_loops_dropped = built.self_loops_dropped;
    report.nodes_read = built.graph.node_count();
    return {std::move(built.graph), std::move(report)};
}

std::pair<Graph, ParseReport> parse_inp(std::istream& in) {
    static const std::unordered_set<std::string> node_sections = {
        "JUNCTIONS", "RESERVOIRS", "TANKS"};
    static const std::unordered_set<std::string> link_sections = {
        "PIPES", "PUMPS", "VALVES"};

    ParseReport report;
    std::vector<std::string> declared_nodes;
    std::unordered_set<std::string> declared_set;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::size_t> edge_lines;

    std::string line;
    std::string section;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto tokens = tokenize(strip_comment(line, ';'), false);
        if (tokens.empty()) continue;
        if (tokens[0].front() == '[') {
            std::string name = tokens[0];
            const auto close = name.find(']');
            if (close != std::string::npos) name = name.substr(1, close - 1);
            else name = name.substr(1);
            section = upper(name);
            continue;
        }
        if (node_sections.count(section)) {
            const std::string& id = tokens[0];
            if (!declared_set.insert(id).second) {
                report.warnings.push_back("line " + std::to_string(line_number) +
                                          ": duplicate node id '" + id + "'");
            } else {
                declared_nodes.push_back(id);
            }
        } else if (link_sections.count(section)) {
            if (tokens.size() < 3)
                throw ParseError(line_number,
                                 "link needs an id and two endpoint nodes");
            edges.emplace_back(tokens[1], tokens[2]);
            edge_lines.push_back(line_number);
        }
        // unknown sections are skipped
    }

    for (std::size_t t = 0; t < edges.size(); ++t) {
        for (const std::string* endpoint : {&edges[t].first, &edges[t].second}) {
            if (!declared_set.count(*endpoint)) {
                report.warnings.push_back(
                    "line " + std::to_string(edge_lines[t]) + ": endpoint '" +
                    *endpoint + "' not declared in a node section");
                declared_set.insert(*endpoint);
            }
        }
    }

    report.edges_read = edges.size();
    BuildResult built = build_graph(edges, declared_nodes);
    report.edges_collapsed = built.duplicate_edges_dropped;
    report.self_loops_dropped = built.self_loops_dropped;
    report.nodes_read = built.graph.node_count();
    return {std::move(built.graph), std::move(report)};
}

std::pair<Graph, ParseReport> parse_network(std::istream& in, InputFormat format) {
    if (format == InputFormat::edgelist) return parse_edge_list(in);
    if (format == InputFormat::inp) return parse_inp(in);

    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    // first non-comment, non-blank character decides the format
    bool is_inp = false;
    std::istringstream scan(text);
    std::string line;
    while (std::getline(scan, line)) {
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c == '#' || c == ';') break;  // comment line
            is_inp = (c == '[');
            goto decided;
        }
    }
decided:
    std::istringstream replay(text);
    return is_inp ? parse_inp(replay) : parse_edge_list(replay);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (std::uint32_t i = 0; i < g.node_count(); ++i)
        for (std::uint32_t j : g.neighbors(i))
            if (i < j) out << g.label(i) << ' ' << g.label(j) << '\n';
}

}  // namespace netclass
