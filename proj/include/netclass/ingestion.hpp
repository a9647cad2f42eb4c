#ifndef NETCLASS_INGESTION_HPP
#define NETCLASS_INGESTION_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netclass/graph.hpp"

namespace netclass {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    std::size_t line;
};

struct ParseReport {
    std::size_t nodes_read = 0;
    std::size_t edges_read = 0;
    std::size_t edges_collapsed = 0;
    std::size_t self_loops_dropped = 0;
    std::vector<std::string> warnings;
};

/// Plain edge list: one edge per line, two labels separated by whitespace or
/// commas; '#' starts a comment; blank lines ignored.
/// Throws ParseError on a malformed line, std::invalid_argument("empty graph")
/// when no edges remain.
std::pair<Graph, ParseReport> parse_edge_list(std::istream& in);

/// EPANET-style INP subset. Node sections: [JUNCTIONS], [RESERVOIRS],
/// [TANKS]; link sections: [PIPES], [PUMPS], [VALVES]. ';' starts a comment;
/// unknown sections are skipped. Links of any hydraulic type become edges.
std::pair<Graph, ParseReport> parse_inp(std::istream& in);

enum class InputFormat { edgelist, inp, autodetect };

/// Autodetect: a file whose first non-comment character is '[' is INP.
std::pair<Graph, ParseReport> parse_network(std::istream& in,
                                            InputFormat format = InputFormat::autodetect);

/// One "label label" line per edge, endpoints in index order.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace netclass

#endif
