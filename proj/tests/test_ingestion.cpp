#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "netclass/generators.hpp"
#include "netclass/ingestion.hpp"

using namespace netclass;

namespace {

std::pair<Graph, ParseReport> parse_edges(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::pair<Graph, ParseReport> parse_inp_text(const std::string& text) {
    std::istringstream in(text);
    return parse_inp(in);
}

std::vector<std::pair<std::string, std::string>> labelled_edges(const Graph& g) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::uint32_t i = 0; i < g.node_count(); ++i)
        for (std::uint32_t j : g.neighbors(i))
            if (i < j) {
                auto a = g.label(i), b = g.label(j);
                if (b < a) std::swap(a, b);
                edges.emplace_back(std::move(a), std::move(b));
            }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

TEST_CASE("edge list: path graph") {
    auto [g, report] = parse_edges("a b\nb c\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(report.edges_read == 2);
    CHECK(report.edges_collapsed == 0);
}

TEST_CASE("edge list: comments and duplicate collapse") {
    auto [g, report] = parse_edges("a b\n# note\na b\n");
    CHECK(g.edge_count() == 1);
    CHECK(report.edges_read == 2);
    CHECK(report.edges_collapsed == 1);
    CHECK(g.edge_count() ==
          report.edges_read - report.edges_collapsed - report.self_loops_dropped);
}

TEST_CASE("edge list: commas and blank lines") {
    auto [g, report] = parse_edges("\na,b\n\nb , c\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list: malformed line carries its number") {
    try {
        parse_edges("a\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
    }
    try {
        parse_edges("a b\nx y z\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("edge list: empty input is an empty graph error") {
    CHECK_THROWS_WITH_AS(parse_edges("# only comments\n"), "empty graph",
                         std::invalid_argument);
}

TEST_CASE("inp: minimal junctions and pipe") {
    auto [g, report] = parse_inp_text(
        "[JUNCTIONS]\n"
        "J1  100\n"
        "J2  105\n"
        "[PIPES]\n"
        "P1  J1  J2  1000  200\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(report.warnings.empty());
}

TEST_CASE("inp: pumps and valves are topological edges") {
    auto [g, report] = parse_inp_text(
        "[JUNCTIONS]\nJ1\nJ2\nJ3\n"
        "[RESERVOIRS]\nR1\n"
        "[PIPES]\nP1 J1 J2\n"
        "[PUMPS]\nPU1 R1 J1 HEAD curve1\n"
        "[VALVES]\nV1 J2 J3 200 PRV 50\n");
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("inp: comments, unknown sections, isolated nodes") {
    auto [g, report] = parse_inp_text(
        "; a header comment\n"
        "[TITLE]\nSome network\n"
        "[JUNCTIONS]\n"
        "J1 ; inline comment\n"
        "J2\n"
        "J3\n"
        "[OPTIONS]\nUNITS LPS\n"
        "[PIPES]\nP1 J1 J2\n");
    CHECK(g.node_count() == 3);  // J3 is retained though isolated
    CHECK(g.edge_count() == 1);
    CHECK(standard_degrees(g).values[2] == 0);
}

TEST_CASE("inp: undeclared endpoint is created with a warning") {
    auto [g, report] = parse_inp_text(
        "[JUNCTIONS]\nJ1\n"
        "[PIPES]\nP1 J1 GHOST\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].find("GHOST") != std::string::npos);
}

TEST_CASE("inp: duplicate node id warns but does not fail") {
    auto [g, report] = parse_inp_text(
        "[JUNCTIONS]\nJ1\n[TANKS]\nJ1\nT1\n"
        "[PIPES]\nP1 J1 T1\n");
    CHECK(g.node_count() == 2);
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("inp: short link line is an error with its number") {
    try {
        parse_inp_text("[JUNCTIONS]\nJ1\n[PIPES]\nP1 J1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("inp: node section order does not change the edge set") {
    const std::string links = "[PIPES]\nP1 A B\nP2 B C\nP3 C A\n";
    auto [g1, r1] = parse_inp_text("[JUNCTIONS]\nA\nB\nC\n" + links);
    auto [g2, r2] = parse_inp_text("[JUNCTIONS]\nC\nA\nB\n" + links);
    CHECK(labelled_edges(g1) == labelled_edges(g2));
}

TEST_CASE("format autodetection") {
    std::istringstream inp("; comment first\n[JUNCTIONS]\nJ1\nJ2\n[PIPES]\nP1 J1 J2\n");
    auto [g1, r1] = parse_network(inp);
    CHECK(g1.edge_count() == 1);

    std::istringstream edges("# comment first\na b\n");
    auto [g2, r2] = parse_network(edges);
    CHECK(g2.edge_count() == 1);
    CHECK(g2.label(0) == "a");
}

TEST_CASE("round-trip: export and re-parse preserves the labelled edge set") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = generate({GraphFamily::erdos_renyi, 60, 0.08, 0, 0, 0, seed});
        if (g.edge_count() == 0) continue;
        std::ostringstream out;
        write_edge_list(g, out);
        auto [reparsed, report] = parse_edges(out.str());
        CHECK(labelled_edges(reparsed) == labelled_edges(g));
        CHECK(report.edges_read == g.edge_count());
        CHECK(report.edges_collapsed == 0);
    }
}
