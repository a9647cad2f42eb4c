#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "netclass/graph.hpp"

using namespace netclass;

namespace {

// fragment around nodes 1 and 2 with k(1)=3, k(2)=4, k(3)=k(4)=k(5)=3, k(6)=4
std::vector<std::pair<std::string, std::string>> fragment_edges() {
    return {{"1", "2"},  {"1", "3"},  {"1", "4"},  {"2", "3"},  {"2", "5"},
            {"2", "6"},  {"3", "7"},  {"4", "8"},  {"4", "9"},  {"5", "10"},
            {"5", "11"}, {"6", "12"}, {"6", "13"}, {"6", "14"}};
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::vector<std::vector<std::uint32_t>> adjacency(n);
    std::bernoulli_distribution coin(p);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (coin(rng)) {
                adjacency[i].push_back(j);
                adjacency[j].push_back(i);
            }
    return Graph(std::move(adjacency));
}

}  // namespace

TEST_CASE("build_graph: single edge") {
    auto built = build_graph({{"a", "b"}});
    CHECK(built.graph.node_count() == 2);
    CHECK(built.graph.edge_count() == 1);
    CHECK(built.dropped() == 0);
}

TEST_CASE("build_graph: duplicates and self-loops are dropped") {
    auto built = build_graph({{"a", "b"}, {"b", "a"}, {"a", "a"}});
    CHECK(built.graph.node_count() == 2);
    CHECK(built.graph.edge_count() == 1);
    CHECK(built.duplicate_edges_dropped == 1);
    CHECK(built.self_loops_dropped == 1);
    CHECK(built.dropped() == 2);
}

TEST_CASE("build_graph: errors") {
    CHECK_THROWS_WITH_AS(build_graph({}), "empty graph", std::invalid_argument);
    CHECK_THROWS_AS(build_graph({{"a", ""}}), std::invalid_argument);
}

TEST_CASE("build_graph: first-appearance indexing and labels") {
    auto built = build_graph({{"x", "y"}, {"y", "z"}});
    CHECK(built.graph.label(0) == "x");
    CHECK(built.graph.label(1) == "y");
    CHECK(built.graph.label(2) == "z");
}

TEST_CASE("fragment degrees") {
    auto g = build_graph(fragment_edges()).graph;
    auto k = standard_degrees(g);
    CHECK(k.values[0] == 3);  // node "1"
    CHECK(k.values[1] == 4);  // node "2"
}

TEST_CASE("standard degrees on ring and star") {
    std::vector<std::pair<std::string, std::string>> ring;
    for (int i = 0; i < 6; ++i)
        ring.emplace_back(std::to_string(i), std::to_string((i + 1) % 6));
    auto g = build_graph(ring).graph;
    for (auto v : standard_degrees(g).values) CHECK(v == 2);

    std::vector<std::pair<std::string, std::string>> star;
    for (int i = 1; i <= 5; ++i) star.emplace_back("c", std::to_string(i));
    auto s = build_graph(star).graph;
    auto k = standard_degrees(s);
    CHECK(k.values[0] == 5);
    for (std::size_t i = 1; i < k.values.size(); ++i) CHECK(k.values[i] == 1);
}

TEST_CASE("neighborhood degrees on the fragment") {
    auto g = build_graph(fragment_edges()).graph;
    auto kn = neighborhood_degrees(g);
    CHECK(kn.flavor == DegreeFlavor::neighborhood);
    CHECK(kn.values[0] == 10);  // node "1": 4 + 3 + 3
    CHECK(kn.values[1] == 13);  // node "2": 3 + 3 + 3 + 4
}

TEST_CASE("neighborhood degrees on ring and path") {
    std::vector<std::pair<std::string, std::string>> ring;
    for (int i = 0; i < 7; ++i)
        ring.emplace_back(std::to_string(i), std::to_string((i + 1) % 7));
    auto g = build_graph(ring).graph;
    for (auto v : neighborhood_degrees(g).values) CHECK(v == 4);

    auto path = build_graph({{"a", "b"}, {"b", "c"}}).graph;
    auto kn = neighborhood_degrees(path);
    CHECK(kn.values[0] == 2);
    CHECK(kn.values[1] == 2);
    CHECK(kn.values[2] == 2);
}

TEST_CASE("branch end: degree-1 node with a degree-2 neighbor has k_n = 2") {
    auto g = build_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "e"}}).graph;
    auto kn = neighborhood_degrees(g);
    CHECK(standard_degrees(g).values[0] == 1);
    CHECK(kn.values[0] == 2);
}

TEST_CASE("strength weights on the fragment") {
    auto g = build_graph(fragment_edges()).graph;
    auto w = strength_weights(g);
    // w_12 = k(1) = 3, w_21 = k(2) = 4
    CHECK(w.weight(g, 0, 1) == 3);
    CHECK(w.weight(g, 1, 0) == 4);
}

TEST_CASE("strength weights: single edge and star") {
    auto e = build_graph({{"a", "b"}}).graph;
    auto we = strength_weights(e);
    CHECK(we.weight(e, 0, 1) == 1);
    CHECK(we.weight(e, 1, 0) == 1);

    std::vector<std::pair<std::string, std::string>> star;
    for (int i = 1; i <= 5; ++i) star.emplace_back("c", std::to_string(i));
    auto s = build_graph(star).graph;
    auto ws = strength_weights(s);
    CHECK(ws.weight(s, 0, 1) == 5);
    CHECK(ws.weight(s, 1, 0) == 1);
}

TEST_CASE("strength equals neighborhood degrees on the fragment") {
    auto g = build_graph(fragment_edges()).graph;
    auto kn = neighborhood_degrees(g);
    auto st = strength(g, strength_weights(g));
    CHECK(st.values == kn.values);
    CHECK(st.values[0] == 10);
}

TEST_CASE("strength rejects mismatched weights") {
    auto g = build_graph(fragment_edges()).graph;
    auto other = build_graph({{"a", "b"}}).graph;
    auto w = strength_weights(other);
    CHECK_THROWS_AS(strength(g, w), std::invalid_argument);
}

TEST_CASE("isolated node has zero degrees and strength") {
    auto built = build_graph({{"a", "b"}}, {"lonely", "a", "b"});
    const Graph& g = built.graph;
    CHECK(g.node_count() == 3);
    CHECK(standard_degrees(g).values[0] == 0);
    CHECK(neighborhood_degrees(g).values[0] == 0);
    CHECK(strength(g, strength_weights(g)).values[0] == 0);
}

TEST_CASE("identities hold on 100 random graphs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 5 + rng() % 60;
        const double p = 0.02 + 0.3 * (trial % 10) / 10.0;
        Graph g = random_graph(rng, n, p);

        auto k = standard_degrees(g);
        auto kn = neighborhood_degrees(g);

        std::uint64_t degree_sum = 0, kn_sum = 0, sq_sum = 0;
        for (auto v : k.values) {
            degree_sum += v;
            sq_sum += static_cast<std::uint64_t>(v) * v;
        }
        for (auto v : kn.values) kn_sum += v;

        CHECK(degree_sum == 2 * g.edge_count());
        CHECK(kn_sum == sq_sum);
        CHECK(strength(g, strength_weights(g)).values == kn.values);

        for (std::uint32_t i = 0; i < g.node_count(); ++i)
            if (k.values[i] > 0) CHECK(kn.values[i] >= k.values[i]);
    }
}
