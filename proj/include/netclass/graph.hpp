#ifndef NETCLASS_GRAPH_HPP
#define NETCLASS_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace netclass {

/// Immutable undirected simple graph with contiguous node indices.
/// Adjacency lists are sorted; no self-loops, no duplicate neighbors.
class Graph {
public:
    Graph() = default;

    /// Takes ownership of adjacency lists. Lists are sorted on construction;
    /// the caller guarantees symmetry and simplicity (checked in debug builds
    /// via validate()).
    explicit Graph(std::vector<std::vector<std::uint32_t>> adjacency,
                   std::vector<std::string> labels = {});

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<std::uint32_t>& neighbors(std::uint32_t i) const {
        return adjacency_[i];
    }
    const std::vector<std::vector<std::uint32_t>>& adjacency() const {
        return adjacency_;
    }

    std::uint32_t degree(std::uint32_t i) const {
        return static_cast<std::uint32_t>(adjacency_[i].size());
    }

    bool adjacent(std::uint32_t i, std::uint32_t j) const;

    /// Original string identifier of node i; falls back to the decimal index
    /// when the graph was generated rather than parsed.
    std::string label(std::uint32_t i) const;
    bool has_labels() const { return !labels_.empty(); }

    /// Checks symmetry, hollowness and absence of duplicates. Throws
    /// std::logic_error on violation.
    void validate() const;

private:
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

struct BuildResult {
    Graph graph;
    std::size_t duplicate_edges_dropped = 0;
    std::size_t self_loops_dropped = 0;

    std::size_t dropped() const {
        return duplicate_edges_dropped + self_loops_dropped;
    }
};

/// Builds a simple graph from labelled edge pairs. Node indices follow first
/// appearance order of labels; `preseed_labels` may declare nodes up front
/// (possibly isolated) ahead of any edge endpoint.
/// Throws std::invalid_argument on an empty edge sequence or an empty label.
BuildResult build_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& preseed_labels = {});

enum class DegreeFlavor { standard, neighborhood };

struct DegreeSequence {
    DegreeFlavor flavor = DegreeFlavor::standard;
    std::vector<std::uint32_t> values;  // index-aligned with the graph
};

DegreeSequence standard_degrees(const Graph& g);

/// k_n(i): sum of the standard degrees of the nodes adjacent to i.
/// Isolated nodes get 0.
DegreeSequence neighborhood_degrees(const Graph& g);

/// Directed weights on adjacent ordered pairs: w_ij equals the standard
/// degree of the tail node i. Stored aligned with the adjacency lists.
struct StrengthWeights {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::vector<std::vector<std::uint32_t>> weights;  // weights[i][t] = w(i, neighbors(i)[t])

    std::uint32_t weight(const Graph& g, std::uint32_t i, std::uint32_t j) const;
};

StrengthWeights strength_weights(const Graph& g);

/// Node strength under w: values[i] = sum over neighbors j of w_ji.
/// Identical to neighborhood_degrees(g) when w = strength_weights(g).
/// Throws std::invalid_argument if w does not match g.
DegreeSequence strength(const Graph& g, const StrengthWeights& w);

}  // namespace netclass

#endif
