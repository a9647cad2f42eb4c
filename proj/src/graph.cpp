#include "netclass/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace netclass {

Graph::Graph(std::vector<std::vector<std::uint32_t>> adjacency,
             std::vector<std::string> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
    std::size_t half_degree_sum = 0;
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        half_degree_sum += nbrs.size();
    }
    edge_count_ = half_degree_sum / 2;
#ifndef NDEBUG
    validate();
#endif
}

bool Graph::adjacent(std::uint32_t i, std::uint32_t j) const {
    const auto& nbrs = adjacency_[i];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::string Graph::label(std::uint32_t i) const {
    if (i < labels_.size()) return labels_[i];
    return std::to_string(i);
}

void Graph::validate() const {
    std::size_t degree_sum = 0;
    for (std::uint32_t i = 0; i < adjacency_.size(); ++i) {
        const auto& nbrs = adjacency_[i];
        degree_sum += nbrs.size();
        for (std::size_t t = 0; t < nbrs.size(); ++t) {
            std::uint32_t j = nbrs[t];
            if (j >= adjacency_.size())
                throw std::logic_error("neighbor index out of range");
            if (j == i) throw std::logic_error("self-loop in adjacency");
            if (t > 0 && nbrs[t - 1] == j)
                throw std::logic_error("duplicate neighbor");
            if (!adjacent(j, i))
                throw std::logic_error("asymmetric adjacency");
        }
    }
    if (degree_sum != 2 * edge_count_)
        throw std::logic_error("edge count inconsistent with degree sum");
}

BuildResult build_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& preseed_labels) {
    if (edges.empty() && preseed_labels.empty())
        throw std::invalid_argument("empty graph");

    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& label) {
        if (label.empty()) throw std::invalid_argument("empty node label");
        auto [it, inserted] =
            index.emplace(label, static_cast<std::uint32_t>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    for (const auto& label : preseed_labels) intern(label);

    BuildResult result;
    std::vector<std::vector<std::uint32_t>> adjacency(labels.size());
    auto ensure_node = [&](std::uint32_t idx) {
        if (idx >= adjacency.size()) adjacency.resize(idx + 1);
    };

    for (const auto& [a, b] : edges) {
        std::uint32_t u = intern(a);
        std::uint32_t v = intern(b);
        ensure_node(std::max(u, v));
        if (u == v) {
            ++result.self_loops_dropped;
            continue;
        }
        auto& nu = adjacency[u];
        if (std::find(nu.begin(), nu.end(), v) != nu.end()) {
            ++result.duplicate_edges_dropped;
            continue;
        }
        nu.push_back(v);
        adjacency[v].push_back(u);
    }

    if (edges.empty()) throw std::invalid_argument("empty graph");
    result.graph = Graph(std::move(adjacency), std::move(labels));
    return result;
}

DegreeSequence standard_degrees(const Graph& g) {
    DegreeSequence seq{DegreeFlavor::standard, {}};
    seq.values.reserve(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i)
        seq.values.push_back(g.degree(i));
    return seq;
}

DegreeSequence neighborhood_degrees(const Graph& g) {
    DegreeSequence seq{DegreeFlavor::neighborhood, {}};
    seq.values.reserve(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        std::uint64_t sum = 0;
        for (std::uint32_t j : g.neighbors(i)) sum += g.degree(j);
        seq.values.push_back(static_cast<std::uint32_t>(sum));
    }
    return seq;
}

StrengthWeights strength_weights(const Graph& g) {
    StrengthWeights w;
    w.node_count = g.node_count();
    w.edge_count = g.edge_count();
    w.weights.resize(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i)
        w.weights[i].assign(g.neighbors(i).size(), g.degree(i));
    return w;
}

std::uint32_t StrengthWeights::weight(const Graph& g, std::uint32_t i,
                                      std::uint32_t j) const {
    const auto& nbrs = g.neighbors(i);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j);
    if (it == nbrs.end() || *it != j)
        throw std::invalid_argument("weight requested for non-adjacent pair");
    return weights[i][static_cast<std::size_t>(it - nbrs.begin())];
}

DegreeSequence strength(const Graph& g, const StrengthWeights& w) {
    if (w.node_count != g.node_count() || w.edge_count != g.edge_count())
        throw std::invalid_argument("weights do not match graph");
    for (std::uint32_t i = 0; i < g.node_count(); ++i)
        if (w.weights[i].size() != g.neighbors(i).size())
            throw std::invalid_argument("weights do not match graph");

    DegreeSequence seq{DegreeFlavor::neighborhood, {}};
    seq.values.reserve(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        std::uint64_t sum = 0;
        for (std::uint32_t j : g.neighbors(i)) sum += w.weight(g, j, i);
        seq.values.push_back(static_cast<std::uint32_t>(sum));
    }
    return seq;
}

}  // namespace netclass
