#ifndef NETCLASS_GENERATORS_HPP
#define NETCLASS_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "netclass/graph.hpp"

namespace netclass {

enum class GraphFamily { erdos_renyi, watts_strogatz, barabasi_albert, ring_lattice };

/// Throws std::invalid_argument on an unknown family name.
GraphFamily family_from_string(const std::string& name);
std::string to_string(GraphFamily family);

struct GenSpec {
    GraphFamily family = GraphFamily::erdos_renyi;
    std::size_t n = 0;
    double p = 0.0;              // ER connection probability
    std::size_t base_degree = 0; // WS / ring lattice, even
    double rewire_prob = 0.0;    // WS
    std::size_t m = 0;           // BA attachments per node
    std::uint64_t seed = 0;
};

/// Deterministic given the spec (including seed).
/// Throws std::invalid_argument on invalid parameters.
Graph generate(const GenSpec& spec);

}  // namespace netclass

#endif
