#include "netclass/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace netclass {
namespace {

using AdjacencySets = std::vector<std::unordered_set<std::uint32_t>>;

Graph to_graph(const AdjacencySets& sets) {
    std::vector<std::vector<std::uint32_t>> adjacency(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
        adjacency[i].assign(sets[i].begin(), sets[i].end());
    return Graph(std::move(adjacency));
}

void add_edge(AdjacencySets& sets, std::uint32_t a, std::uint32_t b) {
    sets[a].insert(b);
    sets[b].insert(a);
}

Graph generate_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    AdjacencySets sets(n);
    const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (p >= 1.0) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) add_edge(sets, i, j);
        return to_graph(sets);
    }
    if (p > 0.0) {
        // geometric skipping over the linearized pair index
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const double log1mp = std::log1p(-p);
        std::uint64_t t = 0;
        std::uint64_t row_start = 0;
        std::uint32_t i = 0;
        bool first = true;
        while (true) {
            double u;
            do {
                u = unif(rng);
            } while (u <= 0.0);
            const auto skip =
                static_cast<std::uint64_t>(std::floor(std::log(u) / log1mp));
            t += skip + (first ? 0 : 1);
            first = false;
            if (t >= total) break;
            while (t >= row_start + (n - 1 - i)) {
                row_start += n - 1 - i;
                ++i;
            }
            const auto j = static_cast<std::uint32_t>(i + 1 + (t - row_start));
            add_edge(sets, i, j);
        }
    }
    return to_graph(sets);
}

void build_ring_lattice(AdjacencySets& sets, std::size_t n, std::size_t k) {
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 1; j <= k / 2; ++j)
            add_edge(sets, i, static_cast<std::uint32_t>((i + j) % n));
}

Graph generate_watts_strogatz(std::size_t n, std::size_t k, double beta,
                              std::uint64_t seed) {
    AdjacencySets sets(n);
    build_ring_lattice(sets, n, k);
    if (beta <= 0.0) return to_graph(sets);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(n - 1));

    // original Watts-Strogatz sweep: one lane at a time, rewiring the far
    // endpoint of each clockwise edge
    for (std::uint32_t lane = 1; lane <= k / 2; ++lane) {
        for (std::uint32_t i = 0; i < n; ++i) {
            if (unif(rng) >= beta) continue;
            const auto old_target = static_cast<std::uint32_t>((i + lane) % n);
            std::uint32_t candidate = 0;
            bool found = false;
            for (std::size_t attempt = 0; attempt < 64 * n; ++attempt) {
                candidate = pick(rng);
                if (candidate != i && sets[i].count(candidate) == 0) {
                    found = true;
                    break;
                }
            }
            if (!found) continue;  // node is saturated, keep the lattice edge
            sets[i].erase(old_target);
            sets[old_target].erase(i);
            add_edge(sets, i, candidate);
        }
    }
    return to_graph(sets);
}

Graph generate_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
    AdjacencySets sets(n);
    std::vector<std::uint32_t> attachment_pool;  // one entry per edge endpoint

    // seed component: complete graph on m + 1 nodes
    for (std::uint32_t i = 0; i <= m; ++i)
        for (std::uint32_t j = i + 1; j <= m; ++j) {
            add_edge(sets, i, j);
            attachment_pool.push_back(i);
            attachment_pool.push_back(j);
        }

    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> targets;
    for (std::uint32_t v = static_cast<std::uint32_t>(m + 1); v < n; ++v) {
        targets.clear();
        std::uniform_int_distribution<std::size_t> pick(0, attachment_pool.size() - 1);
        while (targets.size() < m) {
            const std::uint32_t candidate = attachment_pool[pick(rng)];
            if (std::find(targets.begin(), targets.end(), candidate) ==
                targets.end())
                targets.push_back(candidate);
        }
        for (std::uint32_t t : targets) {
            add_edge(sets, v, t);
            attachment_pool.push_back(v);
            attachment_pool.push_back(t);
        }
    }
    return to_graph(sets);
}

}  // namespace

GraphFamily family_from_string(const std::string& name) {
    if (name == "erdos_renyi" || name == "er") return GraphFamily::erdos_renyi;
    if (name == "watts_strogatz" || name == "ws") return GraphFamily::watts_strogatz;
    if (name == "barabasi_albert" || name == "ba") return GraphFamily::barabasi_albert;
    if (name == "ring_lattice" || name == "lattice") return GraphFamily::ring_lattice;
    throw std::invalid_argument("unknown graph family: " + name);
}

std::string to_string(GraphFamily family) {
    switch (family) {
        case GraphFamily::erdos_renyi: return "erdos_renyi";
        case GraphFamily::watts_strogatz: return "watts_strogatz";
        case GraphFamily::barabasi_albert: return "barabasi_albert";
        case GraphFamily::ring_lattice: return "ring_lattice";
    }
    return "erdos_renyi";
}

Graph generate(const GenSpec& spec) {
    if (spec.n < 3) throw std::invalid_argument("need n >= 3");
    switch (spec.family) {
        case GraphFamily::erdos_renyi:
            if (spec.p < 0.0 || spec.p > 1.0)
                throw std::invalid_argument("p must be in [0, 1]");
            return generate_erdos_renyi(spec.n, spec.p, spec.seed);
        case GraphFamily::watts_strogatz:
        case GraphFamily::ring_lattice:
            if (spec.base_degree == 0 || spec.base_degree % 2 != 0 ||
                spec.base_degree >= spec.n)
                throw std::invalid_argument(
                    "base_degree must be even, positive and < n");
            if (spec.family == GraphFamily::ring_lattice) {
                AdjacencySets sets(spec.n);
                build_ring_lattice(sets, spec.n, spec.base_degree);
                return to_graph(sets);
            }
            if (spec.rewire_prob < 0.0 || spec.rewire_prob > 1.0)
                throw std::invalid_argument("rewire_prob must be in [0, 1]");
            return generate_watts_strogatz(spec.n, spec.base_degree,
                                           spec.rewire_prob, spec.seed);
        case GraphFamily::barabasi_albert:
            if (spec.m < 1 || spec.m >= spec.n)
                throw std::invalid_argument("need 1 <= m < n");
            return generate_barabasi_albert(spec.n, spec.m, spec.seed);
    }
    throw std::invalid_argument("unknown graph family");
}

}  // namespace netclass
