#include "netclass/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace netclass {

double EmpiricalDistribution::mass_at(std::uint32_t k) const {
    auto it = std::lower_bound(support.begin(), support.end(), k);
    if (it == support.end() || *it != k) return 0.0;
    return mass[static_cast<std::size_t>(it - support.begin())];
}

EmpiricalDistribution empirical(const std::vector<std::uint32_t>& values) {
    if (values.empty()) throw std::invalid_argument("empty degree sequence");

    std::map<std::uint32_t, std::size_t> counts;
    std::uint64_t sum = 0;
    for (std::uint32_t v : values) {
        ++counts[v];
        sum += v;
    }

    EmpiricalDistribution d;
    d.n = values.size();
    const double n = static_cast<double>(d.n);
    for (const auto& [k, c] : counts) {
        d.support.push_back(k);
        d.mass.push_back(static_cast<double>(c) / n);
    }
    d.min_k = d.support.front();
    d.max_k = d.support.back();
    d.mean = static_cast<double>(sum) / n;
    return d;
}

EmpiricalDistribution empirical(const DegreeSequence& values) {
    return empirical(values.values);
}

std::vector<std::pair<std::uint32_t, double>> cumulative(
    const EmpiricalDistribution& d, CumulativeDirection direction) {
    std::vector<std::pair<std::uint32_t, double>> out;
    out.reserve(d.support.size());
    double acc = 0.0;
    for (std::size_t t = 0; t < d.support.size(); ++t) {
        acc += d.mass[t];
        out.emplace_back(d.support[t], acc);
    }
    if (direction == CumulativeDirection::cdf) {
        // force exact endpoint despite float accumulation
        out.back().second = std::min(out.back().second, 1.0);
        return out;
    }
    for (auto& [k, v] : out) v = std::max(0.0, 1.0 - v);
    out.back().second = 0.0;
    return out;
}

double poisson_pmf(const PoissonModel& m, std::uint32_t k) {
    if (m.lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
    const double log_p = -m.lambda + k * std::log(m.lambda) -
                         std::lgamma(static_cast<double>(k) + 1.0);
    return std::exp(log_p);
}

double poisson_cdf(const PoissonModel& m, std::uint32_t k) {
    double acc = 0.0;
    for (std::uint32_t t = 0; t <= k; ++t) acc += poisson_pmf(m, t);
    return std::min(acc, 1.0);
}

ParetoModel normalized_pareto(double gamma, std::uint32_t support_min,
                              std::uint32_t support_max) {
    if (gamma <= 0.0) throw std::invalid_argument("gamma must be positive");
    if (support_min < 1 || support_max < support_min)
        throw std::invalid_argument("invalid pareto support");
    double total = 0.0;
    for (std::uint32_t k = support_min; k <= support_max; ++k)
        total += std::pow(static_cast<double>(k), -gamma);
    return ParetoModel{gamma, 1.0 / total, support_min, support_max};
}

double pareto_pmf(const ParetoModel& m, std::uint32_t k) {
    if (k < m.support_min)
        throw std::domain_error("k below pareto support minimum");
    return m.norm * std::pow(static_cast<double>(k), -m.gamma);
}

double connection_probability(double mean_degree, std::size_t n) {
    if (n < 2) throw std::invalid_argument("need at least two nodes");
    if (mean_degree < 0.0) throw std::invalid_argument("negative mean degree");
    return mean_degree / static_cast<double>(n - 1);
}

}  // namespace netclass
