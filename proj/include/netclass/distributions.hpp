#ifndef NETCLASS_DISTRIBUTIONS_HPP
#define NETCLASS_DISTRIBUTIONS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "netclass/graph.hpp"

namespace netclass {

/// Empirical degree distribution: mass(k) = n_k / n over the observed support.
struct EmpiricalDistribution {
    std::vector<std::uint32_t> support;  // sorted distinct observed values
    std::vector<double> mass;            // aligned with support, strictly positive
    std::size_t n = 0;
    double mean = 0.0;
    std::uint32_t min_k = 0;
    std::uint32_t max_k = 0;

    /// 0 when k was not observed.
    double mass_at(std::uint32_t k) const;
};

/// Throws std::invalid_argument on an empty sequence.
EmpiricalDistribution empirical(const DegreeSequence& values);
EmpiricalDistribution empirical(const std::vector<std::uint32_t>& values);

enum class CumulativeDirection { cdf, ccdf };

/// cdf(k) = P(K <= k); ccdf(k) = P(K > k), evaluated on the support.
std::vector<std::pair<std::uint32_t, double>> cumulative(
    const EmpiricalDistribution& d, CumulativeDirection direction);

struct PoissonModel {
    double lambda = 0.0;
};

/// e^-lambda lambda^k / k!, evaluated in log space.
double poisson_pmf(const PoissonModel& m, std::uint32_t k);

double poisson_cdf(const PoissonModel& m, std::uint32_t k);

struct ParetoModel {
    double gamma = 0.0;
    double norm = 1.0;
    std::uint32_t support_min = 1;
    std::uint32_t support_max = 0;  // 0 means unbounded (norm as given)
};

/// Discrete power law normalized over [support_min, support_max].
ParetoModel normalized_pareto(double gamma, std::uint32_t support_min,
                              std::uint32_t support_max);

/// norm * k^-gamma. Throws std::domain_error when k < support_min.
double pareto_pmf(const ParetoModel& m, std::uint32_t k);

/// p = <k> / (n - 1). Throws std::invalid_argument when n < 2.
double connection_probability(double mean_degree, std::size_t n);

}  // namespace netclass

#endif
