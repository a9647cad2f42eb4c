#ifndef NETCLASS_STATFIT_HPP
#define NETCLASS_STATFIT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netclass/distributions.hpp"
#include "netclass/graph.hpp"

namespace netclass {

/// Raised when a model fit has too few distinct support points.
struct DegenerateSupportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KsResult {
    double statistic = 0.0;  // max ECDF gap D
    double p_value = 0.0;    // asymptotic two-sample p
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::uint64_t seed = 0;  // 0 when no model sample was drawn
};

/// lambda = mean of the data (method of moments).
/// Throws std::invalid_argument on zero mean.
PoissonModel fit_poisson(const EmpiricalDistribution& d);

/// gamma = negated least-squares slope of (log k, log mass) over the
/// positive-mass support with k >= 1; normalized over [support_min, max_k].
/// Throws DegenerateSupportError with fewer than 2 usable points.
ParetoModel fit_pareto(const EmpiricalDistribution& d);

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t points = 0;
};

/// Least-squares line through (log k, log mass) over positive-mass support
/// points with k >= 1, optionally restricted to k > lower_bound.
LogLogFit loglog_fit(const EmpiricalDistribution& d, std::uint32_t lower_bound = 0);

/// Two-sample Kolmogorov-Smirnov test; asymptotic p-value with effective
/// size n1*n2/(n1+n2). Throws std::invalid_argument on an empty sample.
KsResult ks_two_sample(const std::vector<std::uint32_t>& sample_a,
                       const std::vector<std::uint32_t>& sample_b);

/// Draws one synthetic sample of the same size from the model with the
/// seeded generator, then delegates to ks_two_sample.
KsResult ks_vs_poisson(const std::vector<std::uint32_t>& values,
                       const PoissonModel& m, std::uint64_t seed);
KsResult ks_vs_poisson(const DegreeSequence& values, const PoissonModel& m,
                       std::uint64_t seed);

/// Same protocol for the discrete pareto model; values below support_min are
/// excluded from the comparison.
KsResult ks_vs_pareto(const std::vector<std::uint32_t>& values,
                      const ParetoModel& m, std::uint64_t seed);

enum class VerdictLabel { poisson, pareto, mixed, inconclusive };

std::string to_string(VerdictLabel label);

struct ClassifyThresholds {
    double significance = 0.05;  // KS non-rejection level
    double tail_r2 = 0.9;        // log-log linearity for the mixed regime
};

struct Verdict {
    VerdictLabel label = VerdictLabel::inconclusive;
    KsResult poisson_ks;
    KsResult pareto_ks;
    std::optional<std::uint32_t> tail_break;  // degree where the Poisson body ends
    std::optional<KsResult> body_poisson_ks;  // fit quality restricted to k <= tail_break
    std::string note;
};

/// Fits both models and applies the decision rule:
///   1. poisson when its p-value clears `significance` and is not below
///      pareto's; pareto symmetrically;
///   2. mixed when a Poisson body (k <= tail_break, non-rejecting KS) pairs
///      with a log-log linear tail (R^2 >= tail_r2, >= 3 support points);
///   3. when both models are rejected, the one whose KS statistic undercuts
///      the other by more than the KS significance scale 1.36/sqrt(n_eff)
///      wins;
///   4. inconclusive otherwise.
/// Deterministic given (values, seed, thresholds).
Verdict classify(const DegreeSequence& values, std::uint64_t seed,
                 const ClassifyThresholds& thresholds = {});

}  // namespace netclass

#endif
