#include "netclass/statfit.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace netclass {
namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 step, so sub-streams of one user seed are decorrelated
    std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double ks_asymptotic_p(double d, std::size_t n1, std::size_t n2) {
    const double ne = static_cast<double>(n1) * static_cast<double>(n2) /
                      static_cast<double>(n1 + n2);
    const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
    if (lambda < 1e-9) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 101; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        if (term < 1e-16) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

std::vector<std::uint32_t> sample_poisson(const PoissonModel& m, std::size_t n,
                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::poisson_distribution<std::int64_t> dist(m.lambda);
    std::vector<std::uint32_t> out;
    out.reserve(n);
    for (std::size_t t = 0; t < n; ++t)
        out.push_back(static_cast<std::uint32_t>(std::max<std::int64_t>(0, dist(rng))));
    return out;
}

std::vector<std::uint32_t> sample_pareto(const ParetoModel& m, std::size_t n,
                                         std::uint64_t seed) {
    std::vector<double> cum;
    cum.reserve(m.support_max - m.support_min + 1);
    double acc = 0.0;
    for (std::uint32_t k = m.support_min; k <= m.support_max; ++k) {
        acc += pareto_pmf(m, k);
        cum.push_back(acc);
    }
    const double total = cum.back();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, total);
    std::vector<std::uint32_t> out;
    out.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double u = unif(rng);
        auto it = std::lower_bound(cum.begin(), cum.end(), u);
        out.push_back(m.support_min +
                      static_cast<std::uint32_t>(it - cum.begin()));
    }
    return out;
}

}  // namespace

PoissonModel fit_poisson(const EmpiricalDistribution& d) {
    if (d.mean <= 0.0) throw std::invalid_argument("zero mean degree");
    return PoissonModel{d.mean};
}

LogLogFit loglog_fit(const EmpiricalDistribution& d, std::uint32_t lower_bound) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    std::size_t m = 0;
    for (std::size_t t = 0; t < d.support.size(); ++t) {
        const std::uint32_t k = d.support[t];
        if (k < 1 || k <= lower_bound) continue;
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(d.mass[t]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        ++m;
    }
    LogLogFit fit;
    fit.points = m;
    if (m < 2) return fit;
    const double dm = static_cast<double>(m);
    const double cov = sxy - sx * sy / dm;
    const double var_x = sxx - sx * sx / dm;
    const double var_y = syy - sy * sy / dm;
    if (var_x <= 0.0) return fit;
    fit.slope = cov / var_x;
    fit.intercept = (sy - fit.slope * sx) / dm;
    fit.r_squared = var_y > 0.0 ? (cov * cov) / (var_x * var_y) : 1.0;
    return fit;
}

ParetoModel fit_pareto(const EmpiricalDistribution& d) {
    const LogLogFit fit = loglog_fit(d);
    if (fit.points < 2) throw DegenerateSupportError("degenerate support");
    const double gamma = -fit.slope;
    if (gamma <= 0.0)
        throw DegenerateSupportError("mass not decreasing: no pareto exponent");
    const std::uint32_t support_min = std::max<std::uint32_t>(1, d.min_k);
    return normalized_pareto(gamma, support_min, d.max_k);
}

KsResult ks_two_sample(const std::vector<std::uint32_t>& sample_a,
                       const std::vector<std::uint32_t>& sample_b) {
    if (sample_a.empty() || sample_b.empty())
        throw std::invalid_argument("empty sample");
    std::vector<std::uint32_t> a(sample_a), b(sample_b);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    const std::size_t n1 = a.size(), n2 = b.size();
    std::size_t i = 0, j = 0;
    double d_max = 0.0;
    while (i < n1 && j < n2) {
        const std::uint32_t va = a[i], vb = b[j];
        const std::uint32_t v = std::min(va, vb);
        while (i < n1 && a[i] == v) ++i;
        while (j < n2 && b[j] == v) ++j;
        d_max = std::max(d_max,
                         std::abs(static_cast<double>(i) / n1 -
                                  static_cast<double>(j) / n2));
    }
    // past this point one ECDF is pinned at its final step; the remaining
    // gap is monotone toward 0
    d_max = std::max(d_max, std::abs(static_cast<double>(i) / n1 -
                                     static_cast<double>(j) / n2));

    KsResult r;
    r.statistic = d_max;
    r.p_value = ks_asymptotic_p(d_max, n1, n2);
    r.n1 = n1;
    r.n2 = n2;
    return r;
}

KsResult ks_vs_poisson(const std::vector<std::uint32_t>& values,
                       const PoissonModel& m, std::uint64_t seed) {
    if (values.empty()) throw std::invalid_argument("empty sample");
    const auto synthetic = sample_poisson(m, values.size(), seed);
    KsResult r = ks_two_sample(values, synthetic);
    r.seed = seed;
    return r;
}

KsResult ks_vs_poisson(const DegreeSequence& values, const PoissonModel& m,
                       std::uint64_t seed) {
    return ks_vs_poisson(values.values, m, seed);
}

KsResult ks_vs_pareto(const std::vector<std::uint32_t>& values,
                      const ParetoModel& m, std::uint64_t seed) {
    std::vector<std::uint32_t> in_support;
    in_support.reserve(values.size());
    for (std::uint32_t v : values)
        if (v >= m.support_min) in_support.push_back(v);
    if (in_support.empty()) throw std::invalid_argument("empty sample");
    const auto synthetic = sample_pareto(m, in_support.size(), seed);
    KsResult r = ks_two_sample(in_support, synthetic);
    r.seed = seed;
    return r;
}

std::string to_string(VerdictLabel label) {
    switch (label) {
        case VerdictLabel::poisson: return "poisson";
        case VerdictLabel::pareto: return "pareto";
        case VerdictLabel::mixed: return "mixed";
        case VerdictLabel::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

struct MixedCandidate {
    std::uint32_t tail_break;
    KsResult body_ks;
    double tail_r2;
};

// Scans break degrees in [ceil(mean), max_k - 3] for a non-rejecting Poisson
// body paired with a log-log linear tail of at least 3 support points.
std::optional<MixedCandidate> scan_mixed(const std::vector<std::uint32_t>& values,
                                         const EmpiricalDistribution& emp,
                                         std::uint64_t seed,
                                         const ClassifyThresholds& thresholds) {
    std::optional<MixedCandidate> best;
    if (emp.max_k < 3) return best;
    const auto lo = static_cast<std::uint32_t>(std::ceil(emp.mean));
    const std::uint32_t hi = emp.max_k - 3;
    for (std::uint32_t b = lo; b <= hi; ++b) {
        std::vector<std::uint32_t> body;
        for (std::uint32_t v : values)
            if (v <= b) body.push_back(v);
        if (body.size() < 10) continue;

        const LogLogFit tail = loglog_fit(emp, b);
        if (tail.points < 3 || tail.slope >= 0.0 ||
            tail.r_squared < thresholds.tail_r2)
            continue;

        EmpiricalDistribution body_emp = empirical(body);
        if (body_emp.mean <= 0.0) continue;
        KsResult body_ks = ks_vs_poisson(body, PoissonModel{body_emp.mean},
                                         mix_seed(seed, 100 + b));
        if (body_ks.p_value < thresholds.significance) continue;

        if (!best || body_ks.p_value > best->body_ks.p_value)
            best = MixedCandidate{b, body_ks, tail.r_squared};
    }
    return best;
}

}  // namespace

Verdict classify(const DegreeSequence& values, std::uint64_t seed,
                 const ClassifyThresholds& thresholds) {
    const EmpiricalDistribution emp = empirical(values);
    Verdict v;

    if (emp.mean <= 0.0) {
        v.note = "zero mean degree";
        return v;
    }

    const PoissonModel poisson = fit_poisson(emp);
    v.poisson_ks = ks_vs_poisson(values.values, poisson, mix_seed(seed, 1));

    bool pareto_ok = true;
    try {
        const ParetoModel pareto = fit_pareto(emp);
        v.pareto_ks = ks_vs_pareto(values.values, pareto, mix_seed(seed, 2));
    } catch (const DegenerateSupportError& e) {
        pareto_ok = false;
        v.pareto_ks = KsResult{1.0, 0.0, emp.n, 0, 0};
        v.note = e.what();
    }

    const double alpha = thresholds.significance;
    const double p_pois = v.poisson_ks.p_value;
    const double p_par = pareto_ok ? v.pareto_ks.p_value : 0.0;

    if (p_pois >= alpha &&
        (p_pois > p_par ||
         (p_pois == p_par && v.poisson_ks.statistic <= v.pareto_ks.statistic))) {
        v.label = VerdictLabel::poisson;
        return v;
    }
    if (pareto_ok && p_par >= alpha) {
        v.label = VerdictLabel::pareto;
        return v;
    }

    if (auto mixed = scan_mixed(values.values, emp, seed, thresholds)) {
        v.label = VerdictLabel::mixed;
        v.tail_break = mixed->tail_break;
        v.body_poisson_ks = mixed->body_ks;
        return v;
    }

    // Both models rejected outright: prefer the one whose KS statistic
    // undercuts the other by more than the significance scale of D itself.
    if (pareto_ok) {
        const double ne = static_cast<double>(v.poisson_ks.n1) *
                          static_cast<double>(v.poisson_ks.n2) /
                          static_cast<double>(v.poisson_ks.n1 + v.poisson_ks.n2);
        const double delta = 1.36 / std::sqrt(ne);
        if (v.pareto_ks.statistic - v.poisson_ks.statistic > delta) {
            v.label = VerdictLabel::poisson;
            v.note = "both models rejected; poisson is the closer fit";
            return v;
        }
        if (v.poisson_ks.statistic - v.pareto_ks.statistic > delta) {
            v.label = VerdictLabel::pareto;
            v.note = "both models rejected; pareto is the closer fit";
            return v;
        }
    }

    v.label = VerdictLabel::inconclusive;
    if (v.note.empty()) v.note = "no model reaches the significance level";
    return v;
}

}  // namespace netclass
