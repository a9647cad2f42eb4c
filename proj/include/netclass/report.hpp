#ifndef NETCLASS_REPORT_HPP
#define NETCLASS_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "netclass/generators.hpp"
#include "netclass/graph.hpp"
#include "netclass/ingestion.hpp"
#include "netclass/statfit.hpp"

namespace netclass {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20177;

struct FitSection {
    DegreeFlavor flavor = DegreeFlavor::neighborhood;
    double poisson_lambda = 0.0;
    std::optional<double> pareto_gamma;
    std::optional<double> pareto_norm;
    std::optional<std::uint32_t> pareto_support_min;
    Verdict verdict;
    std::uint64_t seed = kDefaultSeed;
};

/// One Table-I-style row plus, when classification ran, the fitted models,
/// KS results and verdict.
struct ClassificationReport {
    std::string name;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t edges_collapsed = 0;
    std::size_t self_loops_dropped = 0;

    double mean_standard = 0.0;
    std::uint32_t min_standard = 0;
    std::uint32_t max_standard = 0;
    double mean_neighborhood = 0.0;
    std::uint32_t min_neighborhood = 0;
    std::uint32_t max_neighborhood = 0;
    double connection_probability = 0.0;  // <k> / (n - 1)

    std::optional<FitSection> fit;
    std::string version = kToolVersion;
};

/// Statistics-only report (no classification).
ClassificationReport make_stats_report(const std::string& name, const Graph& g,
                                       const ParseReport& parsed);

/// Full report: statistics plus model fits and verdict for the chosen flavor.
ClassificationReport make_classification_report(const std::string& name,
                                                const Graph& g,
                                                const ParseReport& parsed,
                                                DegreeFlavor flavor,
                                                std::uint64_t seed,
                                                const ClassifyThresholds& thresholds);

nlohmann::ordered_json to_json(const ClassificationReport& report);
ClassificationReport report_from_json(const nlohmann::ordered_json& j);

/// Human-readable table, one field per line.
void render_table(const ClassificationReport& report, std::ostream& out);

/// CSV for external plotting: k, empirical_mass, empirical_ccdf,
/// poisson_mass, poisson_ccdf, pareto_mass, pareto_ccdf. Zero-mass cells in
/// log-intended (empirical) columns are left empty; the Poisson columns run
/// until the model's CDF reaches 0.999.
void write_plot_data(const Graph& g, DegreeFlavor flavor, std::ostream& out);

/// Flat key/value document: {"significance": .., "tail_r2": .., "seed": ..}.
/// Unknown keys are rejected.
void apply_thresholds_doc(const nlohmann::json& doc, ClassifyThresholds& thresholds,
                          std::uint64_t& seed);

}  // namespace netclass

#endif
