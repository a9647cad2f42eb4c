#include "netclass/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "netclass/distributions.hpp"

namespace netclass {
namespace {

void fill_stats(ClassificationReport& report, const Graph& g) {
    const auto standard = standard_degrees(g);
    const auto neighborhood = neighborhood_degrees(g);
    const auto emp_std = empirical(standard);
    const auto emp_nbr = empirical(neighborhood);

    report.nodes = g.node_count();
    report.edges = g.edge_count();
    report.mean_standard = emp_std.mean;
    report.min_standard = emp_std.min_k;
    report.max_standard = emp_std.max_k;
    report.mean_neighborhood = emp_nbr.mean;
    report.min_neighborhood = emp_nbr.min_k;
    report.max_neighborhood = emp_nbr.max_k;
    report.connection_probability =
        connection_probability(emp_std.mean, g.node_count());
}

nlohmann::ordered_json ks_to_json(const KsResult& r) {
    return {{"statistic", r.statistic},
            {"p_value", r.p_value},
            {"p_percent", r.p_value * 100.0},
            {"n1", r.n1},
            {"n2", r.n2},
            {"seed", r.seed}};
}

KsResult ks_from_json(const nlohmann::ordered_json& j) {
    KsResult r;
    r.statistic = j.at("statistic").get<double>();
    r.p_value = j.at("p_value").get<double>();
    r.n1 = j.at("n1").get<std::size_t>();
    r.n2 = j.at("n2").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

}  // namespace

ClassificationReport make_stats_report(const std::string& name, const Graph& g,
                                       const ParseReport& parsed) {
    ClassificationReport report;
    report.name = name;
    report.edges_collapsed = parsed.edges_collapsed;
    report.self_loops_dropped = parsed.self_loops_dropped;
    fill_stats(report, g);
    return report;
}

ClassificationReport make_classification_report(const std::string& name,
                                                const Graph& g,
                                                const ParseReport& parsed,
                                                DegreeFlavor flavor,
                                                std::uint64_t seed,
                                                const ClassifyThresholds& thresholds) {
    ClassificationReport report = make_stats_report(name, g, parsed);

    const DegreeSequence values = flavor == DegreeFlavor::standard
                                      ? standard_degrees(g)
                                      : neighborhood_degrees(g);
    FitSection fit;
    fit.flavor = flavor;
    fit.seed = seed;
    const auto emp = empirical(values);
    fit.poisson_lambda = emp.mean;
    try {
        const ParetoModel pareto = fit_pareto(emp);
        fit.pareto_gamma = pareto.gamma;
        fit.pareto_norm = pareto.norm;
        fit.pareto_support_min = pareto.support_min;
    } catch (const DegenerateSupportError&) {
        // verdict will carry the note
    }
    fit.verdict = classify(values, seed, thresholds);
    report.fit = std::move(fit);
    return report;
}

nlohmann::ordered_json to_json(const ClassificationReport& report) {
    nlohmann::ordered_json j;
    j["name"] = report.name;
    j["version"] = report.version;
    j["nodes"] = report.nodes;
    j["edges"] = report.edges;
    j["edges_collapsed"] = report.edges_collapsed;
    j["self_loops_dropped"] = report.self_loops_dropped;
    j["standard_degree"] = {{"mean", report.mean_standard},
                            {"min", report.min_standard},
                            {"max", report.max_standard}};
    j["neighborhood_degree"] = {{"mean", report.mean_neighborhood},
                                {"min", report.min_neighborhood},
                                {"max", report.max_neighborhood}};
    j["connection_probability"] = report.connection_probability;
    if (report.fit) {
        const FitSection& fit = *report.fit;
        nlohmann::ordered_json f;
        f["flavor"] =
            fit.flavor == DegreeFlavor::standard ? "standard" : "neighborhood";
        f["seed"] = fit.seed;
        f["poisson_lambda"] = fit.poisson_lambda;
        if (fit.pareto_gamma) {
            f["pareto_gamma"] = *fit.pareto_gamma;
            f["pareto_norm"] = *fit.pareto_norm;
            f["pareto_support_min"] = *fit.pareto_support_min;
        }
        // "percent" mirrors the usual KS-column presentation; it is the
        // two-sample p-value scaled by 100, not an acceptance rate
        f["poisson_ks"] = ks_to_json(fit.verdict.poisson_ks);
        f["pareto_ks"] = ks_to_json(fit.verdict.pareto_ks);
        f["verdict"] = to_string(fit.verdict.label);
        if (fit.verdict.tail_break) f["tail_break"] = *fit.verdict.tail_break;
        if (fit.verdict.body_poisson_ks)
            f["body_poisson_ks"] = ks_to_json(*fit.verdict.body_poisson_ks);
        if (!fit.verdict.note.empty()) f["note"] = fit.verdict.note;
        j["fit"] = std::move(f);
    }
    return j;
}

ClassificationReport report_from_json(const nlohmann::ordered_json& j) {
    ClassificationReport report;
    report.name = j.at("name").get<std::string>();
    report.version = j.at("version").get<std::string>();
    report.nodes = j.at("nodes").get<std::size_t>();
    report.edges = j.at("edges").get<std::size_t>();
    report.edges_collapsed = j.at("edges_collapsed").get<std::size_t>();
    report.self_loops_dropped = j.at("self_loops_dropped").get<std::size_t>();
    report.mean_standard = j.at("standard_degree").at("mean").get<double>();
    report.min_standard = j.at("standard_degree").at("min").get<std::uint32_t>();
    report.max_standard = j.at("standard_degree").at("max").get<std::uint32_t>();
    report.mean_neighborhood = j.at("neighborhood_degree").at("mean").get<double>();
    report.min_neighborhood = j.at("neighborhood_degree").at("min").get<std::uint32_t>();
    report.max_neighborhood = j.at("neighborhood_degree").at("max").get<std::uint32_t>();
    report.connection_probability = j.at("connection_probability").get<double>();
    if (j.contains("fit")) {
        const auto& f = j.at("fit");
        FitSection fit;
        fit.flavor = f.at("flavor").get<std::string>() == "standard"
                         ? DegreeFlavor::standard
                         : DegreeFlavor::neighborhood;
        fit.seed = f.at("seed").get<std::uint64_t>();
        fit.poisson_lambda = f.at("poisson_lambda").get<double>();
        if (f.contains("pareto_gamma")) {
            fit.pareto_gamma = f.at("pareto_gamma").get<double>();
            fit.pareto_norm = f.at("pareto_norm").get<double>();
            fit.pareto_support_min = f.at("pareto_support_min").get<std::uint32_t>();
        }
        fit.verdict.poisson_ks = ks_from_json(f.at("poisson_ks"));
        fit.verdict.pareto_ks = ks_from_json(f.at("pareto_ks"));
        const std::string label = f.at("verdict").get<std::string>();
        if (label == "poisson") fit.verdict.label = VerdictLabel::poisson;
        else if (label == "pareto") fit.verdict.label = VerdictLabel::pareto;
        else if (label == "mixed") fit.verdict.label = VerdictLabel::mixed;
        else fit.verdict.label = VerdictLabel::inconclusive;
        if (f.contains("tail_break"))
            fit.verdict.tail_break = f.at("tail_break").get<std::uint32_t>();
        if (f.contains("body_poisson_ks"))
            fit.verdict.body_poisson_ks = ks_from_json(f.at("body_poisson_ks"));
        if (f.contains("note")) fit.verdict.note = f.at("note").get<std::string>();
        report.fit = std::move(fit);
    }
    return report;
}

void render_table(const ClassificationReport& report, std::ostream& out) {
    out << std::fixed << std::setprecision(4);
    out << "network:                 " << report.name << '\n';
    out << "nodes:                   " << report.nodes << '\n';
    out << "edges:                   " << report.edges << '\n';
    if (report.edges_collapsed)
        out << "edges collapsed:         " << report.edges_collapsed << '\n';
    if (report.self_loops_dropped)
        out << "self-loops dropped:      " << report.self_loops_dropped << '\n';
    out << "mean standard degree:    " << report.mean_standard << '\n';
    out << "min/max standard degree: " << report.min_standard << " / "
        << report.max_standard << '\n';
    out << "mean neighborhood deg.:  " << report.mean_neighborhood << '\n';
    out << "min/max neighborhood:    " << report.min_neighborhood << " / "
        << report.max_neighborhood << '\n';
    out << "connection probability:  " << std::setprecision(6)
        << report.connection_probability << '\n';
    if (report.fit) {
        const FitSection& fit = *report.fit;
        out << std::setprecision(4);
        out << "flavor:                  "
            << (fit.flavor == DegreeFlavor::standard ? "standard" : "neighborhood")
            << '\n';
        out << "poisson lambda:          " << fit.poisson_lambda << '\n';
        if (fit.pareto_gamma)
            out << "pareto gamma:            " << *fit.pareto_gamma << '\n';
        out << "poisson KS [%]:          " << fit.verdict.poisson_ks.p_value * 100
            << "  (D = " << fit.verdict.poisson_ks.statistic << ")\n";
        out << "pareto KS [%]:           " << fit.verdict.pareto_ks.p_value * 100
            << "  (D = " << fit.verdict.pareto_ks.statistic << ")\n";
        out << "verdict:                 " << to_string(fit.verdict.label) << '\n';
        if (fit.verdict.tail_break)
            out << "tail break:              " << *fit.verdict.tail_break << '\n';
        if (!fit.verdict.note.empty())
            out << "note:                    " << fit.verdict.note << '\n';
        out << "seed:                    " << fit.seed << '\n';
    }
}

void write_plot_data(const Graph& g, DegreeFlavor flavor, std::ostream& out) {
    const DegreeSequence values = flavor == DegreeFlavor::standard
                                      ? standard_degrees(g)
                                      : neighborhood_degrees(g);
    const auto emp = empirical(values);
    const PoissonModel poisson{emp.mean};
    std::optional<ParetoModel> pareto;
    try {
        pareto = fit_pareto(emp);
    } catch (const DegenerateSupportError&) {
    }

    // extend past the empirical maximum until the Poisson mass is covered
    std::uint32_t k_hi = emp.max_k;
    while (poisson_cdf(poisson, k_hi) < 0.999) ++k_hi;

    out << "k,empirical_mass,empirical_ccdf,poisson_mass,poisson_ccdf,"
           "pareto_mass,pareto_ccdf\n";
    out << std::setprecision(12);

    double emp_cdf = 0.0;
    double poisson_acc = 0.0;
    double pareto_acc = 0.0;
    for (std::uint32_t k = 0; k <= k_hi; ++k) {
        const double mass = k <= emp.max_k ? emp.mass_at(k) : 0.0;
        emp_cdf += mass;
        const double emp_ccdf = std::max(0.0, 1.0 - emp_cdf);
        const double p_mass = poisson_pmf(poisson, k);
        poisson_acc += p_mass;
        const double p_ccdf = std::max(0.0, 1.0 - poisson_acc);

        out << k << ',';
        if (mass > 0.0) out << mass;          // zero masses have no log point
        out << ',';
        if (k <= emp.max_k && emp_ccdf > 0.0) out << emp_ccdf;
        out << ',' << p_mass << ',' << p_ccdf << ',';
        if (pareto && k >= pareto->support_min && k <= pareto->support_max) {
            const double q_mass = pareto_pmf(*pareto, k);
            pareto_acc += q_mass;
            out << q_mass << ',' << std::max(0.0, 1.0 - pareto_acc);
        } else {
            out << ',';
        }
        out << '\n';
    }
}

void apply_thresholds_doc(const nlohmann::json& doc, ClassifyThresholds& thresholds,
                          std::uint64_t& seed) {
    if (!doc.is_object()) throw std::invalid_argument("thresholds must be a flat object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "significance") thresholds.significance = value.get<double>();
        else if (key == "tail_r2") thresholds.tail_r2 = value.get<double>();
        else if (key == "seed") seed = value.get<std::uint64_t>();
        else throw std::invalid_argument("unknown threshold key: " + key);
    }
}

}  // namespace netclass
