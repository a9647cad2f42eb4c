#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netclass/generators.hpp"
#include "netclass/ingestion.hpp"
#include "netclass/report.hpp"
#include "netclass/statfit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;

netclass::InputFormat format_from_flag(const std::string& flag) {
    if (flag == "edgelist") return netclass::InputFormat::edgelist;
    if (flag == "inp") return netclass::InputFormat::inp;
    return netclass::InputFormat::autodetect;
}

std::pair<netclass::Graph, netclass::ParseReport> load_network(
    const std::string& path, const std::string& format_flag) {
    std::ifstream in(path);
    if (!in) throw netclass::ParseError(0, "cannot open file: " + path);
    return netclass::parse_network(in, format_from_flag(format_flag));
}

std::string base_name(const std::string& path) {
    const auto pos = path.find_last_of("/\\");
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

void emit(const netclass::ClassificationReport& report, bool as_json) {
    if (as_json)
        std::cout << netclass::to_json(report).dump(2) << '\n';
    else
        netclass::render_table(report, std::cout);
}

int run_stats(const std::vector<std::string>& inputs, const std::string& format,
              bool as_json) {
    for (std::size_t t = 0; t < inputs.size(); ++t) {
        auto [graph, parsed] = load_network(inputs[t], format);
        const auto report =
            netclass::make_stats_report(base_name(inputs[t]), graph, parsed);
        if (t > 0 && !as_json) std::cout << '\n';
        emit(report, as_json);
    }
    return kExitOk;
}

int run_classify(const std::vector<std::string>& inputs, const std::string& format,
                 const std::string& flavor_flag, std::uint64_t seed,
                 const netclass::ClassifyThresholds& thresholds, bool as_json,
                 unsigned jobs) {
    const auto flavor = flavor_flag == "standard"
                            ? netclass::DegreeFlavor::standard
                            : netclass::DegreeFlavor::neighborhood;

    std::vector<netclass::ClassificationReport> reports(inputs.size());
    std::vector<std::exception_ptr> failures(inputs.size());

    auto work = [&](std::size_t t) {
        try {
            auto [graph, parsed] = load_network(inputs[t], format);
            reports[t] = netclass::make_classification_report(
                base_name(inputs[t]), graph, parsed, flavor, seed, thresholds);
        } catch (...) {
            failures[t] = std::current_exception();
        }
    };

    if (jobs <= 1 || inputs.size() <= 1) {
        for (std::size_t t = 0; t < inputs.size(); ++t) work(t);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < inputs.size(); t = next++) work(t);
            });
        for (auto& th : pool) th.join();
    }

    // outputs in input order, first failure decides the exit code
    for (std::size_t t = 0; t < inputs.size(); ++t) {
        if (failures[t]) std::rethrow_exception(failures[t]);
        if (t > 0 && !as_json) std::cout << '\n';
        emit(reports[t], as_json);
    }
    return kExitOk;
}

int run_plotdata(const std::string& input, const std::string& format,
                 const std::string& flavor_flag, const std::string& output) {
    auto [graph, parsed] = load_network(input, format);
    (void)parsed;
    const auto flavor = flavor_flag == "standard"
                            ? netclass::DegreeFlavor::standard
                            : netclass::DegreeFlavor::neighborhood;
    std::ostringstream csv;
    netclass::write_plot_data(graph, flavor, csv);
    std::ofstream out(output);
    if (!out) {
        std::cerr << "error: cannot write " << output << '\n';
        return kExitUsage;
    }
    out << csv.str();
    return kExitOk;
}

int run_generate(const netclass::GenSpec& spec, const std::string& output) {
    const netclass::Graph graph = netclass::generate(spec);
    std::ofstream out(output);
    if (!out) {
        std::cerr << "error: cannot write " << output << '\n';
        return kExitUsage;
    }
    netclass::write_edge_list(graph, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connectivity-structure classifier for spatial networks"};
    app.set_version_flag("--version", netclass::kToolVersion);
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string format = "auto";
    std::string flavor = "neighborhood";
    std::string output;
    std::string thresholds_path;
    bool as_json = false;
    std::uint64_t seed = netclass::kDefaultSeed;
    unsigned jobs = 1;
    netclass::ClassifyThresholds thresholds;

    auto add_common = [&](CLI::App* cmd, bool many_inputs) {
        if (many_inputs)
            cmd->add_option("inputs", inputs, "network file(s)")->required();
        else
            cmd->add_option("input", inputs, "network file")
                ->required()
                ->expected(1);
        cmd->add_option("--format", format, "edgelist|inp|auto")
            ->check(CLI::IsMember({"edgelist", "inp", "auto"}));
    };

    CLI::App* stats = app.add_subcommand("stats", "degree statistics for a network");
    add_common(stats, true);
    stats->add_flag("--json", as_json, "emit JSON instead of a table");

    CLI::App* classify =
        app.add_subcommand("classify", "fit Poisson/Pareto models and classify");
    add_common(classify, true);
    classify->add_option("--flavor", flavor, "standard|neighborhood")
        ->check(CLI::IsMember({"standard", "neighborhood"}));
    classify->add_option("--seed", seed, "seed for model-sample generation");
    classify->add_option("--significance", thresholds.significance,
                         "KS non-rejection level");
    classify->add_option("--tail-r2", thresholds.tail_r2,
                         "log-log linearity threshold for the mixed regime");
    classify->add_option("--thresholds", thresholds_path,
                         "flat JSON document with significance/tail_r2/seed");
    classify->add_flag("--json", as_json, "emit JSON instead of a table");
    classify->add_option("--jobs", jobs, "classify inputs concurrently");

    CLI::App* plotdata =
        app.add_subcommand("plotdata", "CSV of empirical and model distributions");
    add_common(plotdata, false);
    plotdata->add_option("--flavor", flavor, "standard|neighborhood")
        ->check(CLI::IsMember({"standard", "neighborhood"}));
    plotdata->add_option("-o,--output", output, "output CSV path")->required();

    CLI::App* generate = app.add_subcommand("generate", "write a synthetic network");
    netclass::GenSpec spec;
    std::string family = "erdos_renyi";
    generate->add_option("--family", family, "er|ws|ba|lattice")->required();
    generate->add_option("-n,--nodes", spec.n, "node count")->required();
    generate->add_option("-p,--probability", spec.p, "ER connection probability");
    generate->add_option("--base-degree", spec.base_degree,
                         "WS/lattice even base degree");
    generate->add_option("--rewire-prob", spec.rewire_prob, "WS rewiring probability");
    generate->add_option("-m,--attachments", spec.m, "BA edges per new node");
    generate->add_option("--seed", spec.seed, "generator seed");
    generate->add_option("-o,--output", output, "output edge-list path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (!thresholds_path.empty()) {
        try {
            std::ifstream in(thresholds_path);
            if (!in)
                throw std::invalid_argument("cannot open " + thresholds_path);
            nlohmann::json doc = nlohmann::json::parse(in);
            netclass::apply_thresholds_doc(doc, thresholds, seed);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }

    try {
        if (stats->parsed()) return run_stats(inputs, format, as_json);
        if (classify->parsed())
            return run_classify(inputs, format, flavor, seed, thresholds, as_json,
                                jobs);
        if (plotdata->parsed())
            return run_plotdata(inputs.front(), format, flavor, output);
        if (generate->parsed()) {
            spec.family = netclass::family_from_string(family);
            return run_generate(spec, output);
        }
    } catch (const netclass::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const netclass::DegenerateSupportError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        const std::string message = e.what();
        std::cerr << "error: " << message << '\n';
        return message == "empty graph" ? kExitParse : kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
