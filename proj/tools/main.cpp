// Command-line front end for the TCSS simulator. Everything here goes
// through the shared library's C interface: flags are folded into a
// scenario document, the library runs it, and the rendered report is
// printed as-is. Exit status is 0 only when every verdict passed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qtcss/qtcss.h>

namespace {

using nlohmann::json;

struct Options {
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string scenario_path;

    std::uint32_t modulus = 11;
    std::uint32_t parties = 0; // 0 = kind-specific default
    std::uint32_t secret = 7;
    bool random_polynomial = false;
    std::vector<std::uint32_t> colluders;
    std::uint32_t declared_threshold = 3;
    std::string method = "column-poly-at-zero";

    std::string amplitude_a;
    std::string amplitude_b;
    std::vector<std::string> splits;
    double omega = 0.0;
    double theta = -1.0; // < 0 = leave at scenario default
    std::uint64_t trials = 10000;
    std::vector<int> subset_sizes;
};

json parse_amplitude(const std::string& text, const std::string& flag)
{
    double re = 0.0, im = 0.0;
    char trailing = 0;
    const int got = std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &trailing);
    if (got != 2)
        throw CLI::ValidationError(flag, "expected re,im (for example 0.6,0)");
    return json::array({re, im});
}

json parse_split(const std::string& text)
{
    unsigned long idx = 0, k = 0;
    char trailing = 0;
    const int got = std::sscanf(text.c_str(), "%lu:%lu%c", &idx, &k, &trailing);
    if (got != 2)
        throw CLI::ValidationError("--split", "expected handle_index:k (for example 0:3)");
    return json::array({idx, k});
}

void put_amplitudes(json& params, const Options& opt)
{
    if (!opt.amplitude_a.empty())
        params["amplitude_a"] = parse_amplitude(opt.amplitude_a, "--amplitude-a");
    if (!opt.amplitude_b.empty())
        params["amplitude_b"] = parse_amplitude(opt.amplitude_b, "--amplitude-b");
}

json classical_params(const Options& opt)
{
    json params{{"modulus", opt.modulus}, {"secret", opt.secret}};
    if (opt.parties != 0)
        params["parties"] = opt.parties;
    if (opt.random_polynomial)
        params["use_example_polynomial"] = false;
    return params;
}

int run_document(const json& document, const std::string& format)
{
    char* report = nullptr;
    int all_passed = 0;
    const qtcss_format fmt =
        format == "structured" ? QTCSS_FORMAT_STRUCTURED : QTCSS_FORMAT_TEXT;
    const qtcss_status status =
        qtcss_scenario_run(document.dump().c_str(), fmt, &report, &all_passed);
    if (status != QTCSS_OK) {
        std::cerr << "error: " << qtcss_status_name(status) << ": " << qtcss_last_error()
                  << "\n";
        return 2;
    }
    std::cout << report;
    qtcss_string_free(report);
    return all_passed ? 0 : 1;
}

int run_scenario_file(const Options& opt)
{
    std::ifstream in(opt.scenario_path);
    if (!in) {
        std::cerr << "error: cannot open scenario file '" << opt.scenario_path << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    json document;
    try {
        document = json::parse(buffer.str());
    } catch (const json::exception& e) {
        std::cerr << "error: scenario file is not valid JSON: " << e.what() << "\n";
        return 2;
    }
    return run_document(document, opt.format);
}

json make_document(const std::string& kind, std::uint64_t seed, json params)
{
    return json{{"kind", kind}, {"seed", seed}, {"params", std::move(params)}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Threshold-changeable secret sharing simulator"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    Options opt;
    app.add_option("--seed", opt.seed, "PRNG seed; fixes every random choice");
    app.add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--scenario", opt.scenario_path,
                   "Run a scenario document (JSON file) instead of a subcommand");

    auto* classical = app.add_subcommand("classical", "Bivariate-polynomial TCSS over GF(p)");
    classical->require_subcommand(1);
    classical->fallthrough();
    auto add_classical_common = [&](CLI::App* cmd) {
        cmd->add_option("--modulus", opt.modulus, "Prime field modulus");
        cmd->add_option("--parties", opt.parties, "Number of dealt shares");
        cmd->add_option("--secret", opt.secret, "Secret constant term");
        cmd->add_flag("--random", opt.random_polynomial,
                      "Deal a random polynomial instead of the built-in example");
    };
    auto* classical_demo = classical->add_subcommand(
        "demo", "Deal shares and reconstruct at thresholds 2, 3 and 4");
    add_classical_common(classical_demo);
    auto* classical_attack = classical->add_subcommand(
        "attack", "Recover the secret from two old shares despite a raised threshold");
    add_classical_common(classical_attack);
    classical_attack->add_option("--colluders", opt.colluders,
                                 "Two party ids holding old shares")
        ->expected(2);
    classical_attack->add_option("--declared-threshold", opt.declared_threshold,
                                 "Threshold the parties declared after truncation");
    classical_attack->add_option("--method", opt.method, "Attack route")
        ->check(CLI::IsMember({"column-poly-at-zero", "re-truncation"}));

    auto* quantum = app.add_subcommand("quantum", "GHZ-state sharing sessions");
    quantum->require_subcommand(1);
    quantum->fallthrough();
    auto add_quantum_common = [&](CLI::App* cmd) {
        cmd->add_option("--parties", opt.parties, "Initial number of parties");
        cmd->add_option("--amplitude-a", opt.amplitude_a, "Secret amplitude a as re,im");
        cmd->add_option("--amplitude-b", opt.amplitude_b, "Secret amplitude b as re,im");
    };
    auto* quantum_deal = quantum->add_subcommand("deal", "Deal and verify quorum enforcement");
    add_quantum_common(quantum_deal);
    auto* quantum_split =
        quantum->add_subcommand("split", "Deal, then raise the threshold by splitting");
    add_quantum_common(quantum_split);
    quantum_split->add_option("--split", opt.splits,
                              "Split step handle_index:k (repeatable; default 0:3)");
    auto* quantum_reconstruct = quantum->add_subcommand(
        "reconstruct", "Full lifecycle: deal, optional splits, reconstruct with all shares");
    add_quantum_common(quantum_reconstruct);
    quantum_reconstruct->add_option("--split", opt.splits,
                                    "Split step handle_index:k (repeatable)");
    auto* quantum_sweep = quantum->add_subcommand(
        "sweep", "Leakage table: purity and fidelity per subset size");
    add_quantum_common(quantum_sweep);
    quantum_sweep->add_option("--subset-sizes", opt.subset_sizes, "Subset sizes to analyze");

    auto* hiding = app.add_subcommand(
        "hiding-test", "Classical-bit hiding: reduced states and decode statistics");
    hiding->add_option("--parties", opt.parties, "Number of parties");
    hiding->add_option("--omega", opt.omega, "Equator basis angle in radians");
    hiding->add_option("--theta", opt.theta,
                       "Polar basis angle in radians (pi/2 = equator)");
    hiding->add_option("--trials", opt.trials, "Decode trial count");

    CLI11_PARSE(app, argc, argv);

    if (!opt.scenario_path.empty())
        return run_scenario_file(opt);

    if (classical_demo->parsed()) {
        return run_document(make_document("classical-demo", opt.seed, classical_params(opt)),
                            opt.format);
    }
    if (classical_attack->parsed()) {
        json params = classical_params(opt);
        if (!opt.colluders.empty())
            params["colluders"] = opt.colluders;
        params["declared_threshold"] = opt.declared_threshold;
        params["method"] = opt.method;
        return run_document(make_document("classical-attack", opt.seed, std::move(params)),
                            opt.format);
    }
    if (quantum_deal->parsed() || quantum_split->parsed() || quantum_reconstruct->parsed()) {
        json params = json::object();
        if (opt.parties != 0)
            params["parties"] = opt.parties;
        put_amplitudes(params, opt);
        json splits = json::array();
        if (quantum_split->parsed() && opt.splits.empty())
            splits.push_back(parse_split("0:3"));
        for (const auto& s : opt.splits)
            splits.push_back(parse_split(s));
        params["splits"] = std::move(splits);
        params["reconstruct"] = quantum_reconstruct->parsed();
        return run_document(make_document("quantum-lifecycle", opt.seed, std::move(params)),
                            opt.format);
    }
    if (quantum_sweep->parsed()) {
        json params = json::object();
        if (opt.parties != 0)
            params["parties"] = opt.parties;
        put_amplitudes(params, opt);
        if (!opt.subset_sizes.empty())
            params["subset_sizes"] = opt.subset_sizes;
        return run_document(make_document("leakage-sweep", opt.seed, std::move(params)),
                            opt.format);
    }
    if (hiding->parsed()) {
        json params{{"omega", opt.omega}, {"trials", opt.trials}};
        if (opt.parties != 0)
            params["parties"] = opt.parties;
        if (opt.theta >= 0.0)
            params["theta"] = opt.theta;
        return run_document(make_document("hiding-test", opt.seed, std::move(params)),
                            opt.format);
    }

    std::cout << app.help();
    return 1;
}
