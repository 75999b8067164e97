#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sperncube/experiment.hpp"

using namespace sperncube;

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string s;
    for (const auto& i : items) s += (s.empty() ? "" : sep) + i;
    return s;
}

const std::map<std::string, std::string>& option_help() {
    static const std::map<std::string, std::string> help{
        {"n", "dimension"},
        {"m", "grid resolution (comma list where several are accepted)"},
        {"k", "support size (ekr) or staircase level"},
        {"t", "intersection size"},
        {"p", "exponent of the l_p norm; several values run a sweep"},
        {"c", "slab width (comma list)"},
        {"tol", "absolute quadrature tolerance"},
        {"in", "point-set file: header 'n', one point per line"},
        {"samples", "Monte Carlo samples per row"},
    };
    return help;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Experiments on antichains in the grid and the unit cube, l_p surface areas, "
                 "slab volumes and non-trivial intersecting families.\n"
                 "Exit codes: 0 ok, 2 invariant violation, 3 budget exceeded (partial output marked), 4 bad input."};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
    std::uint64_t budget = 0;
    auto* seed_opt = app.add_option("--seed", seed, "seed for every randomized step")->capture_default_str();
    (void)seed_opt;
    app.add_option("--out", out_path, "output file (default: standard output)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    auto* budget_opt =
        app.add_option("--budget", budget, "enumeration budget; defaults to $SPERNCUBE_BUDGET or a per-command limit");

    std::map<std::string, std::vector<std::string>> values;
    std::map<Subcommand, CLI::App*> subs;
    for (Subcommand s : all_subcommands()) {
        auto* sub = app.add_subcommand(to_string(s), describe(s) + "\nColumns: " + join(output_columns(s), ","));
        sub->fallthrough();
        for (const auto& name : allowed_parameters(s))
            sub->add_option("--" + name, values[to_string(s) + "/" + name], option_help().at(name))
                ->delimiter(',');
        subs[s] = sub;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    ExperimentConfig config;
    for (const auto& [s, sub] : subs) {
        if (!sub->parsed()) continue;
        config.subcommand = s;
        for (const auto& name : allowed_parameters(s)) {
            const auto& v = values[to_string(s) + "/" + name];
            if (!v.empty()) config.parameters[name] = join(v, ",");
        }
    }
    config.seed = seed;
    config.output_path = out_path;
    config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (budget_opt->count() > 0) {
        config.budget = budget;
    } else if (const char* env = std::getenv("SPERNCUBE_BUDGET"); env && *env) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (*end != '\0' || env[0] == '-') {
            std::cerr << "error: SPERNCUBE_BUDGET must be a non-negative integer\n";
            return kExitBadInput;
        }
        config.budget = v;
    }
    return run(config, std::cout, std::cerr);
}
