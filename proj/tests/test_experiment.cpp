#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sperncube/experiment.hpp"

using namespace sperncube;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_with(Subcommand s, std::map<std::string, std::string> params, OutputFormat format = OutputFormat::csv,
                 std::uint64_t seed = 0, std::optional<std::uint64_t> budget = std::nullopt) {
    ExperimentConfig cfg;
    cfg.subcommand = s;
    cfg.parameters = std::move(params);
    cfg.format = format;
    cfg.seed = seed;
    cfg.budget = budget;
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("subcommand registry") {
    CHECK(parse_subcommand("lp-area") == Subcommand::lp_area);
    CHECK_FALSE(parse_subcommand("nope").has_value());
    for (Subcommand s : all_subcommands()) {
        CHECK(parse_subcommand(to_string(s)) == s);
        CHECK_FALSE(output_columns(s).empty());
    }
}

TEST_CASE("chains table") {
    const auto r = run_with(Subcommand::chains, {{"n", "2"}, {"m", "3"}});
    REQUIRE(r.code == kExitOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "index,representative,size,chain_count,bound,elements");
    CHECK(ls[1] == "0,\"(0,0)\",3,5,6,\"(0,0) (1,1) (2,2)\"");
}

TEST_CASE("staircase row") {
    const auto r = run_with(Subcommand::staircase, {{"k", "20"}});
    REQUIRE(r.code == kExitOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    const double length = std::stod(ls[1].substr(ls[1].find(',') + 1));
    CHECK(std::abs(length - 2.0) < 1e-3);
}

TEST_CASE("lp-area json") {
    const auto r = run_with(Subcommand::lp_area, {{"n", "2"}, {"p", "2"}, {"tol", "1e-8"}}, OutputFormat::json);
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["columns"] == nlohmann::json({"n", "p", "area", "proj_bound", "global_bound", "err_est"}));
    CHECK(j["rows"][0]["area"].get<double>() == doctest::Approx(M_PI / 2).epsilon(1e-10));
    CHECK(j["partial"] == false);
}

TEST_CASE("every subcommand is deterministic") {
    const std::vector<std::pair<Subcommand, std::map<std::string, std::string>>> cases{
        {Subcommand::chains, {{"n", "3"}, {"m", "3"}}},
        {Subcommand::sperner, {{"n", "4"}}},
        {Subcommand::sperner, {{"n", "2"}, {"m", "4"}}},
        {Subcommand::staircase, {{"k", "6"}}},
        {Subcommand::boxdim, {{"k", "6"}, {"m", "3,9,27"}}},
        {Subcommand::lp_area, {{"n", "2"}, {"p", "1,2,8"}, {"tol", "1e-6"}}},
        {Subcommand::slab, {{"n", "3"}, {"c", "0.5,1"}, {"samples", "20000"}}},
        {Subcommand::ekr, {{"n", "4"}, {"k", "2"}, {"t", "1"}, {"m", "1,2"}}},
    };
    for (const auto& [s, params] : cases) {
        CAPTURE(to_string(s));
        for (auto fmt : {OutputFormat::csv, OutputFormat::json}) {
            const auto a = run_with(s, params, fmt, 42);
            const auto b = run_with(s, params, fmt, 42);
            CHECK(a.code == kExitOk);
            CHECK(a.out == b.out);
            CHECK_FALSE(a.out.empty());
        }
    }
    const auto x = run_with(Subcommand::slab, {{"n", "3"}, {"c", "1"}, {"samples", "20000"}}, OutputFormat::csv, 1);
    const auto y = run_with(Subcommand::slab, {{"n", "3"}, {"c", "1"}, {"samples", "20000"}}, OutputFormat::csv, 2);
    CHECK(x.out != y.out);
}

TEST_CASE("unknown and malformed parameters are rejected") {
    CHECK(run_with(Subcommand::chains, {{"n", "2"}, {"m", "3"}, {"p", "2"}}).code == kExitBadInput);
    CHECK(run_with(Subcommand::chains, {{"n", "2"}}).code == kExitBadInput);
    CHECK(run_with(Subcommand::chains, {{"n", "two"}, {"m", "3"}}).code == kExitBadInput);
    CHECK(run_with(Subcommand::lp_area, {{"p", "0.5"}}).code == kExitBadInput);
    CHECK(run_with(Subcommand::ekr, {{"n", "3"}, {"k", "2"}, {"t", "2"}, {"m", "1"}}).code == kExitBadInput);
    CHECK(run_with(Subcommand::boxdim, {{"k", "3"}, {"in", "x"}}).code == kExitBadInput);
}

TEST_CASE("budget overrun gives exit 3 and a partial marker") {
    const auto r = run_with(Subcommand::chains, {{"n", "3"}, {"m", "5"}}, OutputFormat::csv, 0, 10);
    CHECK(r.code == kExitBudgetExceeded);
    CHECK(r.out.find("# PARTIAL:") != std::string::npos);
    const auto j = run_with(Subcommand::ekr, {{"n", "5"}, {"k", "3"}, {"t", "1"}, {"m", "2,40"}}, OutputFormat::json, 0,
                            100000);
    CHECK(j.code == kExitBudgetExceeded);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["partial"] == true);
    CHECK(parsed["rows"].size() == 1);
}

TEST_CASE("non-antichain input is an invariant violation with a witness") {
    const std::string path = "test_experiment_points.txt";
    {
        std::ofstream f(path);
        f << "2\n0.1 0.9\n0.2 0.95\n0.8 0.1\n";
    }
    const auto r = run_with(Subcommand::boxdim, {{"in", path}});
    CHECK(r.code == kExitInvariantViolation);
    CHECK(r.err.find("(0.10000000000000001,0.90000000000000002) <= (0.20000000000000001,0.94999999999999996)") !=
          std::string::npos);
    {
        std::ofstream f(path);
        f << "2\n0.1 0.9\n0.2 0.85\n0.8 0.1\n";
    }
    const auto ok = run_with(Subcommand::boxdim, {{"in", path}, {"m", "2,4,8"}});
    CHECK(ok.code == kExitOk);
    std::remove(path.c_str());
}

TEST_CASE("output file") {
    const std::string path = "test_experiment_out.csv";
    ExperimentConfig cfg;
    cfg.subcommand = Subcommand::sperner;
    cfg.parameters = {{"n", "3"}};
    cfg.output_path = path;
    std::ostringstream out, err;
    REQUIRE(run(cfg, out, err) == kExitOk);
    CHECK(out.str().empty());
    std::ifstream f(path);
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str() == "kind,n,m,width,expected,bound,method\nboolean,3,2,3,3,3,matching\n");
    std::remove(path.c_str());
    cfg.output_path = "/nonexistent-dir/out.csv";
    CHECK(run(cfg, out, err) == kExitBadInput);
}
