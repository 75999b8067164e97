#pragma once

// Batch experiment runner behind the sperncube_cli tool. Each subcommand
// computes one table, checks its own output against the bounds it is meant to
// illustrate, and writes CSV or JSON.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sperncube {

enum class Subcommand { chains, sperner, staircase, boxdim, lp_area, slab, ekr };
enum class OutputFormat { csv, json };

std::string to_string(Subcommand s);
std::optional<Subcommand> parse_subcommand(const std::string& name);
const std::vector<Subcommand>& all_subcommands();

// Parameter names a subcommand accepts, e.g. {"n", "m"} for chains.
const std::vector<std::string>& allowed_parameters(Subcommand s);

// Column names of the output table.
const std::vector<std::string>& output_columns(Subcommand s);

// One-line description used for --help.
std::string describe(Subcommand s);

enum ExitCode : int {
    kExitOk = 0,
    kExitUnexpected = 1,
    kExitInvariantViolation = 2,
    kExitBudgetExceeded = 3,
    kExitBadInput = 4,
};

struct ExperimentConfig {
    Subcommand subcommand = Subcommand::chains;
    // Raw values keyed by parameter name; lists are comma separated.
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string output_path;  // empty: write to `out`
    OutputFormat format = OutputFormat::csv;
    std::optional<std::uint64_t> budget;
};

// Runs one experiment. The table goes to config.output_path (or `out`);
// diagnostics go to `err`. Returns an ExitCode.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sperncube
