#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace topoinf {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitSizeCap = 3,
    kExitNumeric = 4,
    kExitIo = 5,
};

/// Parsed command line; exactly one subcommand.
struct RunConfig
{
    std::string subcommand;

    // influence / sweep
    std::string input;
    std::optional<std::string> input_kind;
    std::string metric = "edit";
    double radius = 1.0;
    std::vector<double> radii;
    std::size_t sample = 0; ///< permutations; 0 selects exact enumeration
    std::size_t cap = 20;
    unsigned threads = 1;

    // family
    std::string family;
    std::size_t n = 0;
    std::size_t m = 0;
    double p = 0.0;

    // identities
    std::size_t n_max = 20;
    std::size_t m_max = 20;

    // grammar
    int grammar = 0;
    std::size_t length = 0;
    std::optional<std::string> length_range;
    bool negatives = false;
    std::optional<double> grammar_radius;

    // mask
    std::size_t count = 300;
    std::size_t node_min = 8;
    std::size_t node_max = 14;
    double p_min = 0.02;
    double p_max = 0.21;
    std::vector<std::size_t> j_values{1, 2, 3};
    std::optional<std::uint64_t> data_seed;
    std::string csv_output;

    std::uint64_t seed = 0;
    std::string format = "json";
    std::string output;
    bool bits = false;

    /// Echo of the settings that affect the selected subcommand.
    nlohmann::json echo() const;
};

/// Runs the selected pipeline, writing the report to `out` (or --output) and diagnostics to `err`.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace topoinf
