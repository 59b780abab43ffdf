#ifndef SHEAFBETTI_CLI_HPP
#define SHEAFBETTI_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sheafbetti/bounds.hpp"
#include "sheafbetti/hypotheses.hpp"
#include "sheafbetti/motivic.hpp"

namespace sheafbetti {

using Json = nlohmann::ordered_json;

enum class Command { Check, Betti, Hilb, SParam, Audit, Table };
enum class OutputFormat { Text, Json, Csv, Latex };

enum ExitCode : int {
    kExitOk = 0,
    kExitParseError = 1,
    kExitInapplicable = 2,
    kExitInternal = 3,
};

// Grid axis: a sorted list of integers written as "lo..hi", "x,y,z" or a mix.
std::vector<std::int64_t> parse_int_list(const std::string& text);
std::string format_int_list(const std::vector<std::int64_t>& values);

struct RunConfig {
    Command command = Command::Check;
    std::string surface = "p2";
    std::optional<std::string> divisor;  // "d" or "a,b"
    std::optional<std::int64_t> chi;
    std::optional<std::int64_t> n;       // hilb order
    OutputFormat format = OutputFormat::Text;
    std::size_t cap = kDefaultHilbCap;
    // table mode: P^2 uses grid_first as d; F_e uses (grid_first, grid_second) as (a, b)
    std::vector<std::int64_t> grid_first;
    std::vector<std::int64_t> grid_second;
    std::vector<std::int64_t> grid_chi;
    std::int64_t max_degree = 13;  // reflected columns b_0 .. b_max in table mode

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Parses argv-style arguments (without the program name). Throws
// DomainError on malformed input; `--help` text goes to `help_out`.
RunConfig parse_config(const std::vector<std::string>& args, std::string* help_out = nullptr);

// Canonical argument vector; parse_config(to_args(c)) == c.
std::vector<std::string> to_args(const RunConfig& config);

struct RunResult {
    std::string document;     // stdout
    std::string diagnostics;  // stderr
    int exit_code = kExitOk;
};

RunResult run(const RunConfig& config);

// Full command-line entry: parse then run, mapping exceptions to exit codes.
RunResult run_command_line(const std::vector<std::string>& args);

/// Homogeneous rows with a fixed column order. Cells are JSON scalars;
/// null renders as an empty field.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
};

std::string emit_table(const Table& table, OutputFormat format);

// One row per (L, chi) cell of the grid, evaluated concurrently and
// returned in grid order.
Table betti_grid(const Surface& s, const std::vector<DivisorClass>& classes, const std::vector<std::int64_t>& chis,
                 std::int64_t max_degree, std::size_t cap);

Json to_json(const BigInt& value);
Json to_json(const HypothesisReport& report);
Json to_json(const VirtualBettiReport& report);
Json to_json(const BoundReport& report);

}  // namespace sheafbetti

#endif  // SHEAFBETTI_CLI_HPP
