#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "knightlab/estimators.hpp"

namespace knightlab::report {

// Bad user input; the CLI exits with status 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A contract that should hold by construction did not; the CLI exits with 3.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// null | integer | decimal | boolean | text. Rationals travel as "p/q" text.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

struct PieceSpec {
    enum class Kind { King, Taxicab, Knight, Fibo } kind = Kind::King;
    KnightParams knight{};  // Knight and Fibo
    int fibo_index = 0;     // Fibo

    std::string describe() const;
    Piece build() const;
    std::optional<KnightParams> knight_params() const;
};

// Accepts "king", "taxicab", "knight A B", "fibo N" (tokens already split).
PieceSpec parse_piece_spec(const std::vector<std::string>& tokens);

struct RunConfig {
    std::string subcommand;
    PieceSpec piece;
    std::int64_t radius = 3;
    std::optional<std::int64_t> margin;
    Normalizer normalizer = Normalizer::Box;
    Format format = Format::Csv;
    std::string out;  // empty: standard output
    int grid_resolution = 100;

    nlohmann::ordered_json to_json() const;
};

// Fixed decimal rendering: 10 significant digits.
std::string format_decimal(double value);

void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, const RunConfig& config, std::ostream& os);

Table cmd_distance(const RunConfig& config);
Table cmd_velocity(const RunConfig& config);
Table cmd_cdf(const RunConfig& config);
Table cmd_fibo(const RunConfig& config);
Table cmd_sumset(const RunConfig& config);
// One estimator summary row: piece, h, normalizer, mean, velocity, target,
// residual, sup_cdf_gap.
Table cmd_report(const RunConfig& config);

Table dispatch(const RunConfig& config);

// Runs the subcommand and writes the table; returns the process exit code.
// Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace knightlab::report
