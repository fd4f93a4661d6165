#include "knightlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace knightlab::report {

namespace {

std::int64_t parse_int(const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        auto v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string("invalid ") + what + " '" + token + "'");
    }
}

std::string rational_cell(const Rational& r) { return r.to_string(); }

KnightParams require_primitive(const PieceSpec& spec) {
    auto params = spec.knight_params();
    if (!params) throw ConfigError("piece '" + spec.describe() + "' is not a knight");
    if (auto why = primitivity_violation(*params); !why.empty())
        throw ConfigError("piece '" + spec.describe() + "' is not primitive: " + why);
    return *params;
}

std::vector<std::int64_t> doubling_schedule(std::int64_t radius) {
    std::vector<std::int64_t> hs;
    for (auto h = radius; h >= 1; h /= 2) hs.push_back(h);
    std::reverse(hs.begin(), hs.end());
    return hs;
}

void require_radius(const RunConfig& config) {
    if (config.radius < 1) throw ConfigError("--radius must be >= 1");
    if (config.margin && *config.margin < 0) throw ConfigError("--margin must be >= 0");
}

DistanceField field_for(const RunConfig& config, const Piece& piece, std::int64_t h) {
    return compute_field(piece, h, config.margin);
}

std::string csv_cell(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_decimal(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const {
            if (v.find_first_of(",\"\n") == std::string::npos) return v;
            std::string quoted = "\"";
            for (char c : v) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            return quoted + '"';
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(double v) const { return std::stod(format_decimal(v)); }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

std::string PieceSpec::describe() const {
    switch (kind) {
        case Kind::King: return "king";
        case Kind::Taxicab: return "taxicab";
        case Kind::Knight: return "knight " + std::to_string(knight.a) + " " + std::to_string(knight.b);
        case Kind::Fibo: return "fibo " + std::to_string(fibo_index);
    }
    return {};
}

Piece PieceSpec::build() const {
    switch (kind) {
        case Kind::King: return make_king();
        case Kind::Taxicab: return make_taxicab();
        case Kind::Knight:
        case Kind::Fibo: return make_knight(knight);
    }
    throw InvariantViolation("unknown piece kind");
}

std::optional<KnightParams> PieceSpec::knight_params() const {
    if (kind == Kind::Knight || kind == Kind::Fibo) return knight;
    return std::nullopt;
}

PieceSpec parse_piece_spec(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw ConfigError("empty piece spec");
    PieceSpec spec;
    const auto& kind = tokens[0];
    auto arity = [&](std::size_t n) {
        if (tokens.size() != n + 1)
            throw ConfigError("piece '" + kind + "' takes " + std::to_string(n) + " argument(s)");
    };
    if (kind == "king") {
        arity(0);
        spec.kind = PieceSpec::Kind::King;
    } else if (kind == "taxicab") {
        arity(0);
        spec.kind = PieceSpec::Kind::Taxicab;
    } else if (kind == "knight") {
        arity(2);
        auto a = parse_int(tokens[1], "knight a"), b = parse_int(tokens[2], "knight b");
        if (a < 1 || b < 1) throw ConfigError("knight a and b must be >= 1");
        if (a == b) throw ConfigError("knight with a == b is never primitive");
        spec.kind = PieceSpec::Kind::Knight;
        // N_{a,b} = N_{b,a}; keep b > a.
        spec.knight = {std::min(a, b), std::max(a, b)};
    } else if (kind == "fibo") {
        arity(1);
        auto n = parse_int(tokens[1], "fibo index");
        if (n < 1 || n > 88) throw ConfigError("fibo index must lie in [1, 88]");
        auto fk = fiboknight_params(static_cast<int>(n));
        spec.kind = PieceSpec::Kind::Fibo;
        spec.fibo_index = static_cast<int>(n);
        spec.knight = fk.params;
    } else {
        throw ConfigError("unknown piece '" + kind + "' (expected king|taxicab|knight A B|fibo N)");
    }
    return spec;
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand;
    j["piece"] = piece.describe();
    j["radius"] = radius;
    j["margin"] = margin ? nlohmann::ordered_json(*margin) : nlohmann::ordered_json(nullptr);
    j["normalizer"] = to_string(normalizer);
    j["format"] = format == Format::Csv ? "csv" : "json";
    j["grid_resolution"] = grid_resolution;
    return j;
}

std::string format_decimal(double value) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
}

void write_json(const Table& table, const RunConfig& config, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["config"] = config.to_json();
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
}

Table cmd_distance(const RunConfig& config) {
    require_radius(config);
    auto field = field_for(config, config.piece.build(), config.radius);
    Table t{{"x", "y", "distance"}, {}};
    const auto h = config.radius;
    t.rows.reserve(static_cast<std::size_t>(ball_size(h)));
    for (auto x = -h; x <= h; ++x)
        for (auto y = -h; y <= h; ++y)
            t.rows.push_back({x, y, static_cast<std::int64_t>(field.raw({x, y}))});
    return t;
}

Table cmd_velocity(const RunConfig& config) {
    require_radius(config);
    std::optional<Rational> closed;
    if (auto params = config.piece.knight_params()) {
        closed = velocity_formula(require_primitive(config.piece));
    } else if (config.piece.kind == PieceSpec::Kind::King) {
        closed = Rational(1);
    }
    auto piece = config.piece.build();
    Table t{{"piece", "h", "normalizer", "mean_distance", "mean_decimal", "velocity", "closed_form",
             "closed_form_decimal", "abs_error"},
            {}};
    for (auto h : doubling_schedule(config.radius)) {
        auto field = field_for(config, piece, h);
        if (!field.all_reachable_in_box())
            throw InvariantViolation("unreachable cell in B_" + std::to_string(h) + " for " + piece.name());
        auto est = empirical_velocity(field, config.normalizer);
        std::vector<Cell> row{piece.name(), h, to_string(config.normalizer), rational_cell(est.mean_distance),
                              est.mean_distance.to_double(), est.velocity.to_double()};
        if (closed) {
            row.insert(row.end(), {rational_cell(*closed), closed->to_double(),
                                   abs(est.velocity - *closed).to_double()});
        } else {
            row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_cdf(const RunConfig& config) {
    require_radius(config);
    if (config.grid_resolution < 1) throw ConfigError("--grid-resolution must be >= 1");
    auto params = require_primitive(config.piece);
    auto field = field_for(config, config.piece.build(), config.radius);
    if (!field.all_reachable_in_box()) throw InvariantViolation("unreachable cell in B_h for a primitive knight");
    auto estimate = empirical_cdf(field, params);
    PiecewiseCdf reference(params);

    Table t{{"kind", "t", "empirical", "closed_form", "gap"}, {}};
    const Rational span = reference.t_high() + Rational(1, 10);
    for (int k = 0; k <= config.grid_resolution; ++k) {
        Rational tk = span * Rational(k, config.grid_resolution);
        auto emp = estimate.query(tk);
        auto ref = reference(tk);
        t.rows.push_back({std::string("grid"), tk.to_double(), emp.to_double(), ref.to_double(),
                          abs(emp - ref).to_double()});
    }
    t.rows.push_back({std::string("sup_gap"), std::monostate{}, std::monostate{}, std::monostate{},
                      estimate.sup_gap(reference)});
    return t;
}

Table cmd_fibo(const RunConfig& config) {
    require_radius(config);
    if (config.radius > 88) throw ConfigError("fibo: --radius (largest n) must be <= 88");
    Table t{{"n", "a", "b", "primitive", "velocity", "velocity_decimal", "k", "ratio_to_previous",
             "abs_ratio_minus_phi_k"},
            {}};
    std::optional<int> previous;
    for (int n = 1; n <= config.radius; ++n) {
        auto fk = fiboknight_params(n);
        std::vector<Cell> row{static_cast<std::int64_t>(n), fk.params.a, fk.params.b, fk.primitive};
        if (!fk.primitive) {
            row.insert(row.end(), 5, std::monostate{});
            t.rows.push_back(std::move(row));
            continue;
        }
        auto v = velocity_formula(fk.params);
        row.insert(row.end(), {rational_cell(v), v.to_double()});
        if (previous) {
            int k = n - *previous;
            auto ratio = fiboknight_velocity_ratio(*previous, k);
            mpf_class diff(ratio.raw(), 256);
            diff -= golden_power(k);
            row.insert(row.end(), {static_cast<std::int64_t>(k), ratio.to_double(), std::abs(diff.get_d())});
        } else {
            row.insert(row.end(), 3, std::monostate{});
        }
        previous = n;
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_sumset(const RunConfig& config) {
    require_radius(config);
    auto piece = config.piece.build();
    auto decomposition = shells(piece, static_cast<int>(config.radius));
    std::string area;
    try {
        area = rational_cell(hull_area(piece));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    Table t{{"l", "sumset_size", "shell_size", "size_over_l2", "hull_area"}, {}};
    std::size_t cumulative = decomposition.shells[0].size();
    for (int l = 1; l <= decomposition.max_index; ++l) {
        const auto shell = decomposition.shells[static_cast<std::size_t>(l)].size();
        cumulative += shell;
        t.rows.push_back({static_cast<std::int64_t>(l), static_cast<std::int64_t>(cumulative),
                          static_cast<std::int64_t>(shell),
                          static_cast<double>(cumulative) / (static_cast<double>(l) * l), area});
    }
    return t;
}

Table cmd_report(const RunConfig& config) {
    require_radius(config);
    auto piece = config.piece.build();
    auto params = config.piece.knight_params();
    if (params) require_primitive(config.piece);
    auto field = field_for(config, piece, config.radius);
    if (!field.all_reachable_in_box()) throw InvariantViolation("unreachable cell in B_h for " + piece.name());
    auto est = empirical_velocity(field, config.normalizer);

    std::vector<Cell> row{piece.name(), config.radius, to_string(config.normalizer),
                          rational_cell(est.mean_distance), est.velocity.to_double()};
    if (params) {
        auto target = velocity_formula(*params);
        auto residual = residual_report(field, *params).max_abs_residual;
        auto gap = empirical_cdf(field, *params).sup_gap(PiecewiseCdf(*params));
        row.insert(row.end(), {rational_cell(target), rational_cell(residual), gap});
    } else if (config.piece.kind == PieceSpec::Kind::King) {
        row.insert(row.end(), {std::string("1"), std::monostate{}, std::monostate{}});
    } else {
        row.insert(row.end(), 3, std::monostate{});
    }
    return {{"piece", "h", "normalizer", "mean", "velocity", "target", "residual", "sup_cdf_gap"}, {row}};
}

Table dispatch(const RunConfig& config) {
    const auto& s = config.subcommand;
    if (s == "distance") return cmd_distance(config);
    if (s == "velocity") return cmd_velocity(config);
    if (s == "cdf") return cmd_cdf(config);
    if (s == "fibo") return cmd_fibo(config);
    if (s == "sumset") return cmd_sumset(config);
    if (s == "report") return cmd_report(config);
    throw ConfigError("unknown subcommand '" + s + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        auto table = dispatch(config);
        if (config.format == Format::Csv)
            write_csv(table, out);
        else
            write_json(table, config, out);
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace knightlab::report
