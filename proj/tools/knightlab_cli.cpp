#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "knightlab/report.hpp"

namespace kr = knightlab::report;

int main(int argc, char** argv) {
    CLI::App app{"Minimum-move distances and velocities of lattice pieces"};
    app.require_subcommand(1);

    std::vector<std::string> piece_tokens{"king"};
    std::int64_t radius = 3;
    std::int64_t margin = -1;
    std::string normalizer = "box";
    std::string format = "csv";
    std::string out_path;
    int grid_resolution = 100;

    auto add_common = [&](CLI::App* sub, std::int64_t default_radius) {
        sub->add_option("--piece", piece_tokens, "king | taxicab | knight A B | fibo N")->expected(1, 3);
        sub->add_option("--radius", radius, "box radius h (fibo: largest n)")->default_val(default_radius);
        sub->add_option("--margin", margin, "padding around B_h (default: twice the largest move 1-norm)");
        sub->add_option("--normalizer", normalizer, "box | punctured")->check(CLI::IsMember({"box", "punctured"}));
        sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "output file (default: standard output)");
    };
    add_common(app.add_subcommand("distance", "distance table over B_h"), 3);
    add_common(app.add_subcommand("velocity", "box-average velocity over a doubling schedule of h"), 1000);
    auto* cdf = app.add_subcommand("cdf", "empirical vs limiting knight/king ratio distribution");
    add_common(cdf, 500);
    cdf->add_option("--grid-resolution", grid_resolution, "number of t-grid intervals");
    add_common(app.add_subcommand("fibo", "Fiboknight velocities and golden-ratio limits"), 12);
    add_common(app.add_subcommand("sumset", "sumset and shell sizes of lA0"), 40);
    add_common(app.add_subcommand("report", "one-line estimator summary"), 200);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    kr::RunConfig config;
    config.subcommand = app.get_subcommands().front()->get_name();
    try {
        config.piece = kr::parse_piece_spec(piece_tokens);
    } catch (const kr::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    config.radius = radius;
    if (margin >= 0) config.margin = margin;
    config.normalizer = knightlab::parse_normalizer(normalizer);
    config.format = format == "json" ? kr::Format::Json : kr::Format::Csv;
    config.out = out_path;
    config.grid_resolution = grid_resolution;

    if (out_path.empty()) return kr::run(config, std::cout, std::cerr);
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << out_path << '\n';
        return 2;
    }
    return kr::run(config, file, std::cerr);
}
