// command line front end: check | graph | path | fill | moves | enumerate
//
// exit codes: 0 success / signable, 1 negative verdict (not signable, no path
// within bound), 2 input or validation error, 3 oracle disagreement.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "signedflips/filler.hpp"
#include "signedflips/flip_graph.hpp"
#include "signedflips/json_io.hpp"
#include "signedflips/oracle.hpp"
#include "signedflips/simplicial.hpp"
#include "signedflips/triangulation.hpp"

namespace {

struct RunConfig {
    std::string input_a, input_b;
    std::string output;
    std::string format = "dot";
    bool oracle = false;
    bool signable = false;
    int max_len = 10;
    int n = 0;
    unsigned seed = 0;  // reserved for randomized subcommands; none exist yet
};

bool verbose() {
    static const bool on = std::getenv("SIGNEDFLIPS_LOG") != nullptr;
    return on;
}

void log_line(const std::string& msg) {
    if (verbose()) std::cerr << "[signedflips] " << msg << "\n";
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty())
        std::cout << text;
    else
        sdf::write_text_file(cfg.output, text);
}

int cmd_check(const RunConfig& cfg) {
    auto seq = sdf::sequence_from_json(sdf::load_json_file(cfg.input_a));
    log_line("sequence of " + std::to_string(seq.size()) + " flips on the " +
             std::to_string(seq.start.n()) + "-gon");

    auto result = sdf::is_signable(seq);
    std::optional<bool> oracle_verdict;
    if (cfg.oracle) oracle_verdict = sdf::oracle_signable(seq);

    if (result.signable) {
        std::cout << "SIGNABLE\n";
        emit(cfg, sdf::dump_pretty(sdf::to_json(*result.lifted)));
    } else {
        std::cout << "NOT-SIGNABLE\n";
        std::cout << "odd cycle (length " << result.witness->cycle.size() << "):";
        for (int i : result.witness->cycle) std::cout << " " << i;
        std::cout << "\n";
    }

    if (oracle_verdict.has_value()) {
        if (*oracle_verdict != result.signable) {
            std::cerr << "oracle: DISAGREE (graph says " << (result.signable ? "yes" : "no")
                      << ", brute force says " << (*oracle_verdict ? "yes" : "no") << ")\n";
            return 3;
        }
        std::cout << "oracle: agree\n";
    }
    return result.signable ? 0 : 1;
}

int cmd_graph(const RunConfig& cfg) {
    auto seq = sdf::sequence_from_json(sdf::load_json_file(cfg.input_a));
    auto g = sdf::build_flip_graph(seq);
    log_line("graph on " + std::to_string(g.order) + " flips with " +
             std::to_string(g.edges.size()) + " edges");

    auto res = sdf::two_color(g);
    const sdf::TwoColoring* coloring = std::get_if<sdf::TwoColoring>(&res);

    if (cfg.format == "dot") {
        emit(cfg, sdf::to_dot(g, coloring));
    } else if (cfg.format == "json") {
        emit(cfg, sdf::dump_pretty(sdf::to_json(g, coloring)));
    } else {
        throw sdf::ParseError("unknown format \"" + cfg.format + "\" (use dot or json)");
    }
    return 0;
}

int cmd_path(const RunConfig& cfg) {
    auto a = sdf::triangulation_from_json(sdf::load_json_file(cfg.input_a));
    auto b = sdf::triangulation_from_json(sdf::load_json_file(cfg.input_b));

    if (cfg.signable) {
        auto path = sdf::find_signable_path(a, b, cfg.max_len);
        if (!path.has_value()) {
            std::cerr << "no signable path of length <= " << cfg.max_len << "\n";
            return 1;
        }
        emit(cfg, sdf::dump_pretty(sdf::to_json(*path)));
        return 0;
    }
    auto path = sdf::find_flip_path(a, b);
    emit(cfg, sdf::dump_pretty(sdf::to_json(path)));
    return 0;
}

int cmd_fill(const RunConfig& cfg) {
    auto complex = sdf::complex_from_json(sdf::load_json_file(cfg.input_a));
    auto coloring = sdf::color_map_from_json(sdf::load_json_file(cfg.input_b));
    log_line("filling a " + std::to_string(complex.dim) + "-sphere with " +
             std::to_string(complex.facets.size()) + " facets");

    sdf::SimplicialComplex filled =
        complex.dim == 2 ? sdf::fill_ball_3d(complex, coloring)
                         : sdf::fill_ball_nd(complex, coloring);
    emit(cfg, sdf::dump_pretty(sdf::to_json(filled)));
    return 0;
}

int cmd_moves(const RunConfig& cfg) {
    auto complex = sdf::complex_from_json(sdf::load_json_file(cfg.input_a));
    auto coloring = sdf::color_map_from_json(sdf::load_json_file(cfg.input_b));
    auto moves = sdf::decompose_to_moves(complex, coloring);
    log_line(std::to_string(moves.steps.size()) + " moves from seed");
    emit(cfg, sdf::dump_pretty(sdf::to_json(moves)));
    return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
    auto all = sdf::enumerate_triangulations(cfg.n);
    sdf::json out;
    out["n"] = cfg.n;
    out["count"] = all.size();
    sdf::json list = sdf::json::array();
    for (const auto& t : all) list.push_back(sdf::to_json(t)["triangles"]);
    out["triangulations"] = std::move(list);
    emit(cfg, sdf::dump_pretty(out));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed diagonal flip sequences on polygon triangulations"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "seed for randomized subcommands (currently unused)");

    auto add_output = [&cfg](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "write the result to a file instead of stdout");
    };

    auto* check = app.add_subcommand("check", "decide signability of a flip sequence");
    check->add_option("sequence", cfg.input_a, "flip sequence JSON file")->required();
    check->add_flag("--oracle", cfg.oracle, "cross-check with the brute-force oracle");
    add_output(check);

    auto* graph = app.add_subcommand("graph", "export the flip-interaction graph");
    graph->add_option("sequence", cfg.input_a, "flip sequence JSON file")->required();
    graph->add_option("--format", cfg.format, "dot (default) or json");
    add_output(graph);

    auto* path = app.add_subcommand("path", "find a flip path between two triangulations");
    path->add_option("from", cfg.input_a, "triangulation JSON file")->required();
    path->add_option("to", cfg.input_b, "triangulation JSON file")->required();
    path->add_flag("--signable", cfg.signable, "require a signable path");
    path->add_option("--max-len", cfg.max_len, "bound for the signable search (default 10)");
    add_output(path);

    auto* fill = app.add_subcommand("fill", "fill a colored sphere to a ball");
    fill->add_option("complex", cfg.input_a, "sphere complex JSON file")->required();
    fill->add_option("coloring", cfg.input_b, "vertex coloring JSON file")->required();
    add_output(fill);

    auto* moves = app.add_subcommand("moves", "decompose a colored sphere into moves I/II");
    moves->add_option("complex", cfg.input_a, "sphere complex JSON file")->required();
    moves->add_option("coloring", cfg.input_b, "vertex coloring JSON file")->required();
    add_output(moves);

    auto* enumerate = app.add_subcommand("enumerate", "list all triangulations of the n-gon");
    enumerate->add_option("n", cfg.n, "polygon size (3..14)")->required();
    add_output(enumerate);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(cfg);
        if (graph->parsed()) return cmd_graph(cfg);
        if (path->parsed()) return cmd_path(cfg);
        if (fill->parsed()) return cmd_fill(cfg);
        if (moves->parsed()) return cmd_moves(cfg);
        if (enumerate->parsed()) return cmd_enumerate(cfg);
    } catch (const sdf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
