#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wtss/errors.hpp"
#include "wtss/flow_cut.hpp"
#include "wtss/graph.hpp"
#include "wtss/lb_generators.hpp"
#include "wtss/oracle.hpp"
#include "wtss/shortest_path.hpp"
#include "wtss/wtss_builder.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw wtss::ParseError("cannot open '" + path + "' for writing");
    return out;
}

void write_witness_file(const wtss::LBInstance& inst, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "# family " << inst.family << '\n';
    out << "# predicted-edges " << inst.predicted_edge_count << '\n';
    if (!inst.note.empty()) out << "# note: " << inst.note << '\n';
    for (const auto& w : inst.witnesses) {
        out << "wit " << w.label;
        for (const auto& [e, amount] : w.increment.amounts)
            out << ' ' << e << '=' << amount.to_string();
        out << '\n';
    }
}

std::vector<wtss::IncrementFunction> load_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wtss::ParseError("cannot open '" + path + "'");
    std::vector<wtss::IncrementFunction> witnesses;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head) || head[0] == '#') continue;
        if (head != "wit")
            throw wtss::ParseError("witness file line " + std::to_string(line_no) +
                                   ": expected 'wit'");
        std::string label;
        if (!(fields >> label))
            throw wtss::ParseError("witness file line " + std::to_string(line_no) +
                                   ": missing label");
        wtss::IncrementFunction inc;
        std::string entry;
        while (fields >> entry) {
            auto eq = entry.find('=');
            if (eq == std::string::npos)
                throw wtss::ParseError("witness file line " + std::to_string(line_no) +
                                       ": expected <edge>=<amount>");
            int edge = std::stoi(entry.substr(0, eq));
            inc.set(edge, wtss::Rational::parse(entry.substr(eq + 1)));
        }
        witnesses.push_back(std::move(inc));
    }
    return witnesses;
}

std::string dist_to_string(const std::optional<wtss::Rational>& d) {
    return d ? d->to_string() : std::string("unreachable");
}

void print_counterexample(const wtss::Counterexample& ce) {
    std::cout << "counterexample increment " << ce.increment.to_string() << '\n';
    std::cout << "counterexample target " << ce.target << '\n';
    std::cout << "counterexample dist-in-graph " << dist_to_string(ce.dist_in_g) << '\n';
    std::cout << "counterexample dist-in-subgraph " << dist_to_string(ce.dist_in_h) << '\n';
}

std::string default_sidecar(const std::string& output, const char* suffix) {
    return output + suffix;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weight-tolerant shortest-path subgraph toolkit"};
    app.require_subcommand(1);

    std::string input, output, subgraph_path, witness_path, map_path, stats_path, family,
        sources_arg;
    int k = 1;
    int size = 0;
    int target = -1;
    bool raw_cut = false;
    bool no_exhaustive = false;

    auto* gen = app.add_subcommand("gen", "generate an adversarial instance");
    gen->add_option("--family", family, "tree|rational-weight|rational-increment|decrement")
        ->required();
    gen->add_option("--k", k, "increment budget (tree family)");
    gen->add_option("--size", size, "x for tree, n for the others")->required();
    gen->add_option("--output", output, "graph file to write")->required();
    gen->add_option("--witness-output", witness_path, "witness file (default <output>.wit)");

    auto* build = app.add_subcommand("build", "build the whole weight-tolerant subgraph");
    build->add_option("--k", k, "increment budget")->required();
    build->add_option("--input", input, "graph file")->required();
    build->add_option("--output", output, "subgraph file to write")->required();
    build->add_option("--stats-output", stats_path, "stats sidecar (default <output>.stats)");

    auto* build_t = app.add_subcommand("build-t", "build the subgraph for one target");
    build_t->add_option("--k", k, "increment budget")->required();
    build_t->add_option("--target", target, "target vertex")->required();
    build_t->add_option("--input", input, "graph file")->required();
    build_t->add_option("--output", output, "subgraph file to write")->required();
    build_t->add_option("--stats-output", stats_path, "stats sidecar (default <output>.stats)");

    auto* verify = app.add_subcommand("verify", "exhaustively verify a subgraph");
    verify->add_option("--k", k, "increment budget")->required();
    verify->add_option("--input", input, "graph file")->required();
    verify->add_option("--subgraph", subgraph_path, "candidate subgraph file")->required();

    auto* verify_t = app.add_subcommand("verify-t", "verify a subgraph for one target");
    verify_t->add_option("--k", k, "increment budget")->required();
    verify_t->add_option("--target", target, "target vertex")->required();
    verify_t->add_option("--input", input, "graph file")->required();
    verify_t->add_option("--subgraph", subgraph_path, "candidate subgraph file")->required();

    auto* necessity = app.add_subcommand("necessity", "per-edge necessity certification");
    necessity->add_option("--k", k, "increment budget")->required();
    necessity->add_option("--input", input, "graph file")->required();
    necessity->add_option("--witnesses", witness_path, "witness file");
    necessity->add_flag("--no-exhaustive", no_exhaustive,
                        "skip the integer enumeration, use witnesses only");

    auto* transform = app.add_subcommand("transform", "out-degree reduction");
    transform->add_option("--input", input, "graph file")->required();
    transform->add_option("--output", output, "transformed graph file")->required();
    transform->add_option("--map-output", map_path, "edge mapping sidecar (default <output>.map)");

    auto* dist = app.add_subcommand("dist", "single-source shortest distances");
    dist->add_option("--input", input, "graph file")->required();

    auto* cut = app.add_subcommand("cut", "farthest min-cut towards a target");
    cut->add_option("--input", input, "graph file")->required();
    cut->add_option("--target", target, "target vertex")->required();
    cut->add_option("--sources", sources_arg, "comma-separated source set (default: file source)");
    cut->add_flag("--raw", raw_cut, "cut the whole graph, not its shortest-path subgraph");

    auto* stats_cmd = app.add_subcommand("stats", "in-degree statistics of a built subgraph");
    stats_cmd->add_option("--k", k, "increment budget the subgraph was built for")->required();
    stats_cmd->add_option("--input", input, "subgraph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (gen->parsed()) {
            wtss::LBInstance inst = [&] {
                if (family == "tree") return wtss::gen_tree_lb(k, size);
                if (family == "rational-weight") return wtss::gen_rational_weight_lb(size);
                if (family == "rational-increment") return wtss::gen_rational_increment_lb(size);
                if (family == "decrement") return wtss::gen_decrement_lb(size);
                throw wtss::ParameterError("unknown family '" + family + "'");
            }();
            std::ofstream out = open_output(output);
            wtss::serialize(inst.graph, out);
            write_witness_file(inst,
                               witness_path.empty() ? default_sidecar(output, ".wit") : witness_path);
            if (!inst.note.empty()) std::cout << "note: " << inst.note << '\n';
            std::cout << "edges " << inst.graph.edge_count() << '\n';
            return kExitOk;
        }
        if (build->parsed() || build_t->parsed()) {
            wtss::Graph g = wtss::load_graph_file(input);
            wtss::WtssResult result = build->parsed()
                                          ? wtss::build_wtss(g, g.source(), k)
                                          : wtss::build_wtss_t(g, g.source(), target, k);
            std::ofstream out = open_output(output);
            wtss::serialize(result.h, out);
            wtss::Statistics st = wtss::stats(result);
            std::ofstream sidecar = open_output(
                stats_path.empty() ? default_sidecar(output, ".stats") : stats_path);
            wtss::write_stats(st, sidecar);
            if (st.max_in_degree > st.in_degree_cap)
                throw std::logic_error("in-degree above its cap");
            std::cout << "edges " << st.edge_count << '\n';
            return kExitOk;
        }
        if (verify->parsed() || verify_t->parsed()) {
            wtss::Graph g = wtss::load_graph_file(input);
            wtss::Graph h_graph = wtss::load_graph_file(subgraph_path);
            wtss::Subgraph h = wtss::subgraph_of(g, h_graph);
            auto ce = verify->parsed() ? wtss::verify_wtss(g, h, g.source(), k)
                                       : wtss::verify_wtss_t(g, h, g.source(), target, k);
            if (ce) {
                print_counterexample(*ce);
                return kExitCounterexample;
            }
            std::cout << "pass\n";
            return kExitOk;
        }
        if (necessity->parsed()) {
            wtss::Graph g = wtss::load_graph_file(input);
            std::vector<wtss::IncrementFunction> witnesses;
            if (!witness_path.empty()) witnesses = load_witness_file(witness_path);
            wtss::NecessityReport report =
                wtss::verify_edge_necessity(g, g.source(), k, witnesses, !no_exhaustive);
            for (const auto& entry : report.edges) {
                const wtss::Edge& e = g.edge(entry.edge);
                std::cout << "edge " << entry.edge << ' ' << e.tail << ' ' << e.head << ' '
                          << (entry.status == wtss::Necessity::kNecessary ? "NECESSARY"
                                                                          : "NOT-PROVEN")
                          << '\n';
            }
            return kExitOk;
        }
        if (transform->parsed()) {
            wtss::Graph g = wtss::load_graph_file(input);
            wtss::TransformResult tr = wtss::reduce_out_degree(g);
            std::ofstream out = open_output(output);
            wtss::serialize(tr.graph, out);
            std::ofstream map_out =
                open_output(map_path.empty() ? default_sidecar(output, ".map") : map_path);
            for (wtss::EdgeId e = 0; e < g.edge_count(); ++e) {
                const auto& leaf = tr.mapping.leaf_of_original[static_cast<std::size_t>(e)];
                if (leaf) map_out << "map " << e << ' ' << *leaf << '\n';
            }
            return kExitOk;
        }
        if (dist->parsed()) {
            wtss::Graph g = wtss::load_graph_file(input);
            wtss::DistanceTable table = wtss::sssp(wtss::full_view(g), g.source());
            for (wtss::VertexId v = 0; v < g.vertex_count(); ++v)
                std::cout << "v " << v << ' ' << dist_to_string(table.get(v)) << '\n';
            return kExitOk;
        }
        if (cut->parsed()) {
            wtss::Graph g = wtss::load_graph_file(input);
            std::vector<wtss::VertexId> sources;
            if (sources_arg.empty()) {
                sources.push_back(g.source());
            } else {
                std::istringstream in(sources_arg);
                std::string tok;
                while (std::getline(in, tok, ',')) sources.push_back(std::stoi(tok));
            }
            wtss::CutResult result =
                raw_cut ? wtss::farthest_min_cut(wtss::full_view(g), sources, target)
                        : wtss::fsmc(wtss::full_view(g), sources, g.source(), target);
            std::cout << "value " << result.cut.size() << '\n';
            for (wtss::EdgeId e : result.cut)
                std::cout << "cut " << e << ' ' << g.edge(e).tail << ' ' << g.edge(e).head << '\n';
            for (wtss::VertexId v : result.side_a) std::cout << "a " << v << '\n';
            for (wtss::VertexId v : result.side_b) std::cout << "b " << v << '\n';
            return kExitOk;
        }
        if (stats_cmd->parsed()) {
            wtss::Graph h = wtss::load_graph_file(input);
            std::vector<std::size_t> in_degree(static_cast<std::size_t>(h.vertex_count()), 0);
            for (const wtss::Edge& e : h.edges()) ++in_degree[static_cast<std::size_t>(e.head)];
            std::size_t max_in = 0;
            for (std::size_t d : in_degree) max_in = std::max(max_in, d);
            unsigned long long cap = wtss::indegree_bound(k);
            std::cout << "edges " << h.edge_count() << '\n';
            std::cout << "max_indegree " << max_in << '\n';
            std::cout << "bound " << cap << '\n';
            if (max_in > cap) {
                std::cerr << "error: in-degree above its cap\n";
                return kExitCounterexample;
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
