// propc: exact proper connection numbers, certified colorings, dominating
// sets, claim-verification campaigns, and DOT rendering for small graphs.
//
// Exit codes: 0 success/PASS, 1 claim violations, 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "propc/propc.hpp"

namespace {

using namespace propc;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GraphFormat to_format(const std::string& name) {
    if (name == "auto") return GraphFormat::autodetect;
    if (name == "graph6") return GraphFormat::graph6;
    if (name == "edge-list") return GraphFormat::edge_list;
    throw argument_error("unknown format '" + name + "' (use auto, graph6, or edge-list)");
}

nlohmann::json coloring_to_json(const EdgeColoring& c) {
    nlohmann::json edges = nlohmann::json::array();
    const Graph& g = c.host();
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [u, v] = g.edges()[i];
        edges.push_back({u, v, c.color_of_edge(static_cast<int>(i))});
    }
    return edges;
}

void print_coloring(std::ostream& out, const EdgeColoring& c) { out << emit_edge_coloring(c); }

struct GlobalFlags {
    std::string format = "auto";
    long long budget_nodes = 0;
    bool json = false;

    SearchBudget budget() const {
        SearchBudget b;
        if (budget_nodes > 0) b.max_nodes = budget_nodes;
        return b;
    }
};

int cmd_pc(const std::string& file, const GlobalFlags& flags) {
    Graph g = parse_graph(slurp(file), to_format(flags.format));
    PcResult r = pc_exact(g, flags.budget());
    if (flags.json) {
        nlohmann::json j{{"vertices", g.vertex_count()},
                         {"edges", g.edge_count()},
                         {"pc", r.value},
                         {"exhausted_below", r.exhausted_below},
                         {"coloring", coloring_to_json(r.certificate)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "pc = " << r.value << " on " << g.vertex_count() << " vertices, "
                  << g.edge_count() << " edges\n";
        if (!r.exhausted_below)
            std::cout << "(lower bound from tree structure; smaller palettes not searched)\n";
        print_coloring(std::cout, r.certificate);
    }
    return 0;
}

const char* method_name(ConstructionMethod m) {
    return m == ConstructionMethod::direct ? "direct" : "fallback_search";
}

int cmd_color(const std::string& method, const std::string& file, const GlobalFlags& flags) {
    SearchBudget budget = flags.budget();
    std::string text = slurp(file);
    // the outcome's coloring refers into this graph, so it must outlive it
    std::optional<Graph> g;
    std::optional<ConstructionOutcome> result;
    if (method == "interval") {
        IntervalRepresentation rep = parse_interval_representation(text);
        g = realize(rep);
        result = color_interval(*g, rep, budget);
    } else if (method == "circular-arc") {
        ArcRepresentation rep = parse_arc_representation(text);
        g = realize(rep);
        result = color_circular_arc(*g, rep, budget);
    } else {
        g = parse_graph(text, to_format(flags.format));
        if (method == "tree") {
            result = color_tree(*g, budget);
        } else if (method == "traceable") {
            auto path = hamiltonian_path(*g, budget);
            if (!path) throw argument_error("graph has no spanning path");
            result = color_traceable(*g, *path, budget);
        } else if (method == "two-step") {
            auto cert = min_connected_two_way_two_step_dominating(*g, budget);
            result = color_from_two_step_dominating(*g, cert, budget);
        } else if (method == "dominating") {
            auto cert = min_connected_two_way_dominating(*g, budget);
            result = color_from_dominating(*g, cert, budget);
        } else {
            throw argument_error("unknown method '" + method +
                                 "' (tree, traceable, two-step, dominating, interval, circular-arc)");
        }
    }
    ConstructionOutcome& out = *result;
    if (flags.json) {
        nlohmann::json j{{"method", method},
                         {"colors_used", out.colors_used},
                         {"guarantee", out.guarantee},
                         {"scheme", method_name(out.method)},
                         {"verified", out.verified},
                         {"coloring", coloring_to_json(out.coloring)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "colors_used = " << out.colors_used << " (guarantee " << out.guarantee
                  << ", " << method_name(out.method) << ", "
                  << (out.verified ? "verified" : "NOT VERIFIED") << ")\n";
        print_coloring(std::cout, out.coloring);
    }
    return out.verified ? 0 : 1;
}

int cmd_dominate(const std::string& kind, const std::string& file, const GlobalFlags& flags) {
    Graph g = parse_graph(slurp(file), to_format(flags.format));
    DominationCertificate cert;
    if (kind == "two-way")
        cert = min_connected_two_way_dominating(g, flags.budget());
    else if (kind == "two-way-two-step")
        cert = min_connected_two_way_two_step_dominating(g, flags.budget());
    else
        throw argument_error("unknown kind '" + kind + "' (two-way, two-way-two-step)");
    auto members = cert.d.to_vector();
    if (flags.json) {
        nlohmann::json j{{"kind", kind},
                         {"size", cert.size},
                         {"members", members},
                         {"induced_connected", cert.induced_connected},
                         {"meets_size_bound", cert.meets_size_bound}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "minimum " << kind << " connected dominating set, size " << cert.size << ":";
        for (int v : members) std::cout << " " << v;
        std::cout << "\n";
        std::cout << "size bound 3n/(delta+1)-2 " << (cert.meets_size_bound ? "holds" : "exceeded")
                  << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& id, int n, int count, unsigned long long seed,
               const std::string& corpus_file, const GlobalFlags& flags) {
    CampaignOptions opts;
    opts.n = n;
    opts.count = count;
    if (seed) opts.seed = seed;
    opts.budget = flags.budget();
    if (!corpus_file.empty()) {
        std::vector<Graph> corpus;
        std::string text = slurp(corpus_file);
        detail::LineCursor cursor{text};
        while (auto line = cursor.next()) {
            try {
                corpus.push_back(parse_graph6(line->first));
            } catch (const parse_error& e) {
                throw parse_error(std::string(e.what()) + " (corpus line at byte " +
                                      std::to_string(line->second) + ")",
                                  line->second + e.byte_offset);
            }
        }
        opts.corpus = std::move(corpus);
    }
    CampaignReport report = run_campaign(id, opts);
    if (flags.json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << report.theorem << ": " << (report.pass ? "PASS" : "FAIL") << " over "
                  << report.instances << " instances (" << report.corpus << ", "
                  << static_cast<long long>(report.wall_ms) << " ms)\n";
        for (const auto& v : report.violations)
            std::cout << "  violation " << v.graph6 << ": " << v.detail << "\n";
    }
    return report.pass ? 0 : 1;
}

int cmd_render(const std::string& file, const std::string& coloring_file,
               const std::string& highlight, const GlobalFlags& flags) {
    Graph g = parse_graph(slurp(file), to_format(flags.format));
    std::optional<EdgeColoring> coloring;
    if (!coloring_file.empty()) coloring = parse_edge_coloring(slurp(coloring_file), g);
    std::optional<VertexSet> highlights;
    if (!highlight.empty()) {
        VertexSet d(g.vertex_count());
        std::istringstream in(highlight);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            int v = static_cast<int>(detail::parse_int_field(tok, 0));
            if (v < 0 || v >= g.vertex_count())
                throw argument_error("highlight vertex " + tok + " out of range");
            d.insert(v);
        }
        highlights = std::move(d);
    }
    std::cout << emit_dot(g, coloring ? &*coloring : nullptr, highlights ? &*highlights : nullptr);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper connection numbers, certified colorings, and claim campaigns"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--format", flags.format, "input graph format: auto, graph6, edge-list")
        ->capture_default_str();
    app.add_option("--budget", flags.budget_nodes, "search node budget (default 100000000)");
    app.add_flag("--json", flags.json, "machine-readable JSON output");

    std::string file, method, kind, theorem, corpus_file, coloring_file, highlight;
    int n = 0, count = 0;
    unsigned long long seed = 0;

    auto* pc_cmd = app.add_subcommand("pc", "exact proper connection number with certificate");
    pc_cmd->add_option("file", file, "graph file ('-' for stdin)")->required();

    auto* color_cmd = app.add_subcommand("color", "build a certified proper-path coloring");
    color_cmd
        ->add_option("--method", method,
                     "tree, traceable, two-step, dominating, interval, circular-arc")
        ->required();
    color_cmd
        ->add_option("file", file,
                     "graph file; interval/circular-arc take a representation file")
        ->required();

    auto* dom_cmd = app.add_subcommand("dominate", "minimum connected dominating set of a kind");
    dom_cmd->add_option("--kind", kind, "two-way, two-way-two-step")->required();
    dom_cmd->add_option("file", file, "graph file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a claim-verification campaign");
    verify_cmd->add_option("id", theorem, "claim id (e.g. C3.1; see docs for the registry)")
        ->required();
    verify_cmd->add_option("--n", n, "order override for the built-in corpus");
    verify_cmd->add_option("--count", count, "instance count override");
    verify_cmd->add_option("--seed", seed, "corpus seed override");
    verify_cmd->add_option("--corpus", corpus_file, "graph6 file, one graph per line");

    auto* render_cmd = app.add_subcommand("render", "emit DOT, optionally colored/highlighted");
    render_cmd->add_option("file", file, "graph file")->required();
    render_cmd->add_option("--coloring", coloring_file, "edge coloring file ('u v color' lines)");
    render_cmd->add_option("--highlight", highlight, "comma-separated vertex ids to fill");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pc_cmd->parsed()) return cmd_pc(file, flags);
        if (color_cmd->parsed()) return cmd_color(method, file, flags);
        if (dom_cmd->parsed()) return cmd_dominate(kind, file, flags);
        if (verify_cmd->parsed()) return cmd_verify(theorem, n, count, seed, corpus_file, flags);
        if (render_cmd->parsed()) return cmd_render(file, coloring_file, highlight, flags);
    } catch (const parse_error& e) {
        std::cerr << "parse error at byte " << e.byte_offset << ": " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
