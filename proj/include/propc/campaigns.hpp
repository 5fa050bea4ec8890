#pragma once
// Claim-verification campaigns: each registered id filters a corpus to its
// hypothesis, checks its conclusion with the exact solver / constructions /
// domination search, and aggregates violations into a timed report.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "classes.hpp"
#include "coloring.hpp"
#include "constructions.hpp"
#include "domination.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "graph.hpp"
#include "io.hpp"

namespace propc {

struct Violation {
    std::string graph6;
    std::string detail;
};

struct CampaignReport {
    std::string theorem;
    std::string corpus;
    long long instances = 0;
    std::vector<Violation> violations;
    bool pass = false;
    double wall_ms = 0.0;
    double mean_instance_ms = 0.0;
    double max_instance_ms = 0.0;
    std::string max_instance_graph6;
};

struct CampaignOptions {
    std::optional<std::vector<Graph>> corpus;  // overrides the built-in corpus
    int n = 0;                                 // overrides the default order cap
    int count = 0;                             // overrides the default instance count
    std::uint64_t seed = 20260815;
    SearchBudget budget{};
};

inline const std::vector<std::string>& campaign_ids() {
    static const std::vector<std::string> ids = {
        "L2.1", "L2.2", "L2.3", "P1",    "T3.1",  "C3.1",   "C3.2",  "L2.4",
        "C3.3", "T4.1", "C4.2i", "C4.2ii", "C4.2iii", "C4.2iv", "T4.2",
    };
    return ids;
}

// all labeled connected simple graphs on n vertices, each exactly once
inline std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1) throw argument_error("vertex count must be positive");
    if (n > 6)
        throw budget_error(
            "orders above 6 are not enumerated in-process; supply a graph6 corpus file instead", 0);
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1u << i)) edges.push_back(slots[i]);
        Graph g(n, std::move(edges));
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

namespace detail {

class CampaignRun {
  public:
    CampaignRun(std::string theorem, std::string corpus_desc) {
        report_.theorem = std::move(theorem);
        report_.corpus = std::move(corpus_desc);
        start_ = std::chrono::steady_clock::now();
    }

    // run one instance check; the callback returns a violation message or nothing
    template <typename Check>
    void instance(const Graph& g, Check&& check) {
        auto t0 = std::chrono::steady_clock::now();
        std::optional<std::string> fail;
        try {
            fail = check();
        } catch (const budget_error& e) {
            fail = std::string("search budget exhausted: ") + e.what();
        } catch (const std::exception& e) {
            fail = std::string("error: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
        ++report_.instances;
        total_instance_ms_ += ms;
        if (ms > report_.max_instance_ms) {
            report_.max_instance_ms = ms;
            report_.max_instance_graph6 = emit_graph6(g);
        }
        if (fail) report_.violations.push_back({emit_graph6(g), *fail});
    }

    CampaignReport finish() {
        report_.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
                .count();
        report_.mean_instance_ms =
            report_.instances ? total_instance_ms_ / static_cast<double>(report_.instances) : 0.0;
        report_.pass = report_.violations.empty();
        return std::move(report_);
    }

  private:
    CampaignReport report_;
    std::chrono::steady_clock::time_point start_;
    double total_instance_ms_ = 0.0;
};

inline bool verified_proper(const Graph& g, const EdgeColoring& c) {
    return is_proper_path_coloring(g, c).pass;
}

inline std::vector<Graph> enumerated_range(int lo, int hi) {
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n)
        for (auto& g : enumerate_connected_graphs(n)) out.push_back(std::move(g));
    return out;
}

inline void reject_external_corpus(const CampaignOptions& opts, const char* id) {
    if (opts.corpus)
        throw argument_error(std::string(id) +
                             " generates representation-backed instances internally; a plain "
                             "graph corpus cannot supply the geometric model");
}

inline bool is_path_shaped(const Graph& g) {
    return g.vertex_count() >= 3 && is_connected(g) &&
           g.edge_count() == g.vertex_count() - 1 && max_degree(g) <= 2;
}

// keeps the vertex set, deletes a random subset of edges subject to staying connected
inline Graph random_spanning_connected_subgraph(const Graph& g, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges = g.edges();
    for (std::size_t i = edges.size(); i > 1; --i)
        std::swap(edges[i - 1], edges[pick(rng, 0, static_cast<int>(i) - 1)]);
    std::vector<std::pair<int, int>> kept = edges;
    for (const auto& e : edges) {
        if (pick(rng, 0, 1) == 0) continue;
        std::vector<std::pair<int, int>> trial;
        for (const auto& f : kept)
            if (f != e) trial.push_back(f);
        if (is_connected(Graph(g.vertex_count(), trial))) kept = std::move(trial);
    }
    return Graph(g.vertex_count(), std::move(kept));
}

// --- the fifteen registered campaigns ---------------------------------

inline CampaignReport campaign_paths_need_two(const CampaignOptions& opts) {
    int hi = opts.n ? opts.n : 10;
    std::vector<Graph> corpus;
    if (opts.corpus) {
        for (const auto& g : *opts.corpus)
            if (is_path_shaped(g)) corpus.push_back(g);
    } else {
        for (int n = 3; n <= hi; ++n) corpus.push_back(path_graph(n));
    }
    CampaignRun run("L2.1", opts.corpus ? "supplied graphs filtered to paths"
                                        : "paths on 3.." + std::to_string(hi) + " vertices");
    for (const auto& g : corpus)
        run.instance(g, [&]() -> std::optional<std::string> {
            auto r = pc_exact(g, opts.budget);
            if (r.value != 2) return "expected exactly 2 colors, solver found " + std::to_string(r.value);
            if (!verified_proper(g, r.certificate)) return "certificate failed verification";
            return std::nullopt;
        });
    return run.finish();
}

inline CampaignReport campaign_spanning_monotonicity(const CampaignOptions& opts) {
    int count = opts.count ? opts.count : 150;
    int cap = opts.n ? opts.n : 7;
    std::mt19937_64 rng(opts.seed);
    CampaignRun run("L2.2", "random connected graphs up to " + std::to_string(cap) +
                                " vertices with random spanning connected subgraphs (" +
                                std::to_string(count) + " pairs)");
    std::vector<Graph> pool;
    if (opts.corpus) {
        for (const auto& g : *opts.corpus)
            if (g.vertex_count() >= 2 && is_connected(g)) pool.push_back(g);
        count = static_cast<int>(pool.size());
    }
    for (int i = 0; i < count; ++i) {
        Graph g = opts.corpus ? pool[static_cast<std::size_t>(i)]
                              : random_connected_graph(pick(rng, 2, cap), 0.5, rng);
        Graph h = random_spanning_connected_subgraph(g, rng);
        run.instance(g, [&]() -> std::optional<std::string> {
            int pc_g = pc_exact(g, opts.budget).value;
            int pc_h = pc_exact(h, opts.budget).value;
            if (pc_g > pc_h)
                return "supergraph needs " + std::to_string(pc_g) + " colors but its spanning subgraph only " +
                       std::to_string(pc_h);
            return std::nullopt;
        });
    }
    return run.finish();
}

inline CampaignReport campaign_traceable_two(const CampaignOptions& opts) {
    int n = opts.n ? opts.n : 5;
    std::vector<Graph> corpus = opts.corpus ? *opts.corpus : enumerate_connected_graphs(n);
    CampaignRun run("L2.3", opts.corpus ? "supplied graphs filtered to traceable non-complete"
                                        : "all labeled connected graphs on " + std::to_string(n) +
                                              " vertices filtered to traceable non-complete");
    for (const auto& g : corpus) {
        if (g.vertex_count() < 2 || !is_connected(g) || is_complete(g)) continue;
        if (!hamiltonian_path(g, opts.budget)) continue;
        run.instance(g, [&]() -> std::optional<std::string> {
            auto c = pc_decision(g, 2, opts.budget);
            if (!c) return "no 2-coloring found for a traceable graph";
            if (!verified_proper(g, *c)) return "certificate failed verification";
            return std::nullopt;
        });
    }
    return run.finish();
}

inline CampaignReport campaign_trees_need_max_degree(const CampaignOptions& opts) {
    int count = opts.count ? opts.count : 500;
    int cap = opts.n ? opts.n : 9;
    std::mt19937_64 rng(opts.seed);
    CampaignRun run("P1", "random trees on 2.." + std::to_string(cap) + " vertices (" +
                              std::to_string(count) + " instances, decision searches at \xce\x94 and \xce\x94-1)");
    auto check_tree = [&](const Graph& t) {
        run.instance(t, [&]() -> std::optional<std::string> {
            int delta = max_degree(t);
            auto at = pc_decision(t, delta, opts.budget);
            if (!at) return "no coloring with " + std::to_string(delta) + " colors";
            if (!verified_proper(t, *at)) return "certificate failed verification";
            if (delta >= 2 && pc_decision(t, delta - 1, opts.budget))
                return "colored below the maximum degree";
            auto built = color_tree(t, opts.budget);
            if (!built.verified || built.colors_used != delta)
                return "tree construction did not deliver a verified maximum-degree coloring";
            return std::nullopt;
        });
    };
    if (opts.corpus) {
        for (const auto& g : *opts.corpus)
            if (g.vertex_count() >= 2 && is_tree(g)) check_tree(g);
    } else {
        for (int i = 0; i < count; ++i) check_tree(random_tree(pick(rng, 2, cap), rng));
    }
    return run.finish();
}

inline CampaignReport campaign_dominating_bound(const char* id, DominationKind kind,
                                                const CampaignOptions& opts) {
    int count = opts.count ? opts.count : 200;
    int cap = opts.n ? opts.n : 7;
    std::mt19937_64 rng(opts.seed);
    CampaignRun run(id, "random connected graphs on 2.." + std::to_string(cap) + " vertices (" +
                            std::to_string(count) + " instances, every minimum qualifying set)");
    auto check = [&](const Graph& g) {
        run.instance(g, [&]() -> std::optional<std::string> {
            int pc_g = pc_exact(g, opts.budget).value;
            auto mins = minimum_connected_dominating_sets(g, kind, opts.budget);
            if (mins.sets.empty()) return std::string("no qualifying dominating set exists");
            for (const auto& d : mins.sets) {
                int base = d.count() >= 2
                               ? pc_exact(induced_subgraph(g, d).graph, opts.budget).value
                               : 0;
                if (pc_g > base + 2)
                    return "needs " + std::to_string(pc_g) + " colors, dominating bound gives " +
                           std::to_string(base + 2);
                auto cert = classify_dominating_set(g, d);
                ConstructionOutcome out =
                    kind == DominationKind::two_way_two_step
                        ? color_from_two_step_dominating(g, cert, opts.budget)
                        : color_from_dominating(g, cert, opts.budget);
                if (!out.verified) return std::string("construction failed verification");
                if (out.colors_used > base + 2)
                    return "construction used " + std::to_string(out.colors_used) +
                           " colors against a budget of " + std::to_string(base + 2);
            }
            return std::nullopt;
        });
    };
    if (opts.corpus) {
        for (const auto& g : *opts.corpus)
            if (g.vertex_count() >= 2 && is_connected(g)) check(g);
    } else {
        for (int i = 0; i < count; ++i) check(random_connected_graph(pick(rng, 2, cap), 0.5, rng));
    }
    return run.finish();
}

inline CampaignReport campaign_diameter_two(const CampaignOptions& opts) {
    std::vector<Graph> corpus =
        opts.corpus ? *opts.corpus : enumerated_range(3, opts.n ? opts.n : 6);
    CampaignRun run("C3.1", opts.corpus
                                ? "supplied graphs filtered to diameter 2, minimum degree 2"
                                : "all labeled connected graphs on 3.." +
                                      std::to_string(opts.n ? opts.n : 6) +
                                      " vertices with diameter 2 and minimum degree 2");
    for (const auto& g : corpus) {
        if (!is_connected(g) || diameter(g) != 2 || min_degree(g) < 2) continue;
        run.instance(g, [&]() -> std::optional<std::string> {
            auto c = pc_decision(g, 2, opts.budget);
            if (!c) return std::string("no 2-coloring found");
            if (!verified_proper(g, *c)) return std::string("certificate failed verification");
            return std::nullopt;  // diameter 2 rules out completeness, so 2 is also a lower bound
        });
    }
    return run.finish();
}

inline CampaignReport campaign_chain_two(const CampaignOptions& opts) {
    reject_external_corpus(opts, "C3.2");
    int count = opts.count ? opts.count : 100;
    int side = opts.n ? opts.n : 6;
    std::mt19937_64 rng(opts.seed);
    CampaignRun run("C3.2", "random connected chain graphs with minimum degree 2, sides up to " +
                                std::to_string(side) + " (" + std::to_string(count) + " instances)");
    for (int i = 0; i < count; ++i) {
        ChainSpec spec = random_chain_spec(side, true, rng);
        Graph g = realize(spec);
        run.instance(g, [&]() -> std::optional<std::string> {
            auto r = pc_exact(g, opts.budget);
            if (r.value != 2) return "expected exactly 2 colors, solver found " + std::to_string(r.value);
            int b1 = static_cast<int>(spec.a_neighbors.size());  // b-side vertex seen by every a
            VertexSet d(g.vertex_count());
            d.insert(b1);
            auto out = color_from_two_step_dominating(g, classify_dominating_set(g, d), opts.budget);
            if (!out.verified || out.colors_used > 2)
                return std::string("construction from the full-degree b-vertex exceeded 2 colors");
            return std::nullopt;
        });
    }
    return run.finish();
}

inline CampaignReport campaign_small_set_exists(const CampaignOptions& opts) {
    int count = opts.count ? opts.count : 300;
    int cap = opts.n ? opts.n : 8;
    std::mt19937_64 rng(opts.seed);
    CampaignRun run("L2.4", "random connected graphs on 4.." + std::to_string(cap) + " vertices (" +
                                std::to_string(count) + " instances)");
    auto check = [&](const Graph& g) {
        run.instance(g, [&]() -> std::optional<std::string> {
            auto cert = min_connected_two_way_two_step_dominating(g, opts.budget);
            if (!cert.is_two_way_two_step || !cert.induced_connected)
                return std::string("search returned a non-qualifying set");
            if (!cert.meets_size_bound)
                return "smallest qualifying set has " + std::to_string(cert.size) +
                       " vertices, above the degree bound";
            return std::nullopt;
        });
    };
    if (opts.corpus) {
        for (const auto& g : *opts.corpus)
            if (g.vertex_count() >= 4 && is_connected(g)) check(g);
    } else {
        for (int i = 0; i < count; ++i) check(random_connected_graph(pick(rng, 4, cap), 0.5, rng));
    }
    return run.finish();
}

inline CampaignReport campaign_degree_bound(const CampaignOptions& opts) {
    std::vector<Graph> corpus =
        opts.corpus ? *opts.corpus : enumerated_range(4, opts.n ? opts.n : 6);
    CampaignRun run("C3.3", opts.corpus ? "supplied connected graphs on at least 4 vertices"
                                        : "all labeled connected graphs on 4.." +
                                              std::to_string(opts.n ? opts.n : 6) + " vertices");
    for (const auto& g : corpus) {
        if (g.vertex_count() < 4 || !is_connected(g)) continue;
        run.instance(g, [&]() -> std::optional<std::string> {
            int pc_g = pc_exact(g, opts.budget).value;
            int n = g.vertex_count();
            int d = min_degree(g);
            if ((pc_g + 1) * (d + 1) > 3 * n)
                return "needs " + std::to_string(pc_g) + " colors, over the 3n/(\xce\xb4+1)-1 budget";
            return std::nullopt;
        });
    }
    return run.finish();
}

inline CampaignReport campaign_interval_four(const CampaignOptions& opts) {
    reject_external_corpus(opts, "C4.2i");
    int count = opts.count ? opts.count : 50;
    int cap = opts.n ? opts.n : 8;
    std::mt19937_64 rng(opts.seed);
    GeneratorOptions gen;
    gen.require_min_degree_two = true;
    gen.require_non_complete = true;
    gen.max_edges = 15;
    CampaignRun run("C4.2i", "random connected non-complete interval graphs with minimum degree 2 (" +
                                 std::to_string(count) + " instances up to " + std::to_string(cap) +
                                 " vertices)");
    for (int i = 0; i < count; ++i) {
        auto inst = random_interval_instance(pick(rng, 4, cap), rng, gen);
        run.instance(inst.graph, [&]() -> std::optional<std::string> {
            int v = pc_exact(inst.graph, opts.budget).value;
            if (v > 4) return "interval graph needs " + std::to_string(v) + " colors";
            return std::nullopt;
        });
    }
    return run.finish();
}

inline CampaignReport campaign_at_free_four(const CampaignOptions& opts) {
    int count = opts.count ? opts.count : 50;
    int cap = opts.n ? opts.n : 7;
    std::mt19937_64 rng(opts.seed);
    CampaignRun run("C4.2ii", "random connected non-complete asteroidal-triple-free graphs with "
                              "minimum degree 2 (" + std::to_string(count) + " instances)");
    auto qualifies = [](const Graph& g) {
        return is_connected(g) && !is_complete(g) && min_degree(g) >= 2 && is_at_free(g).at_free;
    };
    auto check = [&](const Graph& g) {
        run.instance(g, [&]() -> std::optional<std::string> {
            int v = pc_exact(g, opts.budget).value;
            if (v > 4) return "asteroidal-triple-free graph needs " + std::to_string(v) + " colors";
            return std::nullopt;
        });
    };
    if (opts.corpus) {
        for (const auto& g : *opts.corpus)
            if (g.vertex_count() >= 3 && qualifies(g)) check(g);
    } else {
        int made = 0;
        for (int attempt = 0; attempt < 20000 && made < count; ++attempt) {
            Graph g = random_connected_graph(pick(rng, 4, cap), 0.3 + 0.05 * pick(rng, 0, 10), rng);
            if (!qualifies(g)) continue;
            ++made;
            check(g);
        }
        if (made < count) throw std::logic_error("rejection sampling exhausted its attempts");
    }
    return run.finish();
}

inline CampaignReport campaign_circular_arc_four(const CampaignOptions& opts) {
    reject_external_corpus(opts, "C4.2iii");
    int count = opts.count ? opts.count : 50;
    int cap = opts.n ? opts.n : 8;
    std::mt19937_64 rng(opts.seed);
    GeneratorOptions gen;
    gen.require_min_degree_two = true;
    gen.require_non_complete = true;
    gen.max_edges = 15;
    CampaignRun run("C4.2iii", "random connected non-complete circular-arc graphs with minimum "
                               "degree 2 (" + std::to_string(count) + " instances up to " +
                               std::to_string(cap) + " vertices)");
    for (int i = 0; i < count; ++i) {
        auto inst = random_arc_instance(pick(rng, 4, cap), rng, gen);
        run.instance(inst.graph, [&]() -> std::optional<std::string> {
            int v = pc_exact(inst.graph, opts.budget).value;
            if (v > 4) return "circular-arc graph needs " + std::to_string(v) + " colors";
            return std::nullopt;
        });
    }
    return run.finish();
}

inline CampaignReport campaign_threshold_two(const CampaignOptions& opts) {
    reject_external_corpus(opts, "C4.2iv");
    int count = opts.count ? opts.count : 50;
    int cap = opts.n ? opts.n : 8;
    std::mt19937_64 rng(opts.seed);
    GeneratorOptions gen;
    gen.require_min_degree_two = true;
    gen.require_non_complete = true;
    CampaignRun run("C4.2iv", "random connected non-complete threshold graphs with minimum degree 2 (" +
                                  std::to_string(count) + " instances)");
    for (int i = 0; i < count; ++i) {
        ThresholdSpec spec = random_threshold_spec(pick(rng, 4, cap), rng, gen);
        Graph g = realize(spec);
        run.instance(g, [&]() -> std::optional<std::string> {
            auto r = pc_exact(g, opts.budget);
            if (r.value != 2) return "expected exactly 2 colors, solver found " + std::to_string(r.value);
            VertexSet d(g.vertex_count());
            d.insert(max_weight_dominating_vertex(spec));
            auto out = color_from_dominating(g, classify_dominating_set(g, d), opts.budget);
            if (!out.verified || out.colors_used > 2)
                return std::string("construction from the heaviest vertex exceeded 2 colors");
            return std::nullopt;
        });
    }
    return run.finish();
}

inline CampaignReport campaign_geometric_three(const CampaignOptions& opts) {
    reject_external_corpus(opts, "T4.2");
    int per_side = (opts.count ? opts.count : 50) / 2;
    int cap = opts.n ? opts.n : 8;
    std::mt19937_64 rng(opts.seed);
    GeneratorOptions gen;
    gen.require_min_degree_two = true;
    gen.max_edges = 15;
    CampaignRun run("T4.2", "random interval and circle-covering circular-arc graphs with minimum "
                            "degree 2 (" + std::to_string(2 * per_side) + " instances)");
    auto check = [&](const Graph& g, auto&& construct) {
        run.instance(g, [&]() -> std::optional<std::string> {
            auto r = pc_exact(g, opts.budget);
            if (is_complete(g)) {
                if (r.value != 1) return std::string("complete graph not colored with 1 color");
                return std::nullopt;
            }
            if (r.value > 3) return "needs " + std::to_string(r.value) + " colors, above 3";
            ConstructionOutcome out = construct();
            if (!out.verified || out.colors_used > 3)
                return std::string("construction exceeded 3 colors");
            return std::nullopt;
        });
    };
    for (int i = 0; i < per_side; ++i) {
        auto inst = random_interval_instance(pick(rng, 4, cap), rng, gen);
        check(inst.graph, [&] { return color_interval(inst.graph, inst.rep, opts.budget); });
    }
    for (int i = 0; i < per_side; ++i) {
        auto inst = random_arc_instance(pick(rng, 4, cap), rng, gen, true);
        check(inst.graph, [&] { return color_circular_arc(inst.graph, inst.rep, opts.budget); });
    }
    return run.finish();
}

}  // namespace detail

inline CampaignReport run_campaign(const std::string& theorem, const CampaignOptions& opts = {}) {
    using Runner = std::function<CampaignReport(const CampaignOptions&)>;
    static const std::map<std::string, Runner> registry = {
        {"L2.1", detail::campaign_paths_need_two},
        {"L2.2", detail::campaign_spanning_monotonicity},
        {"L2.3", detail::campaign_traceable_two},
        {"P1", detail::campaign_trees_need_max_degree},
        {"T3.1",
         [](const CampaignOptions& o) {
             return detail::campaign_dominating_bound("T3.1", DominationKind::two_way_two_step, o);
         }},
        {"C3.1", detail::campaign_diameter_two},
        {"C3.2", detail::campaign_chain_two},
        {"L2.4", detail::campaign_small_set_exists},
        {"C3.3", detail::campaign_degree_bound},
        {"T4.1",
         [](const CampaignOptions& o) {
             return detail::campaign_dominating_bound("T4.1", DominationKind::two_way, o);
         }},
        {"C4.2i", detail::campaign_interval_four},
        {"C4.2ii", detail::campaign_at_free_four},
        {"C4.2iii", detail::campaign_circular_arc_four},
        {"C4.2iv", detail::campaign_threshold_two},
        {"T4.2", detail::campaign_geometric_three},
    };
    auto it = registry.find(theorem);
    if (it == registry.end()) {
        std::string known;
        for (const auto& id : campaign_ids()) known += (known.empty() ? "" : ", ") + id;
        throw argument_error("unknown claim id '" + theorem + "'; known ids: " + known);
    }
    return it->second(opts);
}

inline nlohmann::json report_to_json(const CampaignReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"graph6", v.graph6}, {"detail", v.detail}});
    return nlohmann::json{
        {"theorem", r.theorem},
        {"corpus", r.corpus},
        {"instances", r.instances},
        {"pass", r.pass},
        {"violations", std::move(violations)},
        {"timing",
         {{"wall_ms", r.wall_ms},
          {"mean_instance_ms", r.mean_instance_ms},
          {"max_instance_ms", r.max_instance_ms},
          {"max_instance_graph6", r.max_instance_graph6}}},
    };
}

}  // namespace propc
