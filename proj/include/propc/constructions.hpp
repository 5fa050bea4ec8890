#pragma once
// Constructive colorings behind the domination-based bounds. Each operation
// attempts its closed-form scheme, machine-verifies the result, and falls
// back to bounded exact search, which the underlying bound guarantees will
// succeed; outcomes record which route produced the coloring.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "propc/classes.hpp"
#include "propc/coloring.hpp"
#include "propc/detail/chain.hpp"
#include "propc/detail/split.hpp"
#include "propc/domination.hpp"
#include "propc/exact.hpp"
#include "propc/graph.hpp"

namespace propc {

enum class ConstructionMethod { direct, fallback_search };

struct ConstructionOutcome {
    EdgeColoring coloring;
    int colors_used;
    int guarantee;
    ConstructionMethod method;
    bool verified;
};

namespace detail {

// promote a partial coloring (0 = unset): fill with 1, enforce the cap,
// and keep it only if it properly connects the graph
inline std::optional<EdgeColoring> finish_if_proper(const Graph& g, std::vector<int> colors,
                                                    int cap) {
    for (int& c : colors) {
        if (c == 0) c = 1;
        if (c > cap) return std::nullopt;
    }
    if (!proper_connected_fast(g, colors.data())) return std::nullopt;
    return EdgeColoring(g, std::move(colors));
}

inline std::optional<EdgeColoring> closed_form_two_coloring(const Graph& g) {
    if (auto shape = chain_shape(g)) {
        auto cols = chain_parity_coloring(g, *shape);
        if (proper_connected_fast(g, cols.data())) return EdgeColoring(g, std::move(cols));
    }
    if (auto shape = split_shape(g)) {
        auto cols = split_two_coloring(g, *shape);
        if (proper_connected_fast(g, cols.data())) return EdgeColoring(g, std::move(cols));
    }
    return std::nullopt;
}

inline ConstructionOutcome make_outcome(EdgeColoring coloring, int guarantee,
                                        ConstructionMethod method) {
    int used = coloring.color_count();
    return {std::move(coloring), used, guarantee, method, true};
}

inline ConstructionOutcome guaranteed_fallback(const Graph& g, int guarantee,
                                               const SearchBudget& budget) {
    auto found = pc_decision(g, guarantee, budget);
    if (!found) throw std::logic_error("bounded search failed below a guaranteed color budget");
    return make_outcome(std::move(*found), guarantee, ConstructionMethod::fallback_search);
}

// optimal coloring of G[D] shifted onto palette {3, ..., k+2}; returns k
inline int apply_shifted_base(const Graph& g, const VertexSet& d, std::vector<int>& colors,
                              const SearchBudget& budget) {
    if (d.count() < 2) return 0;
    auto sub = induced_subgraph(g, d);
    auto base = pc_exact(sub.graph, budget);
    const auto& sub_edges = sub.graph.edges();
    for (std::size_t e = 0; e < sub_edges.size(); ++e) {
        int hu = sub.to_host[static_cast<std::size_t>(sub_edges[e].first)];
        int hv = sub.to_host[static_cast<std::size_t>(sub_edges[e].second)];
        colors[static_cast<std::size_t>(g.edge_index(hu, hv))] =
            base.certificate.color_of_edge(static_cast<int>(e)) + 2;
    }
    return base.value;
}

}  // namespace detail

// escape-pair coloring driven by a connected two-way two-step dominating set
inline ConstructionOutcome color_from_two_step_dominating(const Graph& g,
                                                          const DominationCertificate& d,
                                                          const SearchBudget& budget = {}) {
    if (!is_connected(g)) throw disconnected_error("coloring needs a connected graph");
    auto cert = classify_dominating_set(g, d.d);
    if (!cert.is_two_way_two_step || !cert.induced_connected)
        throw argument_error("set is not connected two-way two-step dominating here");

    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 0);
    int k = detail::apply_shifted_base(g, cert.d, colors, budget);
    int guarantee = k + 2;

    auto dist = bfs_distances(g, cert.d);
    auto level = [&](int v) { return dist[static_cast<std::size_t>(v)]; };
    auto slot = [&](int u, int v) -> int& {
        return colors[static_cast<std::size_t>(g.edge_index(u, v))];
    };
    auto first_foot = [&](int u) {
        for (int f : g.neighbors(u))
            if (level(f) == 0) return f;
        return -1;
    };

    for (int x = 0; x < g.vertex_count(); ++x) {
        if (level(x) != 2) continue;
        std::vector<std::pair<int, int>> escapes;  // (gate in N^1, its foot)
        for (int u : g.neighbors(x))
            if (level(u) == 1) escapes.emplace_back(u, first_foot(u));
        auto feasible = [&](int a, int b, int p) {
            const std::array<std::pair<std::pair<int, int>, int>, 4> demands{
                {{{x, escapes[a].first}, p},
                 {{escapes[a].first, escapes[a].second}, 3 - p},
                 {{x, escapes[b].first}, 3 - p},
                 {{escapes[b].first, escapes[b].second}, p}}};
            for (const auto& [edge, want] : demands) {
                int have = slot(edge.first, edge.second);
                if (have != 0 && have != want) return false;
            }
            return true;
        };
        auto apply = [&](int a, int b, int p) {
            slot(x, escapes[a].first) = p;
            if (slot(escapes[a].first, escapes[a].second) == 0)
                slot(escapes[a].first, escapes[a].second) = 3 - p;
            slot(x, escapes[b].first) = 3 - p;
            if (slot(escapes[b].first, escapes[b].second) == 0)
                slot(escapes[b].first, escapes[b].second) = p;
        };
        bool placed = false;
        for (int distinct_feet = 1; distinct_feet >= 0 && !placed; --distinct_feet)
            for (std::size_t a = 0; a < escapes.size() && !placed; ++a)
                for (std::size_t b = 0; b < escapes.size() && !placed; ++b) {
                    if (a == b) continue;
                    if (distinct_feet && escapes[a].second == escapes[b].second) continue;
                    for (int p : {1, 2})
                        if (feasible(static_cast<int>(a), static_cast<int>(b), p)) {
                            apply(static_cast<int>(a), static_cast<int>(b), p);
                            placed = true;
                            break;
                        }
                }
        if (!placed && escapes.size() >= 2) {
            if (slot(x, escapes[0].first) == 0) slot(x, escapes[0].first) = 1;
            if (slot(x, escapes[1].first) == 0) slot(x, escapes[1].first) = 2;
        }
    }

    for (int u = 0; u < g.vertex_count(); ++u) {
        if (level(u) != 1) continue;
        int anchor_color = 0;
        int anchor_foot = -1;
        for (int f : g.neighbors(u)) {
            if (level(f) != 0) continue;
            if (anchor_foot < 0) anchor_foot = f;
            if (slot(u, f) != 0) {
                anchor_color = slot(u, f);
                anchor_foot = f;
                break;
            }
        }
        if (anchor_color == 0) {
            anchor_color = 1;
            slot(u, anchor_foot) = 1;
        }
        bool gave_second = false;
        for (int f : g.neighbors(u)) {
            if (level(f) != 0 || f == anchor_foot || slot(u, f) != 0) continue;
            slot(u, f) = 3 - anchor_color;
            gave_second = true;
            break;
        }
        if (!gave_second)
            for (int w : g.neighbors(u)) {
                if (level(w) != 1 || slot(u, w) != 0) continue;
                slot(u, w) = 3 - anchor_color;
                break;
            }
    }

    if (auto done = detail::finish_if_proper(g, colors, guarantee))
        return detail::make_outcome(std::move(*done), guarantee, ConstructionMethod::direct);
    if (auto two = detail::closed_form_two_coloring(g))
        return detail::make_outcome(std::move(*two), guarantee, ConstructionMethod::direct);
    return detail::guaranteed_fallback(g, guarantee, budget);
}

// foot-edge coloring driven by a connected two-way dominating set
inline ConstructionOutcome color_from_dominating(const Graph& g, const DominationCertificate& d,
                                                 const SearchBudget& budget = {}) {
    if (!is_connected(g)) throw disconnected_error("coloring needs a connected graph");
    auto cert = classify_dominating_set(g, d.d);
    if (!cert.is_two_way || !cert.induced_connected)
        throw argument_error("set is not connected two-way dominating here");

    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 0);
    int k = detail::apply_shifted_base(g, cert.d, colors, budget);
    int guarantee = k + 2;

    if (is_complete(g)) {
        std::vector<int> ones(static_cast<std::size_t>(g.edge_count()), 1);
        return detail::make_outcome(EdgeColoring(g, std::move(ones)), guarantee,
                                    ConstructionMethod::direct);
    }

    auto slot = [&](int u, int v) -> int& {
        return colors[static_cast<std::size_t>(g.edge_index(u, v))];
    };
    std::map<int, std::vector<int>> lone;  // foot -> its single-foot outsiders
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (cert.d.contains(x)) continue;
        std::vector<int> feet;
        for (int f : g.neighbors(x))
            if (cert.d.contains(f)) feet.push_back(f);
        if (feet.size() >= 2) {
            for (int i = 0; i < 2; ++i)
                if (slot(x, feet[static_cast<std::size_t>(i)]) == 0)
                    slot(x, feet[static_cast<std::size_t>(i)]) = 1;
        } else
            lone[feet.front()].push_back(x);
    }
    for (auto& [foot, members] : lone) {
        int turn = 1;
        for (int x : members) {
            if (slot(x, foot) == 0) slot(x, foot) = turn;
            int sigma = slot(x, foot);
            for (int w : g.neighbors(x))
                if (!cert.d.contains(w) && slot(x, w) == 0) {
                    slot(x, w) = 3 - sigma;
                    break;
                }
            turn = 3 - turn;
        }
    }

    if (auto done = detail::finish_if_proper(g, colors, guarantee))
        return detail::make_outcome(std::move(*done), guarantee, ConstructionMethod::direct);
    if (auto two = detail::closed_form_two_coloring(g))
        return detail::make_outcome(std::move(*two), guarantee, ConstructionMethod::direct);
    return detail::guaranteed_fallback(g, guarantee, budget);
}

// proper edge coloring of a tree with exactly max-degree colors
inline ConstructionOutcome color_tree(const Graph& t, const SearchBudget& budget = {}) {
    if (t.vertex_count() < 2) throw argument_error("trees need at least two vertices here");
    if (!is_tree(t)) throw argument_error("input is not a tree");
    int delta = max_degree(t);
    auto cols = detail::color_tree_edges(t);
    if (auto done = detail::finish_if_proper(t, std::move(cols), delta))
        return detail::make_outcome(std::move(*done), delta, ConstructionMethod::direct);
    return detail::guaranteed_fallback(t, delta, budget);
}

// alternate two colors along a spanning path, everything else color 1
inline ConstructionOutcome color_traceable(const Graph& g, const std::vector<int>& ham_path,
                                           const SearchBudget& budget = {}) {
    int n = g.vertex_count();
    if (static_cast<int>(ham_path.size()) != n)
        throw argument_error("path must visit every vertex exactly once");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : ham_path) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw argument_error("path must visit every vertex exactly once");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i + 1 < ham_path.size(); ++i)
        if (!g.has_edge(ham_path[i], ham_path[i + 1]))
            throw argument_error("consecutive path vertices must be adjacent");
    if (is_complete(g)) throw argument_error("complete graphs need only one color");

    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i + 1 < ham_path.size(); ++i)
        colors[static_cast<std::size_t>(g.edge_index(ham_path[i], ham_path[i + 1]))] =
            static_cast<int>(i) % 2 + 1;
    if (auto done = detail::finish_if_proper(g, std::move(colors), 2))
        return detail::make_outcome(std::move(*done), 2, ConstructionMethod::direct);
    return detail::guaranteed_fallback(g, 2, budget);
}

namespace detail {

// partition the unclaimed off-spine neighbors of each spine vertex into
// greedy cliques; the least member of each clique sends color 3 to the root
inline void color_rooted_cliques(const Graph& g, const std::vector<int>& spine,
                                 std::vector<int>& colors) {
    std::vector<char> on_spine(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : spine) on_spine[static_cast<std::size_t>(v)] = 1;
    std::vector<char> claimed = on_spine;
    for (int v : spine) {
        std::vector<int> pool;
        for (int u : g.neighbors(v))
            if (!claimed[static_cast<std::size_t>(u)]) pool.push_back(u);
        std::sort(pool.begin(), pool.end());
        while (!pool.empty()) {
            std::vector<int> clique{pool.front()};
            for (int w : pool) {
                if (w == clique.front()) continue;
                bool fits = true;
                for (int q : clique)
                    if (!g.has_edge(q, w)) {
                        fits = false;
                        break;
                    }
                if (fits) clique.push_back(w);
            }
            colors[static_cast<std::size_t>(g.edge_index(clique.front(), v))] = 3;
            for (int w : clique) {
                claimed[static_cast<std::size_t>(w)] = 1;
                pool.erase(std::remove(pool.begin(), pool.end(), w), pool.end());
            }
        }
    }
}

inline void require_realizes(const Graph& g, const Graph& realized) {
    if (realized.vertex_count() != g.vertex_count() || realized.edges() != g.edges())
        throw argument_error("representation does not realize the graph");
}

}  // namespace detail

// dominating path alternation plus one color-3 edge per off-path clique
inline ConstructionOutcome color_interval(const Graph& g, const IntervalRepresentation& rep,
                                          const SearchBudget& budget = {}) {
    detail::require_realizes(g, realize(rep));
    if (!is_connected(g)) throw disconnected_error("coloring needs a connected graph");
    if (is_complete(g)) throw argument_error("complete graphs need only one color");
    if (min_degree(g) < 2) throw argument_error("needs minimum degree two");

    auto path = dominating_path_interval(rep);
    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        colors[static_cast<std::size_t>(g.edge_index(path[i], path[i + 1]))] =
            static_cast<int>(i) % 2 + 1;
    detail::color_rooted_cliques(g, path, colors);

    if (auto done = detail::finish_if_proper(g, std::move(colors), 3))
        return detail::make_outcome(std::move(*done), 3, ConstructionMethod::direct);
    if (auto two = detail::closed_form_two_coloring(g))
        return detail::make_outcome(std::move(*two), 3, ConstructionMethod::direct);
    return detail::guaranteed_fallback(g, 3, budget);
}

// dominating cycle alternation (odd cycles spend color 3 on one clash edge)
// plus one color-3 edge per off-cycle clique
inline ConstructionOutcome color_circular_arc(const Graph& g, const ArcRepresentation& rep,
                                              const SearchBudget& budget = {}) {
    detail::require_realizes(g, realize(rep));
    if (!is_connected(g)) throw disconnected_error("coloring needs a connected graph");
    if (is_complete(g)) throw argument_error("complete graphs need only one color");
    if (min_degree(g) < 2) throw argument_error("needs minimum degree two");

    auto cycle = dominating_cycle_circular_arc(rep);
    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 0);
    std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i)
        colors[static_cast<std::size_t>(
            g.edge_index(cycle[i], cycle[(i + 1) % len]))] = static_cast<int>(i) % 2 + 1;
    if (len % 2 == 1) {
        // both clash-incident edges meet at the cycle's start; recolor the
        // lexicographically smaller of the two
        auto norm = [](int a, int b) { return std::pair(std::min(a, b), std::max(a, b)); };
        auto e0 = norm(cycle[0], cycle[1]);
        auto e1 = norm(cycle[len - 1], cycle[0]);
        auto pick = std::min(e0, e1);
        colors[static_cast<std::size_t>(g.edge_index(pick.first, pick.second))] = 3;
    }
    detail::color_rooted_cliques(g, cycle, colors);

    if (auto done = detail::finish_if_proper(g, std::move(colors), 3))
        return detail::make_outcome(std::move(*done), 3, ConstructionMethod::direct);
    if (auto two = detail::closed_form_two_coloring(g))
        return detail::make_outcome(std::move(*two), 3, ConstructionMethod::direct);
    return detail::guaranteed_fallback(g, 3, budget);
}

}  // namespace propc
