#pragma once
// Exact proper connection number: decision procedure and minimum search.
//
// pc_decision answers "does g admit a properly connecting coloring with at
// most k colors" in three honest ways: a verified certificate coloring, a
// definite no backed by exhaustive search over colorings canonical up to
// color relabeling, or budget_error when the configured caps stop the
// search before either.  Certificates may come from cheap verified seeds
// (complete graphs, low-degree spanning trees, hamiltonian paths); refusals
// only ever come from the exhausted canonical search.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "propc/coloring.hpp"
#include "propc/detail/chain.hpp"
#include "propc/detail/greedy_color.hpp"
#include "propc/detail/hamiltonian.hpp"
#include "propc/detail/split.hpp"
#include "propc/graph.hpp"

namespace propc {

struct SearchBudget {
    long long max_nodes = 100'000'000;
    int hamiltonian_vertex_cap = 14;
    long long hamiltonian_node_cap = 2'000'000;
    int subset_vertex_cap = 16;       // exact minimum dominating-set searches
    int enumeration_vertex_cap = 6;   // all-connected-graphs sweeps
    bool use_seed_certificates = true;
    bool use_tree_lower_bound = true;

    // widest graph the canonical coloring search will attempt per palette size
    static int max_edges_for_width(int k) {
        if (k <= 3) return 18;
        if (k == 4) return 15;
        if (k == 5) return 13;
        return 12;
    }
};

struct SpanningTreeBound {
    Graph tree;
    int bound;  // max degree of the tree; an upper bound for pc of the host
};

// DFS spanning tree improved by degree-reducing edge swaps
inline SpanningTreeBound spanning_tree_upper_bound(const Graph& g) {
    if (g.vertex_count() < 2) throw argument_error("need at least two vertices");
    if (!is_connected(g)) throw disconnected_error("spanning tree needs a connected graph");
    int n = g.vertex_count();

    std::vector<std::pair<int, int>> tree_edges;
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                tree_edges.emplace_back(v, w);
                stack.push_back(w);
            }
        }
    }

    auto degrees = [&](const std::vector<std::pair<int, int>>& es) {
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        for (auto [a, b] : es) {
            ++d[static_cast<std::size_t>(a)];
            ++d[static_cast<std::size_t>(b)];
        }
        return d;
    };

    for (int round = 0; round < 50 * n; ++round) {
        auto deg = degrees(tree_edges);
        int hub = static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());
        if (deg[static_cast<std::size_t>(hub)] <= 2) break;

        bool swapped = false;
        for (std::size_t i = 0; i < tree_edges.size() && !swapped; ++i) {
            auto [a, b] = tree_edges[i];
            if (a != hub && b != hub) continue;
            // component of the tree containing `b-side` after dropping edge i
            std::vector<char> side(static_cast<std::size_t>(n), 0);
            int other = (a == hub) ? b : a;
            side[static_cast<std::size_t>(other)] = 1;
            std::vector<int> stack{other};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (std::size_t j = 0; j < tree_edges.size(); ++j) {
                    if (j == i) continue;
                    auto [x, y] = tree_edges[j];
                    int nb = -1;
                    if (x == v) nb = y;
                    else if (y == v) nb = x;
                    if (nb >= 0 && !side[static_cast<std::size_t>(nb)]) {
                        side[static_cast<std::size_t>(nb)] = 1;
                        stack.push_back(nb);
                    }
                }
            }
            for (auto [x, y] : g.edges()) {
                if (side[static_cast<std::size_t>(x)] == side[static_cast<std::size_t>(y)]) continue;
                if ((x == a && y == b) || (x == b && y == a)) continue;
                if (x == hub || y == hub) continue;
                if (std::max(deg[static_cast<std::size_t>(x)], deg[static_cast<std::size_t>(y)]) + 1
                    >= deg[static_cast<std::size_t>(hub)]) continue;
                tree_edges[i] = {x, y};
                swapped = true;
                break;
            }
        }
        if (!swapped) break;
    }

    Graph tree(n, tree_edges);
    auto deg = degrees(tree_edges);
    return {std::move(tree), *std::max_element(deg.begin(), deg.end())};
}

namespace detail {

inline std::optional<EdgeColoring> verified(const Graph& g, std::vector<int> colors, int k) {
    int used = *std::max_element(colors.begin(), colors.end());
    if (used > k) return std::nullopt;
    if (!proper_connected_fast(g, colors.data())) return std::nullopt;
    return EdgeColoring(g, std::move(colors));
}

inline std::optional<EdgeColoring> seed_certificate(const Graph& g, int k,
                                                    const SearchBudget& budget) {
    int m = g.edge_count();
    if (is_complete(g))
        return verified(g, std::vector<int>(static_cast<std::size_t>(m), 1), k);

    auto st = spanning_tree_upper_bound(g);
    if (st.bound <= k) {
        auto tree_cols = color_tree_edges(st.tree);
        std::vector<int> colors(static_cast<std::size_t>(m), 1);
        for (int e = 0; e < st.tree.edge_count(); ++e) {
            auto [a, b] = st.tree.edges()[static_cast<std::size_t>(e)];
            colors[static_cast<std::size_t>(g.edge_index(a, b))] =
                tree_cols[static_cast<std::size_t>(e)];
        }
        if (auto c = verified(g, std::move(colors), k)) return c;
    }

    if (k >= 2 && g.vertex_count() <= budget.hamiltonian_vertex_cap) {
        auto ham = hamiltonian_path(g, budget.hamiltonian_node_cap);
        if (ham.path) {
            std::vector<int> colors(static_cast<std::size_t>(m), 1);
            for (std::size_t i = 0; i + 1 < ham.path->size(); ++i) {
                int e = g.edge_index((*ham.path)[i], (*ham.path)[i + 1]);
                colors[static_cast<std::size_t>(e)] = 1 + static_cast<int>(i % 2);
            }
            if (auto c = verified(g, std::move(colors), k)) return c;
        }
    }

    if (k >= 2) {
        if (auto shape = chain_shape(g))
            if (auto c = verified(g, chain_parity_coloring(g, *shape), k)) return c;
        if (auto shape = split_shape(g))
            if (auto c = verified(g, split_two_coloring(g, *shape), k)) return c;
    }
    return std::nullopt;
}

struct CanonicalColoringSearch {
    const Graph& g;
    int k;
    long long max_nodes;
    long long nodes = 0;
    std::vector<int> colors;

    CanonicalColoringSearch(const Graph& graph, int width, long long cap)
        : g(graph), k(width), max_nodes(cap),
          colors(static_cast<std::size_t>(graph.edge_count()), 0) {}

    bool run(int i, int max_used) {
        if (i == g.edge_count()) return proper_connected_fast(g, colors.data());
        int top = std::min(k, max_used + 1);
        for (int c = 1; c <= top; ++c) {
            if (++nodes > max_nodes)
                throw budget_error("coloring search exceeded its node budget", nodes);
            colors[static_cast<std::size_t>(i)] = c;
            if (partial_coloring_feasible(g, colors.data()) &&
                run(i + 1, std::max(max_used, c)))
                return true;
        }
        colors[static_cast<std::size_t>(i)] = 0;
        return false;
    }
};

}  // namespace detail

// certificate with at most k colors, or definite exhaustive no (nullopt),
// or budget_error
inline std::optional<EdgeColoring> pc_decision(const Graph& g, int k,
                                               const SearchBudget& budget = {}) {
    if (k < 1) throw argument_error("palette size must be at least 1");
    if (!is_connected(g)) throw disconnected_error("proper connection needs a connected graph");
    int m = g.edge_count();
    if (m == 0) return EdgeColoring(g, {});

    if (budget.use_seed_certificates)
        if (auto c = detail::seed_certificate(g, k, budget)) return c;

    if (k == 1) {
        // only one coloring exists, so decide it directly regardless of width
        std::vector<int> colors(static_cast<std::size_t>(m), 1);
        if (detail::proper_connected_fast(g, colors.data()))
            return EdgeColoring(g, std::move(colors));
        return std::nullopt;
    }

    if (m > SearchBudget::max_edges_for_width(k))
        throw budget_error("graph too wide for an exhaustive coloring search at this palette size", 0);

    detail::CanonicalColoringSearch search(g, k, budget.max_nodes);
    if (search.run(0, 0)) return EdgeColoring(g, std::move(search.colors));
    return std::nullopt;
}

struct PcResult {
    int value;
    EdgeColoring certificate;
    // true when every palette below `value` was refuted exhaustively; false
    // when `value` came from the tree lower-bound shortcut instead
    bool exhausted_below;
};

inline PcResult pc_exact(const Graph& g, const SearchBudget& budget = {}) {
    if (g.vertex_count() < 2)
        throw argument_error("proper connection number needs at least two vertices");
    if (!is_connected(g)) throw disconnected_error("proper connection needs a connected graph");

    // one color suffices exactly for complete graphs, so the ascent for
    // everything else starts at two
    if (is_complete(g)) return {1, std::move(*pc_decision(g, 1, budget)), true};

    if (budget.use_tree_lower_bound && is_tree(g)) {
        int delta = max_degree(g);
        if (delta >= 3)
            if (auto c = pc_decision(g, delta, budget)) return {delta, std::move(*c), false};
    }

    for (int k = 2; k <= g.edge_count(); ++k)
        if (auto c = pc_decision(g, k, budget)) return {k, std::move(*c), true};
    throw budget_error("no coloring found up to one color per edge", 0);
}

}  // namespace propc
