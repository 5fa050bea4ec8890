#pragma once
// Independent reference implementations used to pin expected values in tests.
// Everything here is written straight from the definitions, favors obvious
// code over speed, and deliberately avoids the library's algorithmic
// machinery (state-space searches, canonical enumeration, greedy methods).

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include <propc/graph.hpp>

namespace oracle {

// ---- proper paths, by enumerating every simple path --------------------------

inline bool color_sequence_proper(const std::vector<int>& cols) {
    for (std::size_t i = 0; i + 1 < cols.size(); ++i)
        if (cols[i] == cols[i + 1]) return false;
    return true;
}

inline bool path_is_proper(const propc::Graph& g, const std::vector<int>& edge_colors,
                           const std::vector<int>& path) {
    std::vector<int> cols;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        cols.push_back(edge_colors[static_cast<std::size_t>(g.edge_index(path[i], path[i + 1]))]);
    return color_sequence_proper(cols);
}

inline void all_simple_paths_rec(const propc::Graph& g, int target, std::vector<int>& path,
                                 std::vector<char>& used, std::vector<std::vector<int>>& out) {
    int v = path.back();
    if (v == target) {
        out.push_back(path);
        return;
    }
    for (int w : g.neighbors(v)) {
        if (used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        all_simple_paths_rec(g, target, path, used, out);
        path.pop_back();
        used[static_cast<std::size_t>(w)] = 0;
    }
}

inline std::vector<std::vector<int>> all_simple_paths(const propc::Graph& g, int u, int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> path{u};
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    used[static_cast<std::size_t>(u)] = 1;
    all_simple_paths_rec(g, v, path, used, out);
    return out;
}

inline bool proper_path_exists(const propc::Graph& g, const std::vector<int>& edge_colors,
                               int u, int v) {
    for (const auto& p : all_simple_paths(g, u, v))
        if (path_is_proper(g, edge_colors, p)) return true;
    return false;
}

inline bool is_proper_connected(const propc::Graph& g, const std::vector<int>& edge_colors) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!proper_path_exists(g, edge_colors, u, v)) return false;
    return true;
}

// ---- proper connection number, by unrestricted k^m enumeration ---------------

inline std::optional<std::vector<int>> brute_pc_decision(const propc::Graph& g, int k) {
    int m = g.edge_count();
    std::vector<int> cols(static_cast<std::size_t>(m), 1);
    while (true) {
        if (is_proper_connected(g, cols)) return cols;
        int i = 0;
        while (i < m && cols[static_cast<std::size_t>(i)] == k) {
            cols[static_cast<std::size_t>(i)] = 1;
            ++i;
        }
        if (i == m) return std::nullopt;
        ++cols[static_cast<std::size_t>(i)];
    }
}

inline int brute_pc(const propc::Graph& g) {
    for (int k = 1;; ++k)
        if (brute_pc_decision(g, k)) return k;
}

// ---- domination predicates, straight from the definitions --------------------

inline std::vector<int> plain_bfs_from_set(const propc::Graph& g, const std::vector<char>& in) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> q;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in[static_cast<std::size_t>(v)]) {
            dist[static_cast<std::size_t>(v)] = 0;
            q.push_back(v);
        }
    for (std::size_t h = 0; h < q.size(); ++h)
        for (int w : g.neighbors(q[h]))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(q[h])] + 1;
                q.push_back(w);
            }
    return dist;
}

inline bool set_dominates(const propc::Graph& g, const std::vector<char>& in) {
    auto d = plain_bfs_from_set(g, in);
    for (int x : d)
        if (x < 0 || x > 1) return false;
    return true;
}

inline bool set_two_step_dominates(const propc::Graph& g, const std::vector<char>& in) {
    auto d = plain_bfs_from_set(g, in);
    for (int x : d)
        if (x < 0 || x > 2) return false;
    return true;
}

inline bool set_contains_all_pendants(const propc::Graph& g, const std::vector<char>& in) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1 && !in[static_cast<std::size_t>(v)]) return false;
    return true;
}

inline bool set_is_two_way_dominating(const propc::Graph& g, const std::vector<char>& in) {
    return set_dominates(g, in) && set_contains_all_pendants(g, in);
}

// two-step dominating, contains all pendants, and every vertex at distance
// exactly 2 has at least two neighbors at distance exactly 1
inline bool set_is_two_way_two_step_dominating(const propc::Graph& g,
                                               const std::vector<char>& in) {
    if (!set_two_step_dominates(g, in)) return false;
    if (!set_contains_all_pendants(g, in)) return false;
    auto d = plain_bfs_from_set(g, in);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (d[static_cast<std::size_t>(v)] != 2) continue;
        int close = 0;
        for (int w : g.neighbors(v))
            if (d[static_cast<std::size_t>(w)] == 1) ++close;
        if (close < 2) return false;
    }
    return true;
}

inline bool set_induces_connected(const propc::Graph& g, const std::vector<char>& in) {
    int start = -1, total = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in[static_cast<std::size_t>(v)]) {
            if (start < 0) start = v;
            ++total;
        }
    if (total == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> q{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    for (std::size_t h = 0; h < q.size(); ++h)
        for (int w : g.neighbors(q[h]))
            if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push_back(w);
            }
    return reached == total;
}

// minimum size over all subsets satisfying pred, or -1 when none does
template <class Pred>
inline int brute_min_subset(const propc::Graph& g, Pred pred) {
    int n = g.vertex_count();
    int best = -1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        int size = 0;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) {
                in[static_cast<std::size_t>(v)] = 1;
                ++size;
            }
        if (best >= 0 && size >= best) continue;
        if (pred(g, in)) best = size;
    }
    return best;
}

inline int brute_min_connected_two_way_dominating(const propc::Graph& g) {
    return brute_min_subset(g, [](const propc::Graph& h, const std::vector<char>& in) {
        return set_is_two_way_dominating(h, in) && set_induces_connected(h, in);
    });
}

inline int brute_min_connected_two_way_two_step_dominating(const propc::Graph& g) {
    return brute_min_subset(g, [](const propc::Graph& h, const std::vector<char>& in) {
        return set_is_two_way_two_step_dominating(h, in) && set_induces_connected(h, in);
    });
}

// ---- labeled graph enumeration ------------------------------------------------

inline bool mask_graph_connected(int n, unsigned long long mask) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1ULL << bit)) {
                adj[static_cast<std::size_t>(u)].push_back(v);
                adj[static_cast<std::size_t>(v)].push_back(u);
            }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> q{0};
    seen[0] = 1;
    int reached = 1;
    for (std::size_t h = 0; h < q.size(); ++h)
        for (int w : adj[static_cast<std::size_t>(q[h])])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push_back(w);
            }
    return reached == n;
}

inline long long count_connected_labeled_graphs(int n) {
    int bits = n * (n - 1) / 2;
    long long count = 0;
    for (unsigned long long mask = 0; mask < (1ULL << bits); ++mask)
        if (mask_graph_connected(n, mask)) ++count;
    return count;
}

// ---- random test instances -----------------------------------------------------

inline propc::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return propc::Graph(n, std::move(e));
}

inline propc::Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    while (true) {
        auto g = random_graph(n, p, rng);
        if (propc::is_connected(g)) return g;
    }
}

// uniformly random coloring with colors 1..k
inline std::vector<int> random_coloring(int edge_count, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(1, k);
    std::vector<int> cols(static_cast<std::size_t>(edge_count));
    for (auto& c : cols) c = pick(rng);
    return cols;
}

}  // namespace oracle
