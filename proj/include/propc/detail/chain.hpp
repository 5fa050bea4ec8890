#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "../graph.hpp"

namespace propc::detail {

// Nested-neighborhood bipartite structure. a_order lists one side with
// N(a_1) ⊆ N(a_2) ⊆ ..., b_order lists the other side by descending degree,
// so a b vertex's rank equals its column in the prefix picture.
struct ChainShape {
    std::vector<int> a_order;
    std::vector<int> b_order;
};

inline std::optional<std::vector<int>> bipartition_sides(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        stack.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::vector<int>(side);
}

inline bool neighborhoods_nested(const Graph& g, const std::vector<int>& order) {
    for (std::size_t i = 1; i < order.size(); ++i) {
        const auto& small = g.neighbors(order[i - 1]);
        const auto& big = g.neighbors(order[i]);
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) return false;
    }
    return true;
}

inline std::optional<ChainShape> chain_shape(const Graph& g) {
    auto side = bipartition_sides(g);
    if (!side) return std::nullopt;
    for (int nested_side = 0; nested_side < 2; ++nested_side) {
        ChainShape shape;
        for (int v = 0; v < g.vertex_count(); ++v)
            ((*side)[v] == nested_side ? shape.a_order : shape.b_order).push_back(v);
        if (shape.a_order.empty() || shape.b_order.empty()) continue;
        std::sort(shape.a_order.begin(), shape.a_order.end(), [&g](int u, int v) {
            if (g.degree(u) != g.degree(v)) return g.degree(u) < g.degree(v);
            return u < v;
        });
        std::sort(shape.b_order.begin(), shape.b_order.end(), [&g](int u, int v) {
            if (g.degree(u) != g.degree(v)) return g.degree(u) > g.degree(v);
            return u < v;
        });
        if (neighborhoods_nested(g, shape.a_order)) return shape;
    }
    return std::nullopt;
}

// Color edge (a_i, b_j) by the parity of i + j. Between any two vertices
// sharing two rows or two columns this yields both color patterns, which is
// what the proper routes through b_1/b_2 and the two fullest rows need.
inline std::vector<int> chain_parity_coloring(const Graph& g, const ChainShape& shape) {
    std::vector<int> rank(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < shape.a_order.size(); ++i)
        rank[shape.a_order[i]] = static_cast<int>(i) + 1;
    for (std::size_t j = 0; j < shape.b_order.size(); ++j)
        rank[shape.b_order[j]] = static_cast<int>(j) + 1;
    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 1);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        colors[static_cast<std::size_t>(e)] = (rank[u] + rank[v]) % 2 + 1;
    }
    return colors;
}

}  // namespace propc::detail
