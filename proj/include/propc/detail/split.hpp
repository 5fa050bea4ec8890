#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "../graph.hpp"

namespace propc::detail {

// Split structure with two clique vertices covering the independent side:
// clique Q, independent set I, and h1, h2 ∈ Q adjacent to every I vertex.
struct SplitShape {
    std::vector<int> clique;
    std::vector<int> independent;
    int h1 = -1;
    int h2 = -1;
};

inline std::optional<SplitShape> split_shape(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&g](int u, int v) {
        if (g.degree(u) != g.degree(v)) return g.degree(u) > g.degree(v);
        return u < v;
    });

    SplitShape shape;
    for (int v : order) {
        bool fits = true;
        for (int q : shape.clique)
            if (!g.has_edge(v, q)) {
                fits = false;
                break;
            }
        if (fits)
            shape.clique.push_back(v);
        else
            shape.independent.push_back(v);
    }
    for (std::size_t i = 0; i < shape.independent.size(); ++i)
        for (std::size_t j = i + 1; j < shape.independent.size(); ++j)
            if (g.has_edge(shape.independent[i], shape.independent[j])) return std::nullopt;

    for (int q : shape.clique) {
        bool covers = true;
        for (int x : shape.independent)
            if (!g.has_edge(q, x)) {
                covers = false;
                break;
            }
        if (!covers) continue;
        if (shape.h1 < 0)
            shape.h1 = q;
        else if (shape.h2 < 0) {
            shape.h2 = q;
            break;
        }
    }
    if (shape.independent.empty()) return std::nullopt;
    if (shape.h1 < 0 || shape.h2 < 0) return std::nullopt;
    std::sort(shape.independent.begin(), shape.independent.end());
    return shape;
}

// Two colors: I vertices alternate a parity p; edge x–h1 gets p, every other
// x–Q edge gets the opposite, clique edges get 1. Non-adjacent pairs route
// x–h1–y (opposite parity), x–h1–z–h2–y (same parity, z of the other
// parity), or x–h1/h2–q for clique targets.
inline std::vector<int> split_two_coloring(const Graph& g, const SplitShape& shape) {
    std::vector<int> parity(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < shape.independent.size(); ++i)
        parity[shape.independent[i]] = static_cast<int>(i) % 2 + 1;
    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 1);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        int x = parity[u] ? u : v;
        if (!parity[x]) continue;
        int q = x == u ? v : u;
        colors[static_cast<std::size_t>(e)] = q == shape.h1 ? parity[x] : 3 - parity[x];
    }
    return colors;
}

}  // namespace propc::detail
