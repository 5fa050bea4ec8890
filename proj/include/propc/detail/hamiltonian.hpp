#pragma once
// Budgeted hamiltonian path search used as a certificate seed.

#include <optional>
#include <vector>

#include "propc/graph.hpp"

namespace propc::detail {

struct HamiltonianSearch {
    std::optional<std::vector<int>> path;
    bool exhausted;  // search completed; false means the node cap stopped it
};

inline bool ham_rec(const Graph& g, std::vector<int>& path, unsigned visited,
                    long long& nodes, long long cap) {
    if (static_cast<int>(path.size()) == g.vertex_count()) return true;
    if (++nodes > cap) return false;
    for (int w : g.neighbors(path.back())) {
        if (visited & (1u << w)) continue;
        path.push_back(w);
        if (ham_rec(g, path, visited | (1u << w), nodes, cap)) return true;
        path.pop_back();
        if (nodes > cap) return false;
    }
    return false;
}

inline HamiltonianSearch hamiltonian_path(const Graph& g, long long node_cap) {
    int n = g.vertex_count();
    if (n > 31) return {std::nullopt, false};
    if (n == 1) return {std::vector<int>{0}, true};
    // low-degree vertices make the most constrained endpoints, so start there
    std::vector<int> starts(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) starts[static_cast<std::size_t>(v)] = v;
    std::sort(starts.begin(), starts.end(), [&](int a, int b) {
        return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
    });
    long long nodes = 0;
    for (int s : starts) {
        std::vector<int> path{s};
        if (ham_rec(g, path, 1u << s, nodes, node_cap)) return {std::move(path), true};
        if (nodes > node_cap) return {std::nullopt, false};
    }
    return {std::nullopt, true};
}

}  // namespace propc::detail
