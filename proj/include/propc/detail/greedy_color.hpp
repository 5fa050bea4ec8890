#pragma once
// Root-down tree coloring: every vertex assigns its child edges distinct
// colors avoiding the parent edge's color, so EVERY path in the tree is
// proper and exactly max-degree colors are used.

#include <vector>

#include "propc/graph.hpp"

namespace propc::detail {

inline std::vector<int> color_tree_edges(const Graph& tree, int root = 0) {
    std::vector<int> colors(static_cast<std::size_t>(tree.edge_count()), 0);
    std::vector<int> parent_color(static_cast<std::size_t>(tree.vertex_count()), 0);
    std::vector<char> seen(static_cast<std::size_t>(tree.vertex_count()), 0);
    std::vector<int> stack{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        int next = 1;
        for (int w : tree.neighbors(v)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            if (next == parent_color[static_cast<std::size_t>(v)]) ++next;
            colors[static_cast<std::size_t>(tree.edge_index(v, w))] = next;
            parent_color[static_cast<std::size_t>(w)] = next;
            ++next;
            seen[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
        }
    }
    return colors;
}

}  // namespace propc::detail
