#pragma once
// Edge colorings and proper-path queries.  A path is proper when no two
// consecutive edges share a color; all existence answers here are decided
// for simple paths.  A cheap layered search over (vertex, last color)
// states answers the walk relaxation first: walks over-approximate paths,
// so "no proper walk" soundly refutes, while positives are confirmed by an
// exhaustive simple-path search.

#include <algorithm>
#include <optional>
#include <vector>

#include "propc/graph.hpp"

namespace propc {

// colors are 1-based; 0 is reserved as the "uncolored" sentinel that solvers
// use inside partial assignments (walk queries treat it as optimistically
// compatible with everything)
class EdgeColoring {
public:
    EdgeColoring(const Graph& g, std::vector<int> colors) : g_(&g), colors_(std::move(colors)) {
        if (static_cast<int>(colors_.size()) != g.edge_count())
            throw argument_error("coloring must assign exactly one color per edge");
        for (int c : colors_)
            if (c < 1) throw argument_error("edge colors must be positive");
    }

    const Graph& host() const { return *g_; }

    int color_of_edge(int edge_idx) const {
        if (edge_idx < 0 || edge_idx >= static_cast<int>(colors_.size()))
            throw argument_error("edge index out of range");
        return colors_[static_cast<std::size_t>(edge_idx)];
    }

    int color_of(int u, int v) const {
        int e = g_->edge_index(u, v);
        if (e < 0) throw argument_error("no such edge");
        return colors_[static_cast<std::size_t>(e)];
    }

    const std::vector<int>& colors() const { return colors_; }

    std::vector<int> palette() const {
        std::vector<int> p(colors_);
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        return p;
    }

    int color_count() const { return static_cast<int>(palette().size()); }

private:
    const Graph* g_;
    std::vector<int> colors_;
};

struct WitnessPath {
    std::vector<int> vertices;
    std::vector<int> colors;  // one per traversed edge
};

namespace detail {

// Vertices reachable from source by a proper WALK.  States are directed
// edge arrivals; color 0 on an edge means "uncolored, compatible with
// anything" which makes the answer an over-approximation for partially
// colored graphs and exact walk reachability for fully colored ones.
inline VertexSet proper_walk_reachable(const Graph& g, const int* colors, int source) {
    int m = g.edge_count();
    VertexSet reached(g.vertex_count());
    reached.insert(source);
    // state id 2e+d: arrived over edge e at edges()[e].second (d=0) / .first (d=1)
    std::vector<char> seen(static_cast<std::size_t>(2 * m), 0);
    std::vector<int> queue;
    auto push = [&](int state, int vertex) {
        if (seen[static_cast<std::size_t>(state)]) return;
        seen[static_cast<std::size_t>(state)] = 1;
        reached.insert(vertex);
        queue.push_back(state);
    };
    for (int w : g.neighbors(source)) {
        int e = g.edge_index(source, w);
        push(2 * e + (g.edges()[static_cast<std::size_t>(e)].second == w ? 0 : 1), w);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int state = queue[head];
        int e = state / 2;
        auto [a, b] = g.edges()[static_cast<std::size_t>(e)];
        int at = (state % 2 == 0) ? b : a;
        int last = colors[e];
        for (int w : g.neighbors(at)) {
            int f = g.edge_index(at, w);
            int c = colors[f];
            if (c != 0 && last != 0 && c == last) continue;
            push(2 * f + (g.edges()[static_cast<std::size_t>(f)].second == w ? 0 : 1), w);
        }
    }
    return reached;
}

// Vertices reachable from source by a proper SIMPLE path (authoritative).
// Stops as soon as `needed` is fully covered.  Exponential in the worst
// case; intended for the small graphs this library targets.
inline bool path_reach_rec(const Graph& g, const int* colors, int v, int last_color,
                           std::vector<char>& visited, VertexSet& reached, int& missing,
                           const VertexSet& needed) {
    for (int w : g.neighbors(v)) {
        if (visited[static_cast<std::size_t>(w)]) continue;
        int c = colors[g.edge_index(v, w)];
        if (last_color != 0 && c == last_color) continue;
        if (!reached.contains(w)) {
            reached.insert(w);
            if (needed.contains(w) && --missing == 0) return true;
        }
        visited[static_cast<std::size_t>(w)] = 1;
        bool done = path_reach_rec(g, colors, w, c, visited, reached, missing, needed);
        visited[static_cast<std::size_t>(w)] = 0;
        if (done) return true;
    }
    return false;
}

inline VertexSet proper_path_reachable(const Graph& g, const int* colors, int source,
                                       const VertexSet& needed) {
    VertexSet reached(g.vertex_count());
    reached.insert(source);
    int missing = (needed - reached).count();
    if (missing == 0) return reached;
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    visited[static_cast<std::size_t>(source)] = 1;
    path_reach_rec(g, colors, source, 0, visited, reached, missing, needed);
    return reached;
}

inline bool find_path_rec(const Graph& g, const int* colors, int v, int target, int last_color,
                          std::vector<char>& visited, std::vector<int>& path) {
    if (v == target) return true;
    for (int w : g.neighbors(v)) {
        if (visited[static_cast<std::size_t>(w)]) continue;
        int c = colors[g.edge_index(v, w)];
        if (last_color != 0 && c == last_color) continue;
        visited[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        if (find_path_rec(g, colors, w, target, c, visited, path)) return true;
        path.pop_back();
        visited[static_cast<std::size_t>(w)] = 0;
    }
    return false;
}

// fast whole-coloring feasibility test used inside solver loops: the walk
// relaxation refutes, the simple-path search confirms; no failing pair is
// identified
inline bool proper_connected_fast(const Graph& g, const int* colors) {
    int n = g.vertex_count();
    for (int u = 0; u + 1 < n; ++u) {
        VertexSet rest(n);
        for (int v = u + 1; v < n; ++v) rest.insert(v);
        auto walk = proper_walk_reachable(g, colors, u);
        if (!rest.is_subset_of(walk)) return false;
        auto path = proper_path_reachable(g, colors, u, rest);
        if (!rest.is_subset_of(path)) return false;
    }
    return true;
}

// partial-coloring feasibility: treat uncolored edges as optimistically
// compatible; if some pair has no proper walk even then, no completion can
// properly connect it
inline bool partial_coloring_feasible(const Graph& g, const int* colors) {
    int n = g.vertex_count();
    VertexSet everything = VertexSet::full(n);
    for (int u = 0; u + 1 < n; ++u) {
        auto walk = proper_walk_reachable(g, colors, u);
        if (!(everything - walk).empty()) return false;
    }
    return true;
}

}  // namespace detail

// true iff `vertices` is a simple path in g and its edge colors never repeat
// consecutively; single-vertex paths are proper
inline bool is_proper_path(const Graph& g, const EdgeColoring& c, const std::vector<int>& vertices) {
    if (&c.host() != &g && !(c.host() == g))
        throw argument_error("coloring belongs to a different graph");
    if (vertices.empty()) throw argument_error("a path needs at least one vertex");
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count()) throw argument_error("path vertex out of range");
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    int last = 0;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        int e = g.edge_index(vertices[i], vertices[i + 1]);
        if (e < 0) return false;
        int col = c.color_of_edge(e);
        if (last != 0 && col == last) return false;
        last = col;
    }
    return true;
}

// a proper simple u-v path if one exists
inline std::optional<WitnessPath> find_proper_path(const Graph& g, const EdgeColoring& c,
                                                   int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw argument_error("vertex id out of range");
    if (u == v) throw argument_error("endpoints must be distinct");
    const int* cols = c.colors().data();
    if (!detail::proper_walk_reachable(g, cols, u).contains(v)) return std::nullopt;
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    visited[static_cast<std::size_t>(u)] = 1;
    std::vector<int> path{u};
    if (!detail::find_path_rec(g, cols, u, v, 0, visited, path)) return std::nullopt;
    WitnessPath w;
    w.vertices = std::move(path);
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        w.colors.push_back(c.color_of(w.vertices[i], w.vertices[i + 1]));
    return w;
}

struct ColoringCheck {
    bool pass;
    int fail_u = -1;  // lexicographically first failing pair when !pass
    int fail_v = -1;
};

// PASS iff every vertex pair has a proper simple path
inline ColoringCheck is_proper_path_coloring(const Graph& g, const EdgeColoring& c) {
    if (!is_connected(g)) throw disconnected_error("proper connectivity needs a connected graph");
    int n = g.vertex_count();
    const int* cols = c.colors().data();
    for (int u = 0; u + 1 < n; ++u) {
        VertexSet rest(n);
        for (int v = u + 1; v < n; ++v) rest.insert(v);
        auto reach = detail::proper_path_reachable(g, cols, u, rest);
        for (int v = u + 1; v < n; ++v)
            if (!reach.contains(v)) return {false, u, v};
    }
    return {true, -1, -1};
}

}  // namespace propc
