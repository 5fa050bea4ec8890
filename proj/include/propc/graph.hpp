#pragma once
// Undirected simple graphs on dense vertex ids 0..n-1, plus the metric and
// neighborhood operations the rest of the library builds on.  Graphs are
// immutable after construction; every operation here is a pure function.

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "propc/bitset.hpp"
#include "propc/errors.hpp"

namespace propc {

// distinguished "unreachable" distance; propagates through eccentricity,
// diameter and radius on disconnected input instead of throwing
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) : n_(vertex_count) {
        if (vertex_count < 0) throw argument_error("vertex count must be nonnegative");
        for (auto& [u, v] : edge_list) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw argument_error("edge endpoint out of range");
            if (u == v) throw argument_error("self-loops are not allowed");
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
            throw argument_error("parallel edges are not allowed");
        edges_ = std::move(edge_list);
        adj_.assign(static_cast<std::size_t>(n_), {});
        adj_set_.assign(static_cast<std::size_t>(n_), VertexSet(n_));
        eidx_.assign(static_cast<std::size_t>(n_) * n_, -1);
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            auto [u, v] = edges_[static_cast<std::size_t>(e)];
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
            adj_set_[static_cast<std::size_t>(u)].insert(v);
            adj_set_[static_cast<std::size_t>(v)].insert(u);
            eidx_[static_cast<std::size_t>(u) * n_ + v] = e;
            eidx_[static_cast<std::size_t>(v) * n_ + u] = e;
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // lexicographically sorted, each pair normalized to u < v
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const {
        bounds(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    const VertexSet& neighbor_set(int v) const {
        bounds(v);
        return adj_set_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const {
        bounds(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    // index into edges(), or -1 when the edge is absent
    int edge_index(int u, int v) const {
        bounds(u);
        bounds(v);
        if (u == v) return -1;
        return eidx_[static_cast<std::size_t>(u) * n_ + v];
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void bounds(int v) const {
        if (v < 0 || v >= n_) throw argument_error("vertex id out of range");
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> adj_set_;
    std::vector<int> eidx_;
};

// ---- breadth-first metrics -------------------------------------------------

inline std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources) {
    if (sources.universe() != g.vertex_count())
        throw argument_error("source set universe does not match the graph");
    if (sources.empty()) throw argument_error("source set must be nonempty");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kInfiniteDistance);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(g.vertex_count()));
    sources.for_each([&](int v) {
        dist[static_cast<std::size_t>(v)] = 0;
        queue.push_back(v);
    });
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] != kInfiniteDistance) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    VertexSet s(g.vertex_count());
    s.insert(source);
    return bfs_distances(g, s);
}

inline int distance(const Graph& g, int u, int v) {
    auto d = bfs_distances(g, u);
    if (v < 0 || v >= g.vertex_count()) throw argument_error("vertex id out of range");
    return d[static_cast<std::size_t>(v)];
}

inline int eccentricity(const Graph& g, int v) {
    auto d = bfs_distances(g, v);
    int e = 0;
    for (int x : d) e = std::max(e, x);
    return e;
}

inline int diameter(const Graph& g) {
    if (g.vertex_count() == 0) throw argument_error("diameter of the empty graph is undefined");
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, eccentricity(g, v));
    return d;
}

inline int radius(const Graph& g) {
    if (g.vertex_count() == 0) throw argument_error("radius of the empty graph is undefined");
    int r = kInfiniteDistance;
    for (int v = 0; v < g.vertex_count(); ++v) r = std::min(r, eccentricity(g, v));
    return r;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto d = bfs_distances(g, 0);
    for (int x : d)
        if (x == kInfiniteDistance) return false;
    return true;
}

// ---- neighborhoods and degrees ----------------------------------------------

// vertices at distance exactly k from the set s
inline VertexSet k_step_neighborhood(const Graph& g, const VertexSet& s, int k) {
    if (k < 0) throw argument_error("neighborhood step must be nonnegative");
    auto dist = bfs_distances(g, s);
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[static_cast<std::size_t>(v)] == k) out.insert(v);
    return out;
}

inline VertexSet pendant_vertices(const Graph& g) {
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.insert(v);
    return out;
}

inline int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw argument_error("minimum degree of the empty graph is undefined");
    int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
    return d;
}

inline int max_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw argument_error("maximum degree of the empty graph is undefined");
    int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

// ---- subgraphs ---------------------------------------------------------------

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;    // new id -> host id, ascending
    std::vector<int> from_host;  // host id -> new id, -1 outside the kept set
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.vertex_count())
        throw argument_error("kept set universe does not match the graph");
    InducedSubgraph out;
    out.to_host = keep.to_vector();
    out.from_host.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(out.to_host.size()); ++i)
        out.from_host[static_cast<std::size_t>(out.to_host[static_cast<std::size_t>(i)])] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int a = out.from_host[static_cast<std::size_t>(u)];
        int b = out.from_host[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    out.graph = Graph(static_cast<int>(out.to_host.size()), std::move(edges));
    return out;
}

// true iff h spans g (same vertex set), E(h) is a subset of E(g), and h is connected
inline bool is_spanning_connected_subgraph(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw argument_error("spanning subgraph must have the same vertex count");
    for (auto [u, v] : h.edges())
        if (!g.has_edge(u, v)) return false;
    return is_connected(h);
}

inline bool is_complete(const Graph& g) {
    long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

// ---- named families ----------------------------------------------------------

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw argument_error("cycles need at least three vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

// center is vertex 0, leaves are 1..m
inline Graph star_graph(int m) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
    return Graph(m + 1, std::move(e));
}

// sides are 0..a-1 and a..a+b-1
inline Graph complete_bipartite_graph(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
}

inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, std::move(e));
}

}  // namespace propc
