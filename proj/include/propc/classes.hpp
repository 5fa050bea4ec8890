#pragma once
// Graph-class machinery: interval / circular-arc / threshold / chain
// representations with realize(), recognizers (chain, AT-free), structure
// extractors (hamiltonian path, dominating path/cycle, dominating vertex),
// the interval sharpness family, and seeded random generators.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "propc/detail/chain.hpp"
#include "propc/detail/hamiltonian.hpp"
#include "propc/domination.hpp"
#include "propc/exact.hpp"
#include "propc/graph.hpp"

namespace propc {

using Rational = boost::rational<long long>;

// closed intervals [left, right] on the rational line; edge iff intersection
struct IntervalRepresentation {
    std::vector<std::pair<Rational, Rational>> intervals;
};

// arcs on the unit circle: start in [0,1), end >= start; spans >= 1 cover
// the whole circle and meet everything
struct ArcRepresentation {
    std::vector<std::pair<Rational, Rational>> arcs;
};

// edge iff weight(u) + weight(v) >= threshold
struct ThresholdSpec {
    std::vector<Rational> weights;
    Rational threshold;
};

// bipartite with one side's neighborhoods nested: a_neighbors[i] lists
// b-side indices of the i-th a vertex, nested increasingly. a_ids/b_ids
// carry host vertex labels when the spec witnesses recognition of a graph.
struct ChainSpec {
    std::vector<std::vector<int>> a_neighbors;
    int b_count = 0;
    std::vector<int> a_ids;
    std::vector<int> b_ids;
};

inline Graph realize(const IntervalRepresentation& rep) {
    int n = static_cast<int>(rep.intervals.size());
    for (const auto& [l, r] : rep.intervals)
        if (l > r) throw argument_error("interval endpoints out of order");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& a = rep.intervals[static_cast<std::size_t>(u)];
            const auto& b = rep.intervals[static_cast<std::size_t>(v)];
            if (std::max(a.first, b.first) <= std::min(a.second, b.second))
                edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

namespace detail {

inline bool arc_is_full(const std::pair<Rational, Rational>& a) {
    return a.second - a.first >= Rational(1);
}

inline bool arcs_intersect(const std::pair<Rational, Rational>& a,
                           const std::pair<Rational, Rational>& b) {
    if (arc_is_full(a) || arc_is_full(b)) return true;
    for (int shift = -1; shift <= 1; ++shift) {
        Rational lo = std::max(a.first, b.first + Rational(shift));
        Rational hi = std::min(a.second, b.second + Rational(shift));
        if (lo <= hi) return true;
    }
    return false;
}

inline bool arc_contains_point(const std::pair<Rational, Rational>& a, const Rational& p) {
    if (arc_is_full(a)) return true;
    for (int shift = -1; shift <= 1; ++shift)
        if (a.first + Rational(shift) <= p && p <= a.second + Rational(shift)) return true;
    return false;
}

// a point of the circle no arc covers, if one exists
inline std::optional<Rational> uncovered_circle_point(const ArcRepresentation& rep) {
    if (rep.arcs.empty()) return Rational(0);
    std::vector<Rational> points;
    for (const auto& a : rep.arcs) {
        if (arc_is_full(a)) return std::nullopt;
        Rational s = a.first;
        Rational e = a.second >= Rational(1) ? a.second - Rational(1) : a.second;
        points.push_back(s);
        points.push_back(e);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Rational> candidates = points;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Rational next = i + 1 < points.size() ? points[i + 1] : points[0] + Rational(1);
        Rational mid = (points[i] + next) / Rational(2);
        if (mid >= Rational(1)) mid -= Rational(1);
        candidates.push_back(mid);
    }
    for (const auto& p : candidates) {
        bool covered = false;
        for (const auto& a : rep.arcs)
            if (arc_contains_point(a, p)) {
                covered = true;
                break;
            }
        if (!covered) return p;
    }
    return std::nullopt;
}

}  // namespace detail

inline Graph realize(const ArcRepresentation& rep) {
    int n = static_cast<int>(rep.arcs.size());
    for (const auto& [s, e] : rep.arcs) {
        if (s < Rational(0) || s >= Rational(1))
            throw argument_error("arc start must lie in [0,1)");
        if (e < s) throw argument_error("arc end precedes its start");
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::arcs_intersect(rep.arcs[static_cast<std::size_t>(u)],
                                       rep.arcs[static_cast<std::size_t>(v)]))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph realize(const ThresholdSpec& spec) {
    int n = static_cast<int>(spec.weights.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (spec.weights[static_cast<std::size_t>(u)] +
                    spec.weights[static_cast<std::size_t>(v)] >=
                spec.threshold)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph realize(const ChainSpec& spec) {
    int k = static_cast<int>(spec.a_neighbors.size());
    if (spec.b_count < 0) throw argument_error("negative b side");
    for (const auto& nbrs : spec.a_neighbors) {
        if (!std::is_sorted(nbrs.begin(), nbrs.end()) ||
            std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw argument_error("neighbor lists must be sorted and duplicate-free");
        for (int b : nbrs)
            if (b < 0 || b >= spec.b_count) throw argument_error("b index out of range");
    }
    for (int i = 1; i < k; ++i) {
        const auto& small = spec.a_neighbors[static_cast<std::size_t>(i - 1)];
        const auto& big = spec.a_neighbors[static_cast<std::size_t>(i)];
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
            throw argument_error("neighborhoods are not nested");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int b : spec.a_neighbors[static_cast<std::size_t>(i)])
            edges.emplace_back(i, k + b);
    return Graph(k + spec.b_count, edges);
}

inline std::optional<ChainSpec> is_chain_graph(const Graph& g) {
    auto shape = detail::chain_shape(g);
    if (!shape) return std::nullopt;
    ChainSpec spec;
    spec.a_ids = shape->a_order;
    spec.b_ids = shape->b_order;
    spec.b_count = static_cast<int>(shape->b_order.size());
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t j = 0; j < shape->b_order.size(); ++j)
        pos[static_cast<std::size_t>(shape->b_order[j])] = static_cast<int>(j);
    for (int a : shape->a_order) {
        std::vector<int> nbrs;
        for (int b : g.neighbors(a)) nbrs.push_back(pos[static_cast<std::size_t>(b)]);
        std::sort(nbrs.begin(), nbrs.end());
        spec.a_neighbors.push_back(std::move(nbrs));
    }
    return spec;
}

struct AtFreeReport {
    bool at_free = true;
    std::array<int, 3> triple{-1, -1, -1};
};

inline AtFreeReport is_at_free(const Graph& g) {
    if (!is_connected(g)) throw disconnected_error("asteroidal triples need a connected graph");
    int n = g.vertex_count();
    // components of g minus N[z], indexed component[z][v], -1 inside N[z]
    std::vector<std::vector<int>> component(static_cast<std::size_t>(n),
                                            std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int z = 0; z < n; ++z) {
        auto& comp = component[static_cast<std::size_t>(z)];
        std::vector<char> removed(static_cast<std::size_t>(n), 0);
        removed[static_cast<std::size_t>(z)] = 1;
        for (int u : g.neighbors(z)) removed[static_cast<std::size_t>(u)] = 1;
        int next = 0;
        std::vector<int> stack;
        for (int s = 0; s < n; ++s) {
            if (removed[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0)
                continue;
            comp[static_cast<std::size_t>(s)] = next;
            stack.assign(1, s);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : g.neighbors(u))
                    if (!removed[static_cast<std::size_t>(v)] &&
                        comp[static_cast<std::size_t>(v)] < 0) {
                        comp[static_cast<std::size_t>(v)] = next;
                        stack.push_back(v);
                    }
            }
            ++next;
        }
    }
    auto escape = [&](int a, int b, int avoid) {
        const auto& comp = component[static_cast<std::size_t>(avoid)];
        return comp[static_cast<std::size_t>(a)] >= 0 &&
               comp[static_cast<std::size_t>(a)] == comp[static_cast<std::size_t>(b)];
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.has_edge(x, y)) continue;
            for (int z = y + 1; z < n; ++z) {
                if (g.has_edge(x, z) || g.has_edge(y, z)) continue;
                if (escape(x, y, z) && escape(x, z, y) && escape(y, z, x))
                    return {false, {x, y, z}};
            }
        }
    return {};
}

inline std::optional<std::vector<int>> hamiltonian_path(const Graph& g,
                                                        const SearchBudget& budget = {}) {
    if (g.vertex_count() > budget.hamiltonian_vertex_cap)
        throw budget_error("graph too large for the hamiltonian path search", 0);
    auto result = detail::hamiltonian_path(g, budget.hamiltonian_node_cap);
    if (result.path) return std::move(result.path);
    if (!result.exhausted)
        throw budget_error("hamiltonian path search exceeded its node budget",
                           budget.hamiltonian_node_cap);
    return std::nullopt;
}

// greedy sweep: start in the neighborhood of the interval whose right
// endpoint is leftmost, then repeatedly step to the neighbor reaching
// furthest right, stopping as soon as the path dominates
inline std::vector<int> dominating_path_interval(const IntervalRepresentation& rep) {
    Graph g = realize(rep);
    if (!is_connected(g)) throw disconnected_error("dominating path needs a connected graph");
    if (is_complete(g)) throw argument_error("complete graphs are out of scope here");

    auto right = [&](int v) { return rep.intervals[static_cast<std::size_t>(v)].second; };
    int anchor = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (right(v) < right(anchor)) anchor = v;
    int start = -1;
    for (int u : g.neighbors(anchor))
        if (start < 0 || right(u) > right(start)) start = u;

    std::vector<int> path{start};
    VertexSet members = VertexSet::of(g.vertex_count(), {start});
    auto dominates = [&] {
        auto dist = bfs_distances(g, members);
        for (int d : dist)
            if (d > 1) return false;
        return true;
    };
    while (!dominates()) {
        int cur = path.back();
        int next = -1;
        for (int u : g.neighbors(cur))
            if (right(u) > right(cur) && (next < 0 || right(u) > right(next))) next = u;
        if (next < 0) break;
        path.push_back(next);
        members.insert(next);
    }
    if (!dominates()) throw std::logic_error("greedy interval sweep failed to dominate");
    return path;
}

namespace detail {

inline bool hamiltonian_cycle_rec(const Graph& g, std::vector<int>& cycle,
                                  std::vector<char>& used, long long& nodes) {
    if (++nodes > 2'000'000) throw budget_error("cycle search exceeded its node budget", nodes);
    if (static_cast<int>(cycle.size()) == g.vertex_count())
        return g.has_edge(cycle.back(), cycle.front());
    for (int v : g.neighbors(cycle.back())) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = 1;
        cycle.push_back(v);
        if (hamiltonian_cycle_rec(g, cycle, used, nodes)) return true;
        cycle.pop_back();
        used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

inline std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g) {
    if (g.vertex_count() < 3) return std::nullopt;
    std::vector<int> cycle{0};
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    used[0] = 1;
    long long nodes = 0;
    if (hamiltonian_cycle_rec(g, cycle, used, nodes)) return cycle;
    return std::nullopt;
}

inline std::optional<std::vector<int>> exhaustive_dominating_cycle(const Graph& g) {
    int n = g.vertex_count();
    if (n > SearchBudget{}.subset_vertex_cap)
        throw budget_error("graph too large for the dominating cycle fallback", 0);
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (std::uint32_t mask : masks) {
        if (std::popcount(mask) < 3) continue;
        VertexSet d(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) d.insert(v);
        auto dist = bfs_distances(g, d);
        if (*std::max_element(dist.begin(), dist.end()) > 1) continue;
        auto sub = induced_subgraph(g, d);
        if (!is_connected(sub.graph)) continue;
        if (auto cycle = hamiltonian_cycle(sub.graph)) {
            for (int& v : *cycle) v = sub.to_host[static_cast<std::size_t>(v)];
            return cycle;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// circular greedy sweep over covering arcs; degenerate covers are patched
// into triangles, anything else falls back to exhaustive search
inline std::vector<int> dominating_cycle_circular_arc(const ArcRepresentation& rep) {
    Graph g = realize(rep);
    if (!is_connected(g)) throw disconnected_error("dominating cycle needs a connected graph");
    if (detail::uncovered_circle_point(rep))
        throw argument_error(
            "arcs leave part of the circle uncovered; cut there and use the interval routine");
    int n = g.vertex_count();

    auto finish = [&](std::vector<int> cycle) -> std::vector<int> {
        bool ok = static_cast<int>(cycle.size()) >= 3;
        if (ok) {
            VertexSet members(n);
            for (int v : cycle) members.insert(v);
            auto dist = bfs_distances(g, members);
            ok = members.count() == static_cast<int>(cycle.size()) &&
                 *std::max_element(dist.begin(), dist.end()) <= 1;
            for (std::size_t i = 0; ok && i < cycle.size(); ++i)
                ok = g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        }
        if (ok) return cycle;
        if (auto found = detail::exhaustive_dominating_cycle(g)) return *found;
        throw argument_error("the realized graph has no dominating cycle");
    };

    for (int v = 0; v < n; ++v)
        if (detail::arc_is_full(rep.arcs[static_cast<std::size_t>(v)])) {
            for (auto [x, y] : g.edges())
                if (x != v && y != v) return finish({v, x, y});
            return finish({});
        }

    int first = 0;
    for (int v = 1; v < n; ++v)
        if (rep.arcs[static_cast<std::size_t>(v)].first < rep.arcs[static_cast<std::size_t>(first)].first)
            first = v;
    Rational target = rep.arcs[static_cast<std::size_t>(first)].first + Rational(1);
    Rational reach = rep.arcs[static_cast<std::size_t>(first)].second;
    std::vector<int> chosen{first};
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    taken[static_cast<std::size_t>(first)] = 1;
    while (reach < target) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (taken[static_cast<std::size_t>(v)]) continue;
            const auto& a = rep.arcs[static_cast<std::size_t>(v)];
            if (a.first > reach || a.second < reach) continue;
            if (best < 0 || a.second > rep.arcs[static_cast<std::size_t>(best)].second) best = v;
        }
        if (best < 0 || rep.arcs[static_cast<std::size_t>(best)].second <= reach) break;
        chosen.push_back(best);
        taken[static_cast<std::size_t>(best)] = 1;
        reach = rep.arcs[static_cast<std::size_t>(best)].second;
    }
    if (chosen.size() == 2) {
        for (int z = 0; z < n; ++z)
            if (!taken[static_cast<std::size_t>(z)] && g.has_edge(z, chosen[0]) &&
                g.has_edge(z, chosen[1]))
                return finish({chosen[0], z, chosen[1]});
    }
    return finish(chosen);
}

struct IntervalGraphInstance {
    Graph graph;
    IntervalRepresentation rep;
};

struct ArcGraphInstance {
    Graph graph;
    ArcRepresentation rep;
};

// spine path of t vertices, one pendant triangle per spine vertex, and a
// second triangle on the first spine vertex; minimum degree 2 throughout
inline IntervalGraphInstance sharpness_family_interval(int t) {
    if (t < 2) throw argument_error("the family starts at t = 2");
    IntervalRepresentation rep;
    rep.intervals.resize(static_cast<std::size_t>(3 * t + 2));
    for (int i = 1; i <= t; ++i)
        rep.intervals[static_cast<std::size_t>(i - 1)] = {Rational(i), Rational(i + 1)};
    for (int i = 1; i <= t; ++i) {
        rep.intervals[static_cast<std::size_t>(t + 2 * (i - 1))] = {Rational(i) + Rational(1, 5),
                                                                    Rational(i) + Rational(2, 5)};
        rep.intervals[static_cast<std::size_t>(t + 2 * (i - 1) + 1)] = {
            Rational(i) + Rational(3, 10), Rational(i) + Rational(1, 2)};
    }
    rep.intervals[static_cast<std::size_t>(3 * t)] = {Rational(8, 5), Rational(9, 5)};
    rep.intervals[static_cast<std::size_t>(3 * t + 1)] = {Rational(17, 10), Rational(19, 10)};
    Graph g = realize(rep);
    return {std::move(g), std::move(rep)};
}

inline int max_weight_dominating_vertex(const ThresholdSpec& spec) {
    Graph g = realize(spec);
    if (!is_connected(g)) throw argument_error("the realized threshold graph is disconnected");
    int best = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (spec.weights[static_cast<std::size_t>(v)] > spec.weights[static_cast<std::size_t>(best)])
            best = v;
    auto cert = classify_dominating_set(g, VertexSet::of(g.vertex_count(), {best}));
    if (!cert.is_dominating)
        throw std::logic_error("a maximum-weight vertex failed to dominate");
    return best;
}

// ---- seeded generators ------------------------------------------------

namespace detail {

inline int pick(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

}  // namespace detail

inline Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw argument_error("trees need at least one vertex");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    for (int& p : prufer) p = detail::pick(rng, 0, n - 1);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int p : prufer) ++degree[static_cast<std::size_t>(p)];
    std::vector<std::pair<int, int>> edges;
    for (int p : prufer) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                edges.emplace_back(leaf, p);
                degree[static_cast<std::size_t>(leaf)] = 0;
                --degree[static_cast<std::size_t>(p)];
                break;
            }
    }
    std::array<int, 2> last{-1, -1};
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) last[last[0] < 0 ? 0 : 1] = v;
    edges.emplace_back(last[0], last[1]);
    return Graph(n, edges);
}

inline Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng) {
    Graph tree = random_tree(n, rng);
    auto edges = tree.edges();
    auto cutoff = static_cast<unsigned long long>(edge_probability * 1e6);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool keep = rng() % 1'000'000 < cutoff;
            if (keep && !tree.has_edge(u, v)) edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

struct GeneratorOptions {
    bool require_connected = true;
    bool require_min_degree_two = false;
    bool require_non_complete = false;
    int max_edges = 0;  // 0 = unbounded
    int attempts = 20000;
};

namespace detail {

inline bool acceptable(const Graph& g, const GeneratorOptions& opts) {
    if (opts.require_connected && !is_connected(g)) return false;
    if (opts.require_min_degree_two && (g.vertex_count() == 0 || min_degree(g) < 2)) return false;
    if (opts.require_non_complete && is_complete(g)) return false;
    if (opts.max_edges > 0 && g.edge_count() > opts.max_edges) return false;
    return true;
}

}  // namespace detail

inline ChainSpec random_chain_spec(int max_side, bool min_degree_two, std::mt19937_64& rng) {
    if (max_side < 2) throw argument_error("chain sides need at least two vertices");
    int k = detail::pick(rng, 2, max_side);
    int m = detail::pick(rng, 2, max_side);
    int lo = min_degree_two ? 2 : 1;
    std::vector<int> sizes(static_cast<std::size_t>(k));
    for (int& s : sizes) s = detail::pick(rng, lo, m);
    std::sort(sizes.begin(), sizes.end());
    sizes[static_cast<std::size_t>(k - 1)] = m;
    if (min_degree_two) sizes[static_cast<std::size_t>(k - 2)] = m;
    ChainSpec spec;
    spec.b_count = m;
    for (int s : sizes) {
        std::vector<int> prefix(static_cast<std::size_t>(s));
        for (int j = 0; j < s; ++j) prefix[static_cast<std::size_t>(j)] = j;
        spec.a_neighbors.push_back(std::move(prefix));
    }
    return spec;
}

inline IntervalGraphInstance random_interval_instance(int n, std::mt19937_64& rng,
                                                      const GeneratorOptions& opts = {}) {
    if (n < 1) throw argument_error("need at least one interval");
    for (int attempt = 0; attempt < opts.attempts; ++attempt) {
        IntervalRepresentation rep;
        rep.intervals.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            long long l = detail::pick(rng, 0, 2 * n);
            long long len = detail::pick(rng, 1, std::max(2, n / 2 + 1));
            rep.intervals.emplace_back(Rational(l), Rational(l + len));
        }
        Graph g = realize(rep);
        if (detail::acceptable(g, opts)) return {std::move(g), std::move(rep)};
    }
    throw std::logic_error("interval generator exhausted its attempts");
}

inline ArcGraphInstance random_arc_instance(int n, std::mt19937_64& rng,
                                            const GeneratorOptions& opts = {},
                                            bool require_wrap_cover = false) {
    if (n < 1) throw argument_error("need at least one arc");
    long long grid = 4 * n;
    for (int attempt = 0; attempt < opts.attempts; ++attempt) {
        ArcRepresentation rep;
        rep.arcs.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            long long s = detail::pick(rng, 0, static_cast<int>(grid) - 1);
            long long len = detail::pick(rng, 1, static_cast<int>(grid) / 2);
            rep.arcs.emplace_back(Rational(s, grid), Rational(s + len, grid));
        }
        Graph g = realize(rep);
        if (!detail::acceptable(g, opts)) continue;
        if (require_wrap_cover && detail::uncovered_circle_point(rep)) continue;
        return {std::move(g), std::move(rep)};
    }
    throw std::logic_error("arc generator exhausted its attempts");
}

inline ThresholdSpec random_threshold_spec(int n, std::mt19937_64& rng,
                                           const GeneratorOptions& opts = {}) {
    if (n < 1) throw argument_error("need at least one weight");
    for (int attempt = 0; attempt < opts.attempts; ++attempt) {
        ThresholdSpec spec;
        spec.weights.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) spec.weights.emplace_back(detail::pick(rng, 1, 2 * n));
        spec.threshold = Rational(detail::pick(rng, 3, 3 * n));
        Graph g = realize(spec);
        if (detail::acceptable(g, opts)) return spec;
    }
    throw std::logic_error("threshold generator exhausted its attempts");
}

}  // namespace propc
