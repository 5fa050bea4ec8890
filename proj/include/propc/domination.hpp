#pragma once
// Dominating-set variants used by the coloring constructions.
//
// A set D is two-way dominating when it dominates (distance <= 1) and
// contains every pendant vertex.  It is two-way two-step dominating when it
// reaches everything within distance 2, contains every pendant, and every
// vertex at distance exactly 2 keeps at least two neighbors at distance 1
// from D (two edge-disjoint escapes back toward D).  Connected variants
// additionally require G[D] to be connected.

#include <algorithm>
#include <bit>
#include <vector>

#include "propc/exact.hpp"
#include "propc/graph.hpp"

namespace propc {

enum class DominationKind { two_way, two_way_two_step };

struct DominationCertificate {
    VertexSet d;
    int size;
    int k_step_reach;  // max distance of any vertex to d
    bool is_dominating;
    bool is_two_step_dominating;
    bool contains_all_pendants;
    bool second_neighbor_support;
    bool induced_connected;
    bool is_two_way;
    bool is_two_way_two_step;
    bool meets_size_bound;  // size ≤ 3n/(δ+1) − 2

    bool satisfies(DominationKind kind) const {
        return kind == DominationKind::two_way ? is_two_way : is_two_way_two_step;
    }
};

inline DominationCertificate classify_dominating_set(const Graph& g, const VertexSet& d) {
    auto dist = bfs_distances(g, d);
    int n = g.vertex_count();

    DominationCertificate cert{d,    d.count(), 0,     true,  true, true,
                               true, false,     false, false, false};
    for (int v = 0; v < n; ++v) {
        int dv = dist[static_cast<std::size_t>(v)];
        cert.k_step_reach = std::max(cert.k_step_reach, dv);
        if (dv > 1) cert.is_dominating = false;
        if (dv > 2) cert.is_two_step_dominating = false;
        if (dv == 2) {
            int support = 0;
            for (int w : g.neighbors(v))
                if (dist[static_cast<std::size_t>(w)] == 1) ++support;
            if (support < 2) cert.second_neighbor_support = false;
        }
    }
    if (!pendant_vertices(g).is_subset_of(d)) cert.contains_all_pendants = false;

    cert.induced_connected = is_connected(induced_subgraph(g, d).graph);
    cert.is_two_way = cert.is_dominating && cert.contains_all_pendants;
    cert.is_two_way_two_step = cert.is_two_step_dominating && cert.contains_all_pendants &&
                               cert.second_neighbor_support;
    cert.meets_size_bound = (cert.size + 2) * (min_degree(g) + 1) <= 3 * n;
    return cert;
}

struct MinimumDominatingSets {
    int size;
    std::vector<VertexSet> sets;  // every minimum-cardinality set, lexicographic
};

// exhaustive minimum search over vertex subsets; pendants are forced members
inline MinimumDominatingSets minimum_connected_dominating_sets(const Graph& g, DominationKind kind,
                                                               const SearchBudget& budget = {}) {
    if (!is_connected(g)) throw disconnected_error("domination search needs a connected graph");
    int n = g.vertex_count();
    if (n > budget.subset_vertex_cap)
        throw budget_error("too many vertices for the exhaustive subset search", 0);

    unsigned pendant_mask = 0;
    pendant_vertices(g).for_each([&](int p) { pendant_mask |= 1u << p; });

    for (int size = 1; size <= n; ++size) {
        std::vector<VertexSet> hits;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != size) continue;
            if ((mask & pendant_mask) != pendant_mask) continue;
            VertexSet d(n);
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) d.insert(v);
            auto cert = classify_dominating_set(g, d);
            if (cert.satisfies(kind) && cert.induced_connected) hits.push_back(std::move(d));
        }
        if (!hits.empty()) {
            std::sort(hits.begin(), hits.end(), [](const VertexSet& a, const VertexSet& b) {
                return a.to_vector() < b.to_vector();
            });
            return {size, std::move(hits)};
        }
    }
    return {-1, {}};  // unreachable: D = V always qualifies on a connected graph
}

inline DominationCertificate min_connected_two_way_dominating(const Graph& g,
                                                              const SearchBudget& budget = {}) {
    auto found = minimum_connected_dominating_sets(g, DominationKind::two_way, budget);
    return classify_dominating_set(g, found.sets.front());
}

inline DominationCertificate min_connected_two_way_two_step_dominating(
    const Graph& g, const SearchBudget& budget = {}) {
    auto found = minimum_connected_dominating_sets(g, DominationKind::two_way_two_step, budget);
    return classify_dominating_set(g, found.sets.front());
}

// Constructive connected two-way two-step dominating set with no size
// guarantee (the certificate records whether the 3n/(δ+1)−2 bound happens
// to hold).  Every repair step only ADDS vertices, which never invalidates
// the two-step reach, the pendant rule, or the second-neighbor rule for
// vertices that remain at distance exactly 2 — their supporters can only
// gain members as distances to D shrink.
inline DominationCertificate greedy_two_step_dominating(const Graph& g) {
    if (!is_connected(g)) throw disconnected_error("domination needs a connected graph");
    int n = g.vertex_count();
    VertexSet d = pendant_vertices(g);

    auto distances = [&] { return bfs_distances(g, d); };

    if (d.empty()) {
        int best = 0, best_cover = -1;
        for (int v = 0; v < n; ++v) {
            auto reach = bfs_distances(g, v);
            int cover = 0;
            for (int w = 0; w < n; ++w)
                if (reach[static_cast<std::size_t>(w)] <= 2) ++cover;
            if (cover > best_cover) {
                best_cover = cover;
                best = v;
            }
        }
        d.insert(best);
    }

    for (;;) {  // two-step coverage
        auto dist = distances();
        int best = -1, best_gain = -1;
        bool uncovered = false;
        for (int v = 0; v < n; ++v)
            if (dist[static_cast<std::size_t>(v)] > 2) uncovered = true;
        if (!uncovered) break;
        for (int v = 0; v < n; ++v) {
            if (d.contains(v)) continue;
            auto reach = bfs_distances(g, v);
            int gain = 0;
            for (int w = 0; w < n; ++w)
                if (dist[static_cast<std::size_t>(w)] > 2 && reach[static_cast<std::size_t>(w)] <= 2)
                    ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        d.insert(best);
    }

    for (;;) {  // second-neighbor support: absorb violators
        auto dist = distances();
        int violator = -1;
        for (int v = 0; v < n && violator < 0; ++v) {
            if (dist[static_cast<std::size_t>(v)] != 2) continue;
            int support = 0;
            for (int w : g.neighbors(v))
                if (dist[static_cast<std::size_t>(w)] == 1) ++support;
            if (support < 2) violator = v;
        }
        if (violator < 0) break;
        d.insert(violator);
    }

    for (;;) {  // connect the pieces along shortest host paths
        auto sub = induced_subgraph(g, d);
        if (is_connected(sub.graph)) break;
        auto comp_dist = bfs_distances(sub.graph, 0);
        VertexSet first_comp(n);
        for (int v = 0; v < sub.graph.vertex_count(); ++v)
            if (comp_dist[static_cast<std::size_t>(v)] != kInfiniteDistance)
                first_comp.insert(sub.to_host[static_cast<std::size_t>(v)]);
        // shortest path in g from first_comp to the rest of d
        auto from_first = bfs_distances(g, first_comp);
        int target = -1;
        for (int v = 0; v < n; ++v)
            if (d.contains(v) && !first_comp.contains(v) &&
                (target < 0 || from_first[static_cast<std::size_t>(v)] <
                                   from_first[static_cast<std::size_t>(target)]))
                target = v;
        int at = target;
        while (from_first[static_cast<std::size_t>(at)] > 0) {
            int step = -1;
            for (int w : g.neighbors(at))
                if (from_first[static_cast<std::size_t>(w)] ==
                    from_first[static_cast<std::size_t>(at)] - 1) {
                    step = w;
                    break;
                }
            d.insert(step);
            at = step;
        }
    }

    auto cert = classify_dominating_set(g, d);
    if (!cert.is_two_way_two_step || !cert.induced_connected)
        throw std::logic_error("greedy dominating set failed its own certificate");
    return cert;
}

}  // namespace propc
