#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "propc/domination.hpp"

using propc::DominationKind;
using propc::Graph;
using propc::VertexSet;

namespace {
std::vector<char> mask_of(const VertexSet& d) {
    std::vector<char> in(static_cast<std::size_t>(d.universe()), 0);
    d.for_each([&](int v) { in[static_cast<std::size_t>(v)] = 1; });
    return in;
}
}  // namespace

TEST_CASE("certificate fields match the definitions") {
    Graph c5 = propc::cycle_graph(5);
    auto single = propc::classify_dominating_set(c5, VertexSet::of(5, {0}));
    CHECK(single.size == 1);
    CHECK(single.k_step_reach == 2);
    CHECK_FALSE(single.is_dominating);
    CHECK(single.is_two_step_dominating);
    CHECK(single.contains_all_pendants);
    // the two far vertices each keep only one neighbor adjacent to the set
    CHECK_FALSE(single.second_neighbor_support);
    CHECK_FALSE(single.is_two_way_two_step);
    CHECK(single.induced_connected);

    Graph c4 = propc::cycle_graph(4);
    auto corner = propc::classify_dominating_set(c4, VertexSet::of(4, {0}));
    CHECK(corner.is_two_way_two_step);
    CHECK_FALSE(corner.is_two_way);  // vertex 2 sits at distance 2

    Graph p7 = propc::path_graph(7);
    auto mid = propc::classify_dominating_set(p7, VertexSet::of(7, {1, 5}));
    CHECK(mid.is_two_step_dominating);
    CHECK_FALSE(mid.contains_all_pendants);
    CHECK_FALSE(mid.is_two_way);
    CHECK_FALSE(mid.induced_connected);

    CHECK_THROWS_AS(propc::classify_dominating_set(c5, VertexSet(5)), propc::argument_error);
    CHECK_THROWS_AS(propc::classify_dominating_set(c5, VertexSet::of(4, {0})),
                    propc::argument_error);
}

TEST_CASE("certificate agrees with the definitional oracle on random sets") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = oracle::random_connected_graph(4 + static_cast<int>(rng() % 5), 0.4, rng);
        int n = g.vertex_count();
        VertexSet d(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0) d.insert(v);
        if (d.empty()) d.insert(static_cast<int>(rng() % n));
        auto in = mask_of(d);
        auto cert = propc::classify_dominating_set(g, d);
        REQUIRE(cert.is_dominating == oracle::set_dominates(g, in));
        REQUIRE(cert.is_two_step_dominating == oracle::set_two_step_dominates(g, in));
        REQUIRE(cert.contains_all_pendants == oracle::set_contains_all_pendants(g, in));
        REQUIRE(cert.is_two_way == oracle::set_is_two_way_dominating(g, in));
        REQUIRE(cert.is_two_way_two_step == oracle::set_is_two_way_two_step_dominating(g, in));
        REQUIRE(cert.induced_connected == oracle::set_induces_connected(g, in));
    }
}

TEST_CASE("exact minimum sizes match brute force") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_connected_graph(4 + static_cast<int>(rng() % 4), 0.45, rng);
        auto tw = propc::minimum_connected_dominating_sets(g, DominationKind::two_way);
        REQUIRE(tw.size == oracle::brute_min_connected_two_way_dominating(g));
        auto ts = propc::minimum_connected_dominating_sets(g, DominationKind::two_way_two_step);
        REQUIRE(ts.size == oracle::brute_min_connected_two_way_two_step_dominating(g));
        for (const auto& d : tw.sets) {
            auto cert = propc::classify_dominating_set(g, d);
            REQUIRE(cert.is_two_way);
            REQUIRE(cert.induced_connected);
            REQUIRE(d.count() == tw.size);
        }
        for (const auto& d : ts.sets) {
            auto cert = propc::classify_dominating_set(g, d);
            REQUIRE(cert.is_two_way_two_step);
            REQUIRE(cert.induced_connected);
        }
    }
}

TEST_CASE("every minimum set is found, none twice") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_connected_graph(6, 0.4, rng);
        auto result = propc::minimum_connected_dominating_sets(g, DominationKind::two_way_two_step);
        int expected = 0;
        for (unsigned mask = 1; mask < (1u << 6); ++mask) {
            if (std::popcount(mask) != result.size) continue;
            std::vector<char> in(6, 0);
            for (int v = 0; v < 6; ++v)
                if (mask & (1u << v)) in[static_cast<std::size_t>(v)] = 1;
            if (oracle::set_is_two_way_two_step_dominating(g, in) &&
                oracle::set_induces_connected(g, in))
                ++expected;
        }
        REQUIRE(static_cast<int>(result.sets.size()) == expected);
        for (std::size_t i = 1; i < result.sets.size(); ++i)
            REQUIRE(result.sets[i - 1].to_vector() < result.sets[i].to_vector());
    }
}

TEST_CASE("named minima") {
    CHECK(propc::minimum_connected_dominating_sets(propc::cycle_graph(4),
                                                   DominationKind::two_way_two_step).size == 1);
    CHECK(propc::minimum_connected_dominating_sets(propc::cycle_graph(5),
                                                   DominationKind::two_way_two_step).size == 2);
    CHECK(propc::minimum_connected_dominating_sets(propc::cycle_graph(4),
                                                   DominationKind::two_way).size == 2);
    CHECK(propc::minimum_connected_dominating_sets(propc::cycle_graph(6),
                                                   DominationKind::two_way_two_step).size == 3);
    // pendants force the whole path in
    CHECK(propc::minimum_connected_dominating_sets(propc::path_graph(7),
                                                   DominationKind::two_way_two_step).size == 7);
    CHECK(propc::min_connected_two_way_two_step_dominating(propc::complete_graph(5))
              .d.to_vector() == std::vector<int>{0});
    // a connected triple covers only eight of the ten vertices, so four it is
    CHECK(propc::min_connected_two_way_dominating(propc::petersen_graph()).size == 4);
}

TEST_CASE("greedy builder always returns a valid certificate") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_connected_graph(3 + static_cast<int>(rng() % 8), 0.35, rng);
        auto cert = propc::greedy_two_step_dominating(g);
        REQUIRE(cert.is_two_way_two_step);
        REQUIRE(cert.induced_connected);
        REQUIRE(cert.size == cert.d.count());
    }
    CHECK(propc::greedy_two_step_dominating(propc::complete_graph(5)).size == 1);
    CHECK(propc::greedy_two_step_dominating(propc::petersen_graph()).size <= 5);
    CHECK(propc::greedy_two_step_dominating(propc::path_graph(7)).size == 7);

    // the size-bound record: K5 meets 3n/(δ+1)−2 = 1 with equality
    CHECK(propc::greedy_two_step_dominating(propc::complete_graph(5)).meets_size_bound);
    CHECK(propc::min_connected_two_way_two_step_dominating(propc::cycle_graph(6)).meets_size_bound);
}

TEST_CASE("domination search guards") {
    CHECK_THROWS_AS(propc::minimum_connected_dominating_sets(Graph(4, {{0, 1}, {2, 3}}),
                                                             DominationKind::two_way),
                    propc::disconnected_error);
    propc::SearchBudget b;
    b.subset_vertex_cap = 5;
    CHECK_THROWS_AS(propc::minimum_connected_dominating_sets(propc::cycle_graph(6),
                                                             DominationKind::two_way, b),
                    propc::budget_error);
}
