#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "propc/classes.hpp"
#include "propc/constructions.hpp"
#include "propc/domination.hpp"
#include "propc/exact.hpp"
#include "oracles.hpp"

using propc::ArcRepresentation;
using propc::ConstructionMethod;
using propc::ConstructionOutcome;
using propc::DominationCertificate;
using propc::Graph;
using propc::IntervalRepresentation;
using propc::Rational;
using propc::VertexSet;

namespace {

void check_outcome(const Graph& g, const ConstructionOutcome& out) {
    CHECK(out.verified);
    CHECK(out.colors_used <= out.guarantee);
    CHECK(out.coloring.palette().back() <= out.guarantee);
    CHECK(propc::is_proper_path_coloring(g, out.coloring).pass);
}

DominationCertificate certify(const Graph& g, std::initializer_list<int> members) {
    return propc::classify_dominating_set(g, VertexSet::of(g.vertex_count(), members));
}

Graph chain_fixture() {
    propc::ChainSpec spec;
    spec.a_neighbors = {{0, 1}, {0, 1, 2}, {0, 1, 2}};
    spec.b_count = 3;
    return realize(spec);
}

}  // namespace

TEST_CASE("tree coloring spends exactly the maximum degree") {
    auto p5 = propc::color_tree(propc::path_graph(5));
    check_outcome(propc::path_graph(5), p5);
    CHECK(p5.colors_used == 2);
    CHECK(p5.method == ConstructionMethod::direct);

    auto star = propc::color_tree(propc::star_graph(4));
    CHECK(star.colors_used == 4);
    CHECK(star.guarantee == 4);

    Graph double_star(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    auto ds = propc::color_tree(double_star);
    check_outcome(double_star, ds);
    CHECK(ds.colors_used == 3);

    CHECK_THROWS_AS(propc::color_tree(propc::cycle_graph(4)), propc::argument_error);
    CHECK_THROWS_AS(propc::color_tree(Graph(1, {})), propc::argument_error);

    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph t = propc::random_tree(n, rng);
        auto out = propc::color_tree(t);
        CAPTURE(trial, n);
        check_outcome(t, out);
        CHECK(out.colors_used == propc::max_degree(t));
        if (trial < 10) CHECK(propc::pc_exact(t).value == out.colors_used);
    }
}

TEST_CASE("traceable coloring alternates along the spanning path") {
    std::vector<int> around{0, 1, 2, 3, 4, 5};
    auto c6 = propc::color_traceable(propc::cycle_graph(6), around);
    check_outcome(propc::cycle_graph(6), c6);
    CHECK(c6.colors_used == 2);

    auto p4 = propc::color_traceable(propc::path_graph(4), {0, 1, 2, 3});
    CHECK(p4.colors_used == 2);
    CHECK(p4.method == ConstructionMethod::direct);

    Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto ham = propc::hamiltonian_path(k4_minus);
    REQUIRE(ham.has_value());
    auto out = propc::color_traceable(k4_minus, *ham);
    check_outcome(k4_minus, out);
    CHECK(out.colors_used == 2);

    CHECK_THROWS_AS(propc::color_traceable(propc::complete_graph(4), {0, 1, 2, 3}),
                    propc::argument_error);
    CHECK_THROWS_AS(propc::color_traceable(propc::cycle_graph(6), {0, 1, 2, 3, 4}),
                    propc::argument_error);
    CHECK_THROWS_AS(propc::color_traceable(propc::cycle_graph(6), {0, 1, 2, 3, 5, 4}),
                    propc::argument_error);
    CHECK_THROWS_AS(propc::color_traceable(propc::cycle_graph(6), {0, 1, 2, 3, 4, 4}),
                    propc::argument_error);
}

TEST_CASE("two-step dominating construction meets its budget") {
    Graph chain = chain_fixture();
    auto out = propc::color_from_two_step_dominating(chain, certify(chain, {3}));
    check_outcome(chain, out);
    CHECK(out.guarantee == 2);
    CHECK(out.colors_used <= 2);

    Graph c4 = propc::cycle_graph(4);
    auto diam2 = propc::color_from_two_step_dominating(c4, certify(c4, {0}));
    check_outcome(c4, diam2);
    CHECK(diam2.guarantee == 2);
    CHECK(diam2.colors_used == 2);

    Graph pet = propc::petersen_graph();
    VertexSet all = VertexSet::full(10);
    auto everything = propc::color_from_two_step_dominating(pet, propc::classify_dominating_set(pet, all));
    check_outcome(pet, everything);
    CHECK(everything.guarantee == propc::pc_exact(pet).value + 2);
    CHECK(everything.colors_used == propc::pc_exact(pet).value);
    CHECK(everything.method == ConstructionMethod::direct);

    Graph p5 = propc::path_graph(5);
    CHECK_THROWS_AS(propc::color_from_two_step_dominating(p5, certify(p5, {0})),
                    propc::argument_error);

    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_connected_graph(n, 0.45, rng);
        auto cert = propc::min_connected_two_way_two_step_dominating(g);
        auto res = propc::color_from_two_step_dominating(g, cert);
        CAPTURE(trial, n);
        check_outcome(g, res);
        CHECK(propc::pc_exact(g).value <= res.guarantee);
    }
}

TEST_CASE("two-way dominating construction meets its budget") {
    propc::ThresholdSpec spec;
    spec.weights = {Rational(5), Rational(4), Rational(4), Rational(2), Rational(2)};
    spec.threshold = Rational(6);
    Graph thr = realize(spec);
    REQUIRE(propc::min_degree(thr) >= 2);
    REQUIRE_FALSE(propc::is_complete(thr));
    int hub = propc::max_weight_dominating_vertex(spec);
    auto out = propc::color_from_dominating(thr, certify(thr, {hub}));
    check_outcome(thr, out);
    CHECK(out.guarantee == 2);
    CHECK(out.colors_used == 2);

    IntervalRepresentation spiny;
    for (int j = 0; j < 3; ++j) {
        spiny.intervals.emplace_back(Rational(j), Rational(j + 1));
        spiny.intervals.emplace_back(Rational(j) + Rational(1, 5), Rational(j) + Rational(2, 5));
        spiny.intervals.emplace_back(Rational(j) + Rational(3, 10), Rational(j) + Rational(1, 2));
    }
    Graph host = realize(spiny);
    auto path = propc::dominating_path_interval(spiny);
    VertexSet d(host.vertex_count());
    for (int v : path) d.insert(v);
    auto from_path = propc::color_from_dominating(host, propc::classify_dominating_set(host, d));
    check_outcome(host, from_path);
    CHECK(from_path.guarantee == 4);

    Graph k5 = propc::complete_graph(5);
    auto trivial = propc::color_from_dominating(k5, certify(k5, {0}));
    check_outcome(k5, trivial);
    CHECK(trivial.colors_used == 1);
    CHECK(trivial.method == ConstructionMethod::direct);

    Graph p5 = propc::path_graph(5);
    CHECK_THROWS_AS(propc::color_from_dominating(p5, certify(p5, {2})), propc::argument_error);

    std::mt19937_64 rng(616);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_connected_graph(n, 0.45, rng);
        auto cert = propc::min_connected_two_way_dominating(g);
        auto res = propc::color_from_dominating(g, cert);
        CAPTURE(trial, n);
        check_outcome(g, res);
        CHECK(propc::pc_exact(g).value <= res.guarantee);
    }
}

TEST_CASE("interval construction stays within three colors") {
    IntervalRepresentation fat;
    for (int i = 0; i < 6; ++i)
        fat.intervals.emplace_back(Rational(i, 2), Rational(i, 2) + Rational(1));
    Graph fat_g = realize(fat);
    REQUIRE(propc::min_degree(fat_g) >= 2);
    auto out = propc::color_interval(fat_g, fat);
    check_outcome(fat_g, out);
    CHECK(out.guarantee == 3);
    CHECK(propc::pc_exact(fat_g).value <= 3);

    for (int t : {2, 3}) {
        auto member = propc::sharpness_family_interval(t);
        auto res = propc::color_interval(member.graph, member.rep);
        CAPTURE(t);
        check_outcome(member.graph, res);
        CHECK(res.colors_used == 3);
    }

    IntervalRepresentation triangle;
    triangle.intervals = {{Rational(0), Rational(1)},
                          {Rational(0), Rational(1)},
                          {Rational(0), Rational(1)}};
    CHECK_THROWS_AS(propc::color_interval(realize(triangle), triangle), propc::argument_error);

    IntervalRepresentation p5 = [] {
        IntervalRepresentation rep;
        for (int i = 0; i < 5; ++i) rep.intervals.emplace_back(Rational(i), Rational(i + 1));
        return rep;
    }();
    CHECK_THROWS_AS(propc::color_interval(realize(p5), p5), propc::argument_error);
    CHECK_THROWS_AS(propc::color_interval(propc::cycle_graph(5), p5), propc::argument_error);

    std::mt19937_64 rng(717);
    propc::GeneratorOptions opts;
    opts.require_min_degree_two = true;
    opts.require_non_complete = true;
    opts.max_edges = 15;
    for (int trial = 0; trial < 30; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        auto inst = propc::random_interval_instance(n, rng, opts);
        auto res = propc::color_interval(inst.graph, inst.rep);
        CAPTURE(trial, n);
        check_outcome(inst.graph, res);
        if (trial < 10) CHECK(propc::pc_exact(inst.graph).value <= 3);
    }
}

TEST_CASE("circular-arc construction stays within three colors") {
    ArcRepresentation c6;
    for (int i = 0; i < 6; ++i)
        c6.arcs.emplace_back(Rational(i, 6), Rational(i, 6) + Rational(1, 4));
    auto even = propc::color_circular_arc(realize(c6), c6);
    check_outcome(realize(c6), even);
    CHECK(even.colors_used == 2);
    CHECK(even.method == ConstructionMethod::direct);

    ArcRepresentation c5;
    for (int i = 0; i < 5; ++i)
        c5.arcs.emplace_back(Rational(i, 5), Rational(i, 5) + Rational(3, 10));
    auto odd = propc::color_circular_arc(realize(c5), c5);
    check_outcome(realize(c5), odd);
    CHECK(odd.colors_used <= 3);
    CHECK(odd.method == ConstructionMethod::direct);

    // C7 spine covering the circle, a private triangle hanging off each
    // spine vertex; too many edges for the fallback, so the direct scheme
    // must land
    ArcRepresentation spiky;
    for (int j = 0; j < 7; ++j)
        spiky.arcs.emplace_back(Rational(j, 7), Rational(j, 7) + Rational(5, 28));
    for (int j = 0; j < 7; ++j) {
        spiky.arcs.emplace_back(Rational(j, 7) + Rational(8, 112), Rational(j, 7) + Rational(10, 112));
        spiky.arcs.emplace_back(Rational(j, 7) + Rational(9, 112), Rational(j, 7) + Rational(11, 112));
    }
    Graph spiky_g = realize(spiky);
    REQUIRE(spiky_g.vertex_count() == 21);
    REQUIRE(spiky_g.edge_count() == 28);
    REQUIRE(propc::min_degree(spiky_g) == 2);
    auto big = propc::color_circular_arc(spiky_g, spiky);
    check_outcome(spiky_g, big);
    CHECK(big.method == ConstructionMethod::direct);

    ArcRepresentation gappy;
    gappy.arcs = {{Rational(0), Rational(1, 4)},
                  {Rational(1, 5), Rational(2, 5)},
                  {Rational(1, 10), Rational(3, 10)}};
    CHECK_THROWS_AS(propc::color_circular_arc(realize(gappy), gappy), propc::argument_error);

    std::mt19937_64 rng(818);
    propc::GeneratorOptions opts;
    opts.require_min_degree_two = true;
    opts.require_non_complete = true;
    opts.max_edges = 15;
    for (int trial = 0; trial < 15; ++trial) {
        auto inst = propc::random_arc_instance(7, rng, opts, true);
        auto res = propc::color_circular_arc(inst.graph, inst.rep);
        CAPTURE(trial);
        check_outcome(inst.graph, res);
        if (trial < 5) CHECK(propc::pc_exact(inst.graph).value <= 3);
    }
}
