#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "propc/campaigns.hpp"

#include "oracles.hpp"

using namespace propc;

TEST_CASE("labeled connected enumeration is complete and duplicate-free") {
    CHECK(enumerate_connected_graphs(1).size() == 1);
    CHECK(enumerate_connected_graphs(2).size() == 1);
    CHECK(enumerate_connected_graphs(3).size() == 4);
    CHECK(enumerate_connected_graphs(4).size() == 38);

    for (int n = 1; n <= 5; ++n) {
        auto graphs = enumerate_connected_graphs(n);
        CHECK(graphs.size() == static_cast<std::size_t>(oracle::count_connected_labeled_graphs(n)));
        std::set<std::string> distinct;
        for (const auto& g : graphs) {
            CHECK(g.vertex_count() == n);
            CHECK(is_connected(g));
            distinct.insert(emit_graph6(g));
        }
        CHECK(distinct.size() == graphs.size());
    }

    CHECK_THROWS_AS(enumerate_connected_graphs(0), argument_error);
    CHECK_THROWS_AS(enumerate_connected_graphs(7), budget_error);
}

TEST_CASE("the claim registry knows its ids") {
    CHECK(campaign_ids().size() == 15);
    try {
        run_campaign("T9.9");
        FAIL("unknown id accepted");
    } catch (const argument_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("T9.9") != std::string::npos);
        CHECK(msg.find("C4.2iii") != std::string::npos);
    }
}

TEST_CASE("every registered campaign passes on a reduced corpus") {
    auto expect_pass = [](const std::string& id, CampaignOptions opts) {
        CampaignReport r = run_campaign(id, opts);
        CAPTURE(id, r.corpus);
        for (const auto& v : r.violations) { CAPTURE(v.graph6, v.detail); }
        CHECK(r.theorem == id);
        CHECK(r.instances > 0);
        CHECK(r.violations.empty());
        CHECK(r.pass);
        CHECK(r.wall_ms >= 0.0);
        CHECK(r.max_instance_ms >= 0.0);
        CHECK(parse_graph6(r.max_instance_graph6).vertex_count() > 0);
        return r;
    };

    CampaignOptions small;

    expect_pass("L2.1", small);

    small = {};
    small.count = 40;
    small.n = 6;
    expect_pass("L2.2", small);

    small = {};
    small.n = 5;
    expect_pass("L2.3", small);

    small = {};
    small.count = 120;
    small.n = 8;
    expect_pass("P1", small);

    small = {};
    small.count = 60;
    small.n = 6;
    expect_pass("T3.1", small);
    expect_pass("T4.1", small);

    small = {};
    small.n = 5;
    expect_pass("C3.1", small);

    small = {};
    small.count = 40;
    expect_pass("C3.2", small);

    small = {};
    small.count = 80;
    small.n = 7;
    expect_pass("L2.4", small);

    small = {};
    small.n = 5;
    expect_pass("C3.3", small);

    small = {};
    small.count = 20;
    expect_pass("C4.2i", small);
    expect_pass("C4.2ii", small);
    expect_pass("C4.2iii", small);
    expect_pass("C4.2iv", small);
    expect_pass("T4.2", small);
}

TEST_CASE("campaign verdicts are deterministic for fixed corpus and budget") {
    CampaignOptions opts;
    opts.count = 25;
    opts.n = 6;
    CampaignReport a = run_campaign("T3.1", opts);
    CampaignReport b = run_campaign("T3.1", opts);
    CHECK(a.theorem == b.theorem);
    CHECK(a.corpus == b.corpus);
    CHECK(a.instances == b.instances);
    CHECK(a.pass == b.pass);
    CHECK(a.violations.size() == b.violations.size());

    opts.seed = 99;
    CampaignReport c = run_campaign("L2.4", opts);
    CHECK(c.pass);
}

TEST_CASE("external corpora are filtered to each claim's hypothesis") {
    CampaignOptions opts;
    opts.corpus = std::vector<Graph>{path_graph(5), complete_graph(4), star_graph(3),
                                     cycle_graph(5)};

    CampaignReport paths = run_campaign("L2.1", opts);
    CHECK(paths.instances == 1);  // only P5 is path-shaped
    CHECK(paths.pass);

    CampaignReport trees = run_campaign("P1", opts);
    CHECK(trees.instances == 2);  // P5 and the star
    CHECK(trees.pass);

    CampaignReport degree = run_campaign("C3.3", opts);
    CHECK(degree.instances == 4);  // every corpus graph has at least 4 vertices
    CHECK(degree.pass);

    opts.corpus = std::vector<Graph>{cycle_graph(5)};
    CampaignReport vacuous = run_campaign("P1", opts);
    CHECK(vacuous.instances == 0);
    CHECK(vacuous.pass);

    CHECK_THROWS_AS(run_campaign("C3.2", opts), argument_error);
    CHECK_THROWS_AS(run_campaign("C4.2i", opts), argument_error);
    CHECK_THROWS_AS(run_campaign("T4.2", opts), argument_error);
}

TEST_CASE("budget exhaustion surfaces as an honest violation") {
    CampaignOptions opts;
    opts.corpus = std::vector<Graph>{cycle_graph(5)};
    opts.budget.subset_vertex_cap = 2;
    CampaignReport r = run_campaign("T3.1", opts);
    CHECK(r.instances == 1);
    CHECK_FALSE(r.pass);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].detail.find("budget") != std::string::npos);
    CHECK(parse_graph6(r.violations[0].graph6).vertex_count() == 5);
}

TEST_CASE("reports serialize to the documented JSON shape") {
    CampaignOptions opts;
    opts.count = 10;
    opts.n = 5;
    CampaignReport r = run_campaign("L2.4", opts);
    nlohmann::json j = report_to_json(r);
    CHECK(j["theorem"] == "L2.4");
    CHECK(j["instances"] == r.instances);
    CHECK(j["pass"] == true);
    CHECK(j["violations"].is_array());
    CHECK(j["violations"].empty());
    CHECK(j["timing"]["wall_ms"].is_number());
    CHECK(j["timing"]["max_instance_graph6"].is_string());
    CHECK(j["corpus"].is_string());

    opts.corpus = std::vector<Graph>{cycle_graph(5)};
    opts.budget.subset_vertex_cap = 2;
    nlohmann::json bad = report_to_json(run_campaign("T3.1", opts));
    CHECK(bad["pass"] == false);
    REQUIRE(bad["violations"].size() == 1);
    CHECK(bad["violations"][0]["graph6"] == "Dhc");
    CHECK(bad["violations"][0]["detail"].is_string());
}
