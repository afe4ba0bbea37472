#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <variant>

#include "epg/enumerate.hpp"
#include "epg/generators.hpp"
#include "epg/graph.hpp"
#include "epg/grid.hpp"
#include "epg/maxouterplanar.hpp"
#include "epg/oracle.hpp"

using epg::Graph;
using epg::SearchStatus;

TEST_CASE("interval recognition on named graphs") {
    CHECK(epg::is_interval(epg::gen_path(4)));
    CHECK(epg::is_interval(epg::gen_cycle(3)));
    CHECK(epg::is_interval(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}})));
    CHECK(epg::is_interval(Graph(1)));
    CHECK(epg::is_interval(Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}})));
    // Diamond and bowtie are chordal with no asteroidal triple.
    CHECK(epg::is_interval(Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})));
    CHECK(epg::is_interval(
        Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})));

    CHECK_FALSE(epg::is_interval(epg::gen_cycle(4)));
    CHECK_FALSE(epg::is_interval(epg::gen_cycle(5)));
    CHECK_FALSE(epg::is_interval(epg::gen_nsun(3)));
    CHECK_FALSE(epg::is_interval(epg::gen_m2()));
    CHECK_FALSE(epg::is_interval(epg::gen_m3()));
}

TEST_CASE("interval recognition refuses oversized inputs") {
    CHECK_THROWS_AS(epg::is_interval(epg::gen_path(11)), std::invalid_argument);
    CHECK(epg::is_interval(epg::gen_path(11), 12));
}

TEST_CASE("bounded search finds bend-free drawings exactly for interval graphs") {
    auto k3 = epg::bounded_grid_search(epg::gen_cycle(3), 0);
    REQUIRE(k3.status == SearchStatus::FOUND);
    REQUIRE(k3.rep.has_value());
    auto rpt = epg::verify_representation(epg::gen_cycle(3), *k3.rep);
    CHECK(rpt.ok);
    CHECK(rpt.max_bends == 0);
    CHECK(k3.nodes_expanded > 0);
    CHECK(k3.bound == 6);

    CHECK(epg::bounded_grid_search(epg::gen_path(4), 0).status == SearchStatus::FOUND);
    CHECK(epg::bounded_grid_search(epg::gen_cycle(4), 0).status ==
          SearchStatus::NONE_WITHIN_BOUND);
}

TEST_CASE("bounded search at one bend") {
    Graph c4 = epg::gen_cycle(4);
    auto r = epg::bounded_grid_search(c4, 1);
    REQUIRE(r.status == SearchStatus::FOUND);
    auto rpt = epg::verify_representation(c4, *r.rep);
    CHECK(rpt.ok);
    CHECK(rpt.max_bends <= 1);

    auto rm = epg::bounded_grid_search(c4, 1, true);
    REQUIRE(rm.status == SearchStatus::FOUND);
    auto rptm = epg::verify_representation(c4, *rm.rep);
    CHECK(rptm.ok);
    CHECK(rptm.max_bends <= 1);
    CHECK(rptm.monotonic_all);

    CHECK(epg::bounded_grid_search(epg::gen_cycle(5), 1).status == SearchStatus::FOUND);
}

TEST_CASE("bounded search respects its budget") {
    auto r = epg::bounded_grid_search(epg::gen_cycle(4), 1, false, 0, 3);
    CHECK(r.status == SearchStatus::BUDGET_EXCEEDED);
    CHECK_FALSE(r.rep.has_value());
}

TEST_CASE("bounded search handles disconnected input and isolated vertices") {
    Graph two = Graph::from_edges(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    auto r = epg::bounded_grid_search(two, 0);
    REQUIRE(r.status == SearchStatus::FOUND);
    CHECK(epg::verify_representation(two, *r.rep).ok);

    auto lone = epg::bounded_grid_search(Graph(1), 0);
    REQUIRE(lone.status == SearchStatus::FOUND);
    CHECK(epg::verify_representation(Graph(1), *lone.rep).ok);

    Graph mix(4);  // triangle plus isolated vertex
    mix = Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}});
    auto rm = epg::bounded_grid_search(mix, 0);
    REQUIRE(rm.status == SearchStatus::FOUND);
    CHECK(epg::verify_representation(mix, *rm.rep).ok);
}

TEST_CASE("search agrees with interval recognition on all small connected graphs") {
    for (int n = 1; n <= 5; ++n)
        epg::for_each_connected_graph(n, [](const Graph& g) {
            bool iv = epg::is_interval(g);
            auto r = epg::bounded_grid_search(g, 0);
            REQUIRE(r.status != SearchStatus::BUDGET_EXCEEDED);
            CHECK((r.status == SearchStatus::FOUND) == iv);
            if (r.rep) {
                auto rpt = epg::verify_representation(g, *r.rep);
                CHECK(rpt.ok);
                CHECK(rpt.max_bends == 0);
            }
        });
}

TEST_CASE("direct single-bend rule agrees with the pairing procedure") {
    CHECK(epg::m_free_direct(epg::gen_nsun(3)));
    for (int n = 4; n <= 8; ++n)
        epg::for_each_triangulation(n, [](const Graph& g) {
            auto res = epg::compute_assignment(g, epg::almost_dual(g));
            CHECK(std::holds_alternative<epg::Assignment>(res) == epg::m_free_direct(g));
        });
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = epg::gen_rand_maximal_outerplanar(30, seed);
        auto res = epg::compute_assignment(g, epg::almost_dual(g));
        CHECK(std::holds_alternative<epg::Assignment>(res) == epg::m_free_direct(g));
    }
}

TEST_CASE("exact bend numbers of tiny graphs") {
    auto k3 = epg::bend_number_exact(epg::gen_cycle(3));
    CHECK(k3.b == 0);
    CHECK(k3.bm == 0);

    auto p4 = epg::bend_number_exact(epg::gen_path(4));
    CHECK(p4.b == 0);
    CHECK(p4.bm == 0);

    auto c4 = epg::bend_number_exact(epg::gen_cycle(4));
    CHECK(c4.b == 1);
    CHECK(c4.bm == 1);

    Graph diamond = Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    auto d = epg::bend_number_exact(diamond);
    CHECK(d.b == 0);
    CHECK(d.bm == 0);

    auto net = epg::bend_number_exact(epg::gen_m3());
    CHECK(net.b == 1);
    CHECK(net.bm == 1);
}

TEST_CASE("exact bend numbers report budget exhaustion as unknown") {
    auto r = epg::bend_number_exact(epg::gen_nsun(3), 500);
    CHECK_FALSE(r.b.has_value());
    CHECK_FALSE(r.bm.has_value());
    CHECK(r.nodes_expanded > 0);
}
