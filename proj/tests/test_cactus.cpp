#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <variant>

#include "epg/cactus.hpp"
#include "epg/enumerate.hpp"
#include "epg/generators.hpp"
#include "epg/graph.hpp"
#include "epg/grid.hpp"
#include "epg/oracle.hpp"

using epg::CactusDecomposition;
using epg::Graph;
using epg::NotCactus;

namespace {

Graph friendship5() {
    return Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
}

Graph mixed7() {  // 4-cycle 1-2-7-3, bridge 1-4, triangle 4-5-6
    return Graph::from_edges(
        7, {{1, 2}, {2, 7}, {3, 7}, {1, 3}, {1, 4}, {4, 5}, {4, 6}, {5, 6}});
}

Graph star_of_triangles7() {  // two triangles and a bridge path at hub 1
    return Graph::from_edges(7, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}, {1, 6}, {6, 7}});
}

const CactusDecomposition& dec_of(const Graph& g,
                                  std::variant<CactusDecomposition, NotCactus>& store) {
    store = epg::decompose_cactus(g);
    REQUIRE(std::holds_alternative<CactusDecomposition>(store));
    return std::get<CactusDecomposition>(store);
}

bool is_cycle_in(const Graph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 3) return false;
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size()) return false;
    for (size_t i = 0; i < cyc.size(); ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    return true;
}

bool induced_matches(const Graph& host, const Graph& pat, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != pat.num_vertices()) return false;
    std::set<int> uniq(map.begin(), map.end());
    if (static_cast<int>(uniq.size()) != pat.num_vertices()) return false;
    for (int i = 1; i <= pat.num_vertices(); ++i)
        for (int j = i + 1; j <= pat.num_vertices(); ++j)
            if (pat.has_edge(i, j) != host.has_edge(map[static_cast<size_t>(i) - 1],
                                                    map[static_cast<size_t>(j) - 1]))
                return false;
    return true;
}

void check_b1m(const Graph& g) {
    std::variant<CactusDecomposition, NotCactus> store;
    const auto& dec = dec_of(g, store);
    auto rpt = epg::verify_representation(g, epg::build_b1m_cactus(g, dec));
    CHECK(rpt.ok);
    CHECK(rpt.max_bends <= 1);
    CHECK(rpt.monotonic_all);
}

void check_b0(const Graph& g) {
    std::variant<CactusDecomposition, NotCactus> store;
    const auto& dec = dec_of(g, store);
    REQUIRE_FALSE(epg::is_mc_free(g, dec).has_value());
    auto rpt = epg::verify_representation(g, epg::build_b0_cactus(g, dec));
    CHECK(rpt.ok);
    CHECK(rpt.max_bends == 0);
}

}  // namespace

TEST_CASE("decomposition of basic cacti") {
    std::variant<CactusDecomposition, NotCactus> store;

    const auto& dc = dec_of(epg::gen_cycle(5), store);
    CHECK(dc.cycles == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
    CHECK(dc.bridges.empty());

    const auto& dp = dec_of(epg::gen_path(4), store);
    CHECK(dp.cycles.empty());
    CHECK(dp.bridges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});

    const auto& dm = dec_of(mixed7(), store);
    CHECK(dm.cycles == std::vector<std::vector<int>>{{1, 2, 7, 3}, {4, 5, 6}});
    CHECK(dm.bridges == std::vector<std::pair<int, int>>{{1, 4}});

    const auto& df = dec_of(friendship5(), store);
    CHECK(df.cycles == std::vector<std::vector<int>>{{1, 2, 3}, {1, 4, 5}});

    const auto& d1 = dec_of(Graph(1), store);
    CHECK(d1.cycles.empty());
    CHECK(d1.bridges.empty());

    // Two triangles sharing one vertex inside a larger chain.
    const auto& dt = dec_of(Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}),
                            store);
    CHECK(dt.cycles == std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}});
}

TEST_CASE("non-cacti are refused with a shared-cycle witness") {
    Graph k4 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto res = epg::decompose_cactus(k4);
    REQUIRE(std::holds_alternative<NotCactus>(res));
    const auto& nc = std::get<NotCactus>(res);
    CHECK_FALSE(nc.reason.empty());
    CHECK(is_cycle_in(k4, nc.cycle_a));
    CHECK(is_cycle_in(k4, nc.cycle_b));
    std::set<int> a(nc.cycle_a.begin(), nc.cycle_a.end());
    int shared = 0;
    for (int v : nc.cycle_b) shared += a.count(v);
    CHECK(shared >= 2);

    Graph diamond = Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    auto res2 = epg::decompose_cactus(diamond);
    REQUIRE(std::holds_alternative<NotCactus>(res2));
    CHECK(is_cycle_in(diamond, std::get<NotCactus>(res2).cycle_a));
    CHECK(is_cycle_in(diamond, std::get<NotCactus>(res2).cycle_b));

    Graph disc = Graph::from_edges(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    auto res3 = epg::decompose_cactus(disc);
    REQUIRE(std::holds_alternative<NotCactus>(res3));
    CHECK(std::get<NotCactus>(res3).reason.find("disconnected") != std::string::npos);
}

TEST_CASE("obstruction detection over the cactus families") {
    std::variant<CactusDecomposition, NotCactus> store;

    auto c4 = epg::is_mc_free(epg::gen_cycle(4), dec_of(epg::gen_cycle(4), store));
    REQUIRE(c4.has_value());
    CHECK(c4->kind == epg::WitnessKind::CYCLE_GE4);
    CHECK(c4->vertex_map == std::vector<int>{1, 2, 3, 4});

    auto c7 = epg::is_mc_free(epg::gen_cycle(7), dec_of(epg::gen_cycle(7), store));
    REQUIRE(c7.has_value());
    CHECK(c7->kind == epg::WitnessKind::CYCLE_GE4);

    Graph m2 = epg::gen_m2();
    auto w2 = epg::is_mc_free(m2, dec_of(m2, store));
    REQUIRE(w2.has_value());
    CHECK(w2->kind == epg::WitnessKind::M2);
    CHECK(induced_matches(m2, epg::gen_m2(), w2->vertex_map));

    Graph m3 = epg::gen_m3();
    auto w3 = epg::is_mc_free(m3, dec_of(m3, store));
    REQUIRE(w3.has_value());
    CHECK(w3->kind == epg::WitnessKind::M3);
    CHECK(induced_matches(m3, epg::gen_m3(), w3->vertex_map));

    // The spider persists under an extra hub leaf and longer legs.
    Graph spider_plus = Graph::from_edges(8, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {1, 8}});
    auto wp = epg::is_mc_free(spider_plus, dec_of(spider_plus, store));
    REQUIRE(wp.has_value());
    CHECK(wp->kind == epg::WitnessKind::M2);
    CHECK(induced_matches(spider_plus, epg::gen_m2(), wp->vertex_map));

    for (const Graph& free : {epg::gen_path(6), friendship5(), star_of_triangles7(),
                              Graph::from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})}) {
        CHECK_FALSE(epg::is_mc_free(free, dec_of(free, store)).has_value());
    }
}

TEST_CASE("bend-free cactus construction") {
    check_b0(epg::gen_path(6));
    check_b0(Graph::from_edges(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}));
    check_b0(friendship5());
    check_b0(star_of_triangles7());
    check_b0(Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}));
    check_b0(epg::gen_cycle(3));
    check_b0(Graph(1));
    check_b0(Graph::from_edges(2, {{1, 2}}));

    std::variant<CactusDecomposition, NotCactus> store;
    CHECK_THROWS_AS(
        epg::build_b0_cactus(epg::gen_cycle(4), dec_of(epg::gen_cycle(4), store)),
        std::invalid_argument);
    CHECK_THROWS_AS(epg::build_b0_cactus(epg::gen_m2(), dec_of(epg::gen_m2(), store)),
                    std::invalid_argument);
}

TEST_CASE("monotone single-bend cactus construction") {
    for (int r = 3; r <= 10; ++r) check_b1m(epg::gen_cycle(r));
    check_b1m(epg::gen_path(1));
    check_b1m(epg::gen_path(2));
    check_b1m(epg::gen_path(7));
    check_b1m(Graph::from_edges(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}));
    check_b1m(friendship5());
    check_b1m(mixed7());
    check_b1m(star_of_triangles7());
    check_b1m(epg::gen_m2());
    check_b1m(epg::gen_m3());
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        check_b1m(epg::gen_rand_cactus(20, seed));
        check_b1m(epg::gen_rand_cactus(60, seed));
    }
}

TEST_CASE("exhaustive small cacti: classification matches the oracle") {
    epg::for_each_cactus_upto(7, [](const Graph& g) {
        std::variant<CactusDecomposition, NotCactus> store;
        const auto& dec = dec_of(g, store);
        auto w = epg::is_mc_free(g, dec);

        epg::CactusClassification cl = epg::classify_cactus(g);
        CHECK(cl.b == (w ? 1 : 0));
        CHECK(cl.bm == cl.b);
        CHECK(cl.obstruction.has_value() == w.has_value());

        CHECK((cl.b == 0) == epg::is_interval(g));

        if (!w) {
            auto rpt = epg::verify_representation(g, epg::build_b0_cactus(g, dec));
            CHECK(rpt.ok);
            CHECK(rpt.max_bends == 0);
        }
        auto rpt1 = epg::verify_representation(g, epg::build_b1m_cactus(g, dec));
        CHECK(rpt1.ok);
        CHECK(rpt1.max_bends <= 1);
        CHECK(rpt1.monotonic_all);
    });
}

TEST_CASE("cactus classification values and errors") {
    epg::CactusClassification cp = epg::classify_cactus(epg::gen_path(5));
    CHECK(cp.b == 0);
    CHECK(cp.bm == 0);
    CHECK_FALSE(cp.obstruction.has_value());

    epg::CactusClassification cc = epg::classify_cactus(epg::gen_cycle(4));
    CHECK(cc.b == 1);
    CHECK(cc.bm == 1);
    REQUIRE(cc.obstruction.has_value());
    CHECK(cc.obstruction->kind == epg::WitnessKind::CYCLE_GE4);

    epg::CactusClassification cm = epg::classify_cactus(epg::gen_m2());
    CHECK(cm.b == 1);
    REQUIRE(cm.obstruction.has_value());
    CHECK(cm.obstruction->kind == epg::WitnessKind::M2);

    CHECK(epg::classify_cactus(friendship5()).b == 0);

    Graph k4 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_THROWS_AS(epg::classify_cactus(k4), std::invalid_argument);
    Graph disc = Graph::from_edges(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(epg::classify_cactus(disc), std::invalid_argument);
}
