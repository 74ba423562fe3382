#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bss/domains/pancake.hpp"
#include "bss/domains/stp.hpp"
#include "bss/oracle.hpp"
#include "bss/search.hpp"
#include "graph_domain.hpp"

using namespace bss;
using bss::testing::GraphDomain;

namespace {

std::vector<Algorithm> all_algorithms() {
    return {Algorithm::WAstar, Algorithm::BWA, Algorithm::WBS, Algorithm::WMM, Algorithm::WBAE};
}

GraphDomain line_graph(std::size_t n, Cost edge = 1) {
    GraphDomain g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, edge);
    // exact heuristics toward goal n-1 and start 0
    for (std::size_t i = 0; i < n; ++i)
        g.set_h(i, static_cast<Cost>(n - 1 - i) * edge, static_cast<Cost>(i) * edge);
    return g;
}

} // namespace

TEST_CASE("identity instance: zero cost, zero expansions, singleton path") {
    GraphDomain g = line_graph(3);
    for (Algorithm alg : all_algorithms()) {
        SearchConfig cfg = make_config(alg, Rational(2), Rational(1));
        SearchResult r = run_search(cfg, g, g.instance(1, 1));
        REQUIRE(r.status == SearchStatus::Solved);
        CHECK(r.cost == Cost{0});
        CHECK(r.expansions_f + r.expansions_b == 0);
        CHECK(r.path == std::vector<PackedState>{GraphDomain::pack(1)});
    }
}

TEST_CASE("line graph is solved exactly by every algorithm at W=1") {
    GraphDomain g = line_graph(6);
    for (Algorithm alg : all_algorithms()) {
        SearchConfig cfg = make_config(alg, Rational(1), Rational(1));
        cfg.check_invariants = true;
        SearchResult r = run_search(cfg, g, g.instance(0, 5));
        REQUIRE(r.status == SearchStatus::Solved);
        CHECK(r.cost == Cost{5});
        CHECK(r.path.size() == 6);
        CHECK(path_cost(g, r.path) == 5);
        CHECK(r.priority_bound_violations == 0);
        CHECK(r.reexpansions == 0);
    }
}

TEST_CASE("unsolvable: disconnected component drains an open list") {
    GraphDomain g(4);
    g.add_edge(0, 1, 1);
    g.add_edge(2, 3, 1);
    for (Algorithm alg : all_algorithms()) {
        SearchConfig cfg = make_config(alg, Rational(2), Rational(0));
        SearchResult r = run_search(cfg, g, g.instance(0, 3));
        CHECK(r.status == SearchStatus::Unsolvable);
        CHECK(!r.cost.has_value());
        CHECK(r.path.empty());
    }
}

TEST_CASE("invalid configuration is rejected") {
    GraphDomain g = line_graph(3);
    SearchConfig cfg = make_config(Algorithm::WBAE, Rational(2), Rational(3));
    CHECK_THROWS_AS(run_search(cfg, g, g.instance(0, 2)), std::invalid_argument);
    cfg = make_config(Algorithm::WBAE, Rational(1, 2), Rational(0));
    CHECK_THROWS_AS(run_search(cfg, g, g.instance(0, 2)), std::invalid_argument);
}

TEST_CASE("expansion updates U from the opposite frontier") {
    // Diamond: 0 -(4)- 1 -(5)- 3, 0 -(2)- 2 -(7)- 3; zero heuristics force
    // uniform behavior.
    GraphDomain g(4);
    g.add_edge(0, 1, 4);
    g.add_edge(1, 3, 5);
    g.add_edge(0, 2, 2);
    g.add_edge(2, 3, 7);

    SearchConfig cfg = make_config(Algorithm::BWA, Rational(1), Rational(0));
    BiSearch search(cfg, g, g.instance(0, 3));
    CHECK(!search.has_incumbent());
    search.expand_best(Dir::F);   // expands vertex 0: generates 1 (g=4) and 2 (g=2)
    CHECK(search.stats().generated == 2);
    CHECK(!search.has_incumbent());
    search.expand_best(Dir::B);   // expands vertex 3: generates 1 (g_B=5), 2 (g_B=7)
    // meeting: min(4+5, 2+7) = 9
    CHECK(search.has_incumbent());
    CHECK(search.incumbent() == 9);
}

TEST_CASE("closed successors are skipped but still counted as generated") {
    GraphDomain g = line_graph(4);
    SearchConfig cfg = make_config(Algorithm::WAstar, Rational(1), Rational(0));
    BiSearch search(cfg, g, g.instance(0, 3));
    search.expand_best(Dir::F);                 // expand 0, generate 1
    CHECK(search.stats().generated == 1);
    search.expand_best(Dir::F);                 // expand 1, generate 0 (closed) and 2
    CHECK(search.stats().generated == 3);
    CHECK(search.frontier(Dir::F).find(GraphDomain::pack(0))->status == NodeStatus::Closed);
    CHECK(search.frontier(Dir::F).open_count() == 1);   // only vertex 2
    CHECK(search.stats().reexpansions == 0);
}

TEST_CASE("g improvements re-key and re-parent open nodes") {
    // 0 -(10)- 2 and 0 -(1)- 1 -(2)- 2: vertex 2 first reached at g=10, then
    // improved to 3 through vertex 1.
    GraphDomain g(4);
    g.add_edge(0, 2, 10);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 2);
    g.add_edge(2, 3, 1);
    for (std::size_t v = 0; v < 4; ++v) g.set_h(v, 0, 0);

    SearchConfig cfg = make_config(Algorithm::WAstar, Rational(1), Rational(0));
    BiSearch search(cfg, g, g.instance(0, 3));
    search.expand_best(Dir::F);   // expand 0
    const NodeRec* two = search.frontier(Dir::F).find(GraphDomain::pack(2));
    REQUIRE(two != nullptr);
    CHECK(two->g == 10);
    search.expand_best(Dir::F);   // expand 1 (g=1, key 1): improves 2 to g=3
    CHECK(two->g == 3);
    CHECK(two->parent == GraphDomain::pack(1));
    SearchResult r = search.run();
    CHECK(r.cost == Cost{4});
    CHECK(r.path.size() == 4);
}

TEST_CASE("bounded suboptimality on random graphs, all algorithms x W x variants") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 12 + rng() % 20;
        GraphDomain g(n);
        // random connected graph with consistent heuristics (h = 0 is
        // trivially consistent; exact-distance heuristics come from domains)
        for (std::size_t v = 1; v < n; ++v) g.add_edge(v, rng() % v, 1 + rng() % 9);
        for (std::size_t e = 0; e < n; ++e) {
            std::size_t a = rng() % n, b = rng() % n;
            if (a != b) g.add_edge(a, b, 1 + rng() % 9);
        }
        DomainInstance inst = g.instance(0, n - 1);
        OracleResult oracle = optimal_cost(g, inst, 0);
        REQUIRE(oracle.status == OracleResult::Status::Solved);
        Cost cstar = *oracle.cost;

        for (Algorithm alg : all_algorithms()) {
            for (const Rational& w : {Rational(1), Rational(3, 2), Rational(5)}) {
                for (BoundVariant bv : {BoundVariant::Base, BoundVariant::Gcd,
                                        BoundVariant::Alb, BoundVariant::AlbGcd}) {
                    SearchConfig cfg = make_config(alg, w, rational_min(Rational(1), w));
                    cfg.bound_variant = bv;
                    cfg.check_invariants = true;
                    cfg.bound_safety_reference = w * Rational(cstar);
                    SearchResult r = run_search(cfg, g, inst);
                    REQUIRE(r.status == SearchStatus::Solved);
                    CHECK(verify_bound(*r.cost, w, cstar));
                    CHECK(path_cost(g, r.path) == *r.cost);
                    CHECK(r.priority_bound_violations == 0);
                    CHECK(r.reexpansions == 0);
                    CHECK(r.alb_dominance_violations == 0);
                    CHECK(r.bound_safety_violations == 0);
                    if (w == Rational(1)) CHECK(*r.cost == cstar);
                }
            }
        }
    }
}

TEST_CASE("pancake-4: single flip instance solved with path") {
    PancakeState start;
    start.n = 4;
    start.stack = {2, 1, 3, 4};
    PancakeState goal = pancake_goal(4);
    auto domain = make_pancake_domain(4, 0, start, goal);
    DomainInstance inst{pancake_pack(start), pancake_pack(goal), "p4"};

    OracleResult oracle = optimal_cost(*domain, inst, 0);
    REQUIRE(oracle.status == OracleResult::Status::Solved);
    CHECK(*oracle.cost == 1);

    SearchConfig cfg = make_config(Algorithm::WBAE, Rational(1), Rational(1));
    SearchResult r = run_search(cfg, *domain, inst);
    REQUIRE(r.status == SearchStatus::Solved);
    CHECK(r.cost == Cost{1});
    REQUIRE(r.path.size() == 2);
    CHECK(r.path[0] == pancake_pack(start));
    CHECK(r.path[1] == pancake_pack(goal));
}

TEST_CASE("expanding a tile-puzzle root generates one successor per blank move") {
    StpState goal = stp_goal(4);
    struct Case {
        int blank_cell;
        std::uint64_t expected;
    };
    for (Case c : {Case{0, 2}, Case{1, 3}, Case{5, 4}}) {
        StpState start = goal;           // corner, edge, center blank
        start.tiles[0] = goal.tiles[c.blank_cell];
        start.tiles[c.blank_cell] = 0;
        auto domain = make_stp_domain(4, StpCost::Unit, StpHeuristic::Md, start, goal);
        DomainInstance inst{stp_pack(start), stp_pack(goal), "stp"};
        SearchConfig cfg = make_config(Algorithm::BWA, Rational(2), Rational(0));
        BiSearch search(cfg, *domain, inst);
        search.expand_best(Dir::F);
        CHECK(search.stats().generated == c.expected);
    }
}

TEST_CASE("forward-only runs end with the goal as the meeting state") {
    GraphDomain g = line_graph(5);
    SearchConfig cfg = make_config(Algorithm::WAstar, Rational(3, 2), Rational(0));
    BiSearch search(cfg, g, g.instance(0, 4));
    SearchResult r = search.run();
    REQUIRE(r.status == SearchStatus::Solved);
    CHECK(search.meeting_state() == GraphDomain::pack(4));
    CHECK(r.expansions_b == 0);
    REQUIRE(!r.path.empty());
    CHECK(r.path.front() == GraphDomain::pack(0));
    CHECK(r.path.back() == GraphDomain::pack(4));
}

TEST_CASE("timeout and node limits surface as statuses") {
    GraphDomain g = line_graph(200);
    for (std::size_t v = 0; v < 200; ++v) g.set_h(v, 0, 0);
    SearchConfig cfg = make_config(Algorithm::BWA, Rational(1), Rational(0));
    cfg.limits.node_limit = 10;
    SearchResult r = run_search(cfg, g, g.instance(0, 199));
    CHECK(r.status == SearchStatus::MemOut);

    cfg.limits.node_limit = 0;
    cfg.limits.time_limit_sec = 1e-9;
    r = run_search(cfg, g, g.instance(0, 199));
    CHECK(r.status == SearchStatus::Timeout);
}

TEST_CASE("WBS pruning keeps the bound while discarding dominated successors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 10 + rng() % 10;
        GraphDomain g(n);
        for (std::size_t v = 1; v < n; ++v) g.add_edge(v, rng() % v, 1 + rng() % 5);
        DomainInstance inst = g.instance(0, n - 1);
        OracleResult oracle = optimal_cost(g, inst, 0);
        REQUIRE(oracle.status == OracleResult::Status::Solved);
        for (const Rational& w : {Rational(1), Rational(2)}) {
            SearchConfig cfg = make_config(Algorithm::WBS, w, Rational(0));
            SearchResult r = run_search(cfg, g, inst);
            REQUIRE(r.status == SearchStatus::Solved);
            CHECK(verify_bound(*r.cost, w, *oracle.cost));
        }
    }
}
