#include <doctest.h>

#include "test_util.hpp"
#include "ucat/exact_solver.hpp"
#include "ucat/gadgets.hpp"
#include "ucat/unimodal.hpp"

using namespace testutil;
using ucat::Bitset;
using ucat::Graph;
using ucat::Rat;
using ucat::SolverLimits;
using ucat::SupportCandidate;

TEST_SUITE_BEGIN("exact_solver");

TEST_CASE("feasibility system: whole tree with a unimodal target") {
    auto g = path_graph(3);
    auto f = fn({1, 2, 1});
    std::vector<SupportCandidate> cands{{g.full_vertex_set(), 1}};
    auto lp = ucat::lp_feasible(ucat::build_feasibility_system(g, f, cands));
    REQUIRE(lp.feasible);
    CHECK(lp.point == std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
}

TEST_CASE("feasibility system: endpoint root against increasing values") {
    auto g = path_graph(3);
    auto f = fn({1, 2, 3});
    std::vector<SupportCandidate> cands{{g.full_vertex_set(), 0}};
    CHECK(!ucat::lp_feasible(ucat::build_feasibility_system(g, f, cands)).feasible);
}

TEST_CASE("feasibility system: two disjoint paths split a constant 4-cycle") {
    auto g = cycle_graph(4);
    auto f = fn({1, 1, 1, 1});
    std::vector<SupportCandidate> cands{{Bitset::of(4, {0, 1}), 0}, {Bitset::of(4, {2, 3}), 2}};
    auto lp = ucat::lp_feasible(ucat::build_feasibility_system(g, f, cands));
    REQUIRE(lp.feasible);
    for (const auto& x : lp.point) CHECK(x == Rat(1));
}

TEST_CASE("ucat_leq basics") {
    CHECK(ucat::ucat_leq(path_graph(3), fn({1, 2, 1}), 1).satisfiable);
    CHECK(!ucat::ucat_leq(complete_graph(3), fn({1, 1, 1}), 1).satisfiable);
    CHECK(ucat::ucat_leq(cycle_graph(4), fn({1, 1, 1, 1}), 2).satisfiable);
    CHECK(ucat::ucat_leq(path_graph(2), fn({0, 0}), 0).satisfiable);
    CHECK(!ucat::ucat_leq(path_graph(2), fn({1, 0}), 0).satisfiable);
}

TEST_CASE("ucat_leq is monotone in k") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; trial++) {
        auto g = cycle_graph(5);
        auto f = random_values(5, 3, rng);
        bool prev = false;
        for (int k = 0; k <= 3; k++) {
            bool now = ucat::ucat_leq(g, f, k).satisfiable;
            if (prev) CHECK(now);
            prev = now;
        }
    }
}

TEST_CASE("exact_ucat on cycles of constant one") {
    auto res = ucat::exact_ucat(cycle_graph(5), fn({1, 1, 1, 1, 1}));
    CHECK(res.value == 2);
    CHECK(!res.exact);  // cyclic support: value is an upper bound in general
    CHECK(ucat::verify_decomposition(res.instance.graph, res.certificate));
}

TEST_CASE("exact_ucat equals the greedy count on trees") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 15; trial++) {
        int n = 2 + static_cast<int>(rng() % 6);
        auto g = random_tree(n, rng);
        auto f = random_values(n, 3, rng);
        auto greedy = ucat::greedy_decompose(g, f);
        if (f.is_zero()) {
            CHECK(ucat::exact_ucat(g, f).value == 0);
            continue;
        }
        auto res = ucat::exact_ucat(g, f);
        CHECK(res.value == greedy.count());
        CHECK(res.exact);
    }
}

TEST_CASE("exact_ucat of the vertex-cover gadget of a triangle is 2") {
    auto gadget = ucat::vertex_cover_gadget(complete_graph(3));
    auto res = ucat::exact_ucat(gadget.graph, gadget.function);
    CHECK(res.value == 2);
}

TEST_CASE("refinement never increases the value") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 5; trial++) {
        auto g = cycle_graph(4);
        auto f = random_values(4, 2, rng);
        if (f.is_zero()) continue;
        SolverLimits limits;
        limits.max_vertices = 16;
        auto r0 = ucat::exact_ucat(g, f, 1, 0, limits);
        auto r1 = ucat::exact_ucat(g, f, 1, 1, limits);
        CHECK(r1.value <= r0.value);
    }
}

TEST_CASE("power invariance holds by construction") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 8; trial++) {
        auto g = cycle_graph(4);
        auto f = random_values(4, 2, rng);
        for (unsigned p : {1u, 2u, 3u}) {
            auto a = ucat::exact_ucat(g, f, p, 0);
            auto b = ucat::exact_ucat(g, f.pow(p), 1, 0);
            CHECK(a.value == b.value);
            CHECK(a.certificate.count() == b.certificate.count());
        }
    }
}

TEST_CASE("budget errors name the limiting parameter") {
    SolverLimits tight;
    tight.max_vertices = 3;
    try {
        ucat::exact_ucat(cycle_graph(5), fn({1, 1, 1, 1, 1}), 1, 0, tight);
        FAIL("expected budget_error");
    } catch (const ucat::budget_error& e) {
        CHECK(e.parameter() == "budget-vertices");
    }
    SolverLimits low_k;
    low_k.max_k = 1;
    try {
        ucat::exact_ucat(cycle_graph(5), fn({1, 1, 1, 1, 1}), 1, 0, low_k);
        FAIL("expected budget_error");
    } catch (const ucat::budget_error& e) {
        CHECK(e.parameter() == "max-k");
    }
}

TEST_CASE("strong value of the constant 4-cycle is 3") {
    auto res = ucat::exact_ucat_strong(cycle_graph(4), fn({1, 1, 1, 1}));
    CHECK(res.value == 3);
    CHECK(res.strong);
    std::vector<ucat::VertexFunction> fns;
    for (const auto& c : res.certificate.components) fns.push_back(c.values);
    CHECK(ucat::is_strong_decomposition(res.instance.graph, fns).strong);
}

TEST_CASE("strong equals weak on trees") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 8; trial++) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto g = random_tree(n, rng);
        auto f = random_values(n, 3, rng);
        if (f.is_zero()) continue;
        auto weak = ucat::exact_ucat(g, f);
        auto strong = ucat::exact_ucat_strong(g, f);
        CHECK(weak.value == strong.value);
    }
}

TEST_CASE("strong value matches the weak one on the C5 gadget") {
    SolverLimits wide;
    wide.max_vertices = 16;
    auto gadget = ucat::vertex_cover_gadget(cycle_graph(5));
    auto strong = ucat::exact_ucat_strong(gadget.graph, gadget.function, 1, wide);
    CHECK(strong.value == 3);
    CHECK(!strong.strong_search_incomplete);
}

TEST_CASE("ucat_strong_leq rejects two components on any cyclic support") {
    auto g = cycle_graph(4);
    auto res = ucat::ucat_strong_leq(g, fn({1, 1, 1, 1}), 2);
    CHECK(!res.satisfiable);
    CHECK(res.search_incomplete);  // weak-feasible pairs exist
}

TEST_CASE("min_tree_cover") {
    std::mt19937 rng(61);
    CHECK(ucat::min_tree_cover(random_tree(8, rng)).value == 1);
    auto c4 = ucat::min_tree_cover(cycle_graph(4));
    CHECK(c4.value == 2);
    Bitset all(4);
    for (const auto& t : c4.trees) {
        CHECK(ucat::induces_tree(cycle_graph(4), t));
        all |= t;
    }
    CHECK(all == cycle_graph(4).full_vertex_set());
    CHECK(ucat::min_tree_cover(complete_graph(6)).value == 3);
}

TEST_CASE("certificates re-verify and zero components are dropped") {
    auto res = ucat::exact_ucat(cycle_graph(4), fn({1, 1, 1, 1}));
    CHECK(res.value == 2);
    for (const auto& comp : res.certificate.components) {
        CHECK(!comp.values.is_zero());
        CHECK(ucat::is_unimodal(res.instance.graph, comp.values).unimodal);
    }
}

TEST_SUITE_END();
