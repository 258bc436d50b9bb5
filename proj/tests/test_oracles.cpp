#include <doctest.h>

#include "test_util.hpp"
#include "ucat/errors.hpp"
#include "ucat/oracles.hpp"

using namespace testutil;
using ucat::Bitset;
using ucat::Graph;

TEST_SUITE_BEGIN("oracles");

TEST_CASE("odd cycles need three colors") {
    auto c5 = cycle_graph(5);
    CHECK(!ucat::chromatic_decision(c5, 2).colorable);
    auto three = ucat::chromatic_decision(c5, 3);
    CHECK(three.colorable);
    CHECK(ucat::coloring_check(c5, three.coloring, 3));
}

TEST_CASE("cliques are tight") {
    CHECK(!ucat::chromatic_decision(complete_graph(4), 3).colorable);
    CHECK(ucat::chromatic_decision(complete_graph(4), 4).colorable);
}

TEST_CASE("cycle chromatic numbers for n in 3..9") {
    for (int n = 3; n <= 9; n++) {
        int chi = 2 + (n % 2);
        CHECK(ucat::chromatic_decision(cycle_graph(n), chi).colorable);
        CHECK(!ucat::chromatic_decision(cycle_graph(n), chi - 1).colorable);
    }
}

TEST_CASE("vertex cover pinned values") {
    CHECK(ucat::min_vertex_cover(complete_graph(3)).size == 2);
    CHECK(ucat::min_vertex_cover(star_graph(5)).size == 1);
    CHECK(ucat::min_vertex_cover(cycle_graph(5)).size == 3);
    CHECK(ucat::min_vertex_cover(path_graph(3)).size == 1);
}

TEST_CASE("cycle cover numbers are ceil(n/2) for n in 3..9") {
    for (int n = 3; n <= 9; n++)
        CHECK(ucat::min_vertex_cover(cycle_graph(n)).size == (n + 1) / 2);
}

TEST_CASE("witnesses re-verify") {
    for (int n = 3; n <= 6; n++) {
        for (auto& g : connected_graph_classes(n)) {
            auto vc = ucat::min_vertex_cover(g);
            CHECK(ucat::cover_check(g, vc.cover));
            CHECK(vc.cover.count() == vc.size);
            for (int k = 1; k <= 4; k++) {
                auto col = ucat::chromatic_decision(g, k);
                if (col.colorable) {
                    CHECK(ucat::coloring_check(g, col.coloring, k));
                    auto classes = ucat::coloring_to_partition(g, col.coloring, k);
                    Bitset all(g.vertex_count());
                    for (const auto& cl : classes) all |= cl;
                    CHECK(all == g.full_vertex_set());
                }
            }
        }
    }
}

TEST_CASE("cover_check reports a missing edge") {
    auto g = path_graph(3);
    ucat::Edge witness;
    CHECK(!ucat::cover_check(g, Bitset::of(3, {0}), &witness));
    CHECK(witness == ucat::Edge{1, 2});
    CHECK(ucat::cover_check(Graph(3, {}), Bitset(3)));
}

TEST_CASE("oracle budget") {
    CHECK_THROWS_AS(ucat::min_vertex_cover(path_graph(17)), ucat::budget_error);
    CHECK_THROWS_AS(ucat::chromatic_decision(path_graph(17), 2), ucat::budget_error);
}

TEST_SUITE_END();
