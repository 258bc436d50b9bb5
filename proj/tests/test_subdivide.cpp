#include <doctest.h>

#include "test_util.hpp"
#include "ucat/subdivide.hpp"

using namespace testutil;
using ucat::Graph;
using ucat::Rat;

TEST_SUITE_BEGIN("subdivide");

TEST_CASE("r = 0 is the identity") {
    auto g = cycle_graph(4);
    auto f = fn({1, 2, 3, 4});
    auto sub = ucat::subdivide(g, f, 0);
    CHECK(sub.graph.edges() == g.edges());
    CHECK(sub.function == f);
    CHECK(sub.new_vertex_origin.empty());
}

TEST_CASE("single edge midpoint interpolates") {
    Graph g(2, {{0, 1}});
    auto sub = ucat::subdivide(g, fn({0, 1}), 1);
    REQUIRE(sub.graph.vertex_count() == 3);
    CHECK(sub.function[2] == Rat(1, 2));
    CHECK(sub.graph.has_edge(0, 2));
    CHECK(sub.graph.has_edge(2, 1));
    CHECK(!sub.graph.has_edge(0, 1));
    CHECK(sub.new_vertex_origin[0].u == 0);
    CHECK(sub.new_vertex_origin[0].v == 1);
    CHECK(sub.new_vertex_origin[0].t == Rat(1, 2));
}

TEST_CASE("triangle at r = 1 becomes a 6-cycle with constant values") {
    auto sub = ucat::subdivide(complete_graph(3), fn({1, 1, 1}), 1);
    CHECK(sub.graph.vertex_count() == 6);
    CHECK(sub.graph.edge_count() == 6);
    CHECK(ucat::girth(sub.graph) == 6);
    for (int v = 0; v < 6; v++) CHECK(sub.function[v] == Rat(1));
}

TEST_CASE("r = 2 splits values in thirds") {
    Graph g(2, {{0, 1}});
    auto sub = ucat::subdivide(g, fn({0, 3}), 2);
    REQUIRE(sub.graph.vertex_count() == 4);
    CHECK(sub.function[2] == Rat(1));
    CHECK(sub.function[3] == Rat(2));
}

TEST_CASE("girth scales by r + 1 on cyclic graphs") {
    for (int r = 0; r <= 3; r++) {
        for (int n : {3, 4, 5}) {
            auto g = cycle_graph(n);
            auto sub = ucat::subdivide(g, fn(std::vector<long>(n, 1)), r);
            CHECK(ucat::girth(sub.graph) == n * (r + 1));
        }
        auto pg = petersen_graph();
        auto sub = ucat::subdivide(pg, fn(std::vector<long>(10, 1)), r);
        CHECK(ucat::girth(sub.graph) == 5 * (r + 1));
    }
}

TEST_SUITE_END();
