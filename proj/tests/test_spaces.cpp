#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "propa/spaces.hpp"
#include "propa/types.hpp"

using namespace propa;

namespace {

// Independent oracle: Manhattan distance from grid coordinates.
int manhattan(const FiniteMetricSpace& g, PointId a, PointId b) {
    auto ca = g.grid_coords(a);
    auto cb = g.grid_coords(b);
    int total = 0;
    for (std::size_t i = 0; i < ca.size(); ++i) total += std::abs(ca[i] - cb[i]);
    return total;
}

// Independent oracle: tree distance via parent walks to the lowest common
// ancestor, using only the child-numbering rule (children of v are
// arity*v + 1 + j).
int tree_walk_distance(int arity, PointId a, PointId b) {
    auto depth_of = [&](PointId v) {
        int d = 0;
        while (v != 0) {
            v = (v - 1) / static_cast<PointId>(arity);
            ++d;
        }
        return d;
    };
    int da = depth_of(a);
    int db = depth_of(b);
    int steps = 0;
    while (da > db) { a = (a - 1) / static_cast<PointId>(arity); --da; ++steps; }
    while (db > da) { b = (b - 1) / static_cast<PointId>(arity); --db; ++steps; }
    while (a != b) {
        a = (a - 1) / static_cast<PointId>(arity);
        b = (b - 1) / static_cast<PointId>(arity);
        steps += 2;
    }
    return steps;
}

}  // namespace

TEST_CASE("1-d grid is a path metric") {
    auto p5 = grid_space({5});
    CHECK(p5.size() == 5);
    CHECK(p5.dist(0, 4) == 4);
    CHECK(p5.dist(2, 2) == 0);
    CHECK(p5.diameter() == 4);
    CHECK(p5.ball(2, 1) == std::vector<PointId>{1, 2, 3});
    CHECK(p5.ball(0, 0) == std::vector<PointId>{0});
    CHECK(p5.ball(2, 100) == std::vector<PointId>{0, 1, 2, 3, 4});
}

TEST_CASE("multi-axis grid distance equals Manhattan oracle") {
    auto g = grid_space({3, 4, 2});
    CHECK(g.size() == 24);
    for (PointId a = 0; a < g.size(); ++a)
        for (PointId b = 0; b < g.size(); ++b)
            CHECK(g.dist(a, b) == manhattan(g, a, b));
    CHECK(g.diameter() == (3 - 1) + (4 - 1) + (2 - 1));
}

TEST_CASE("grid coordinates use last axis fastest and round trip") {
    auto g = grid_space({3, 4});
    CHECK(g.grid_dims() == std::vector<int>{3, 4});
    CHECK(g.grid_coords(0) == std::vector<int>{0, 0});
    CHECK(g.grid_coords(1) == std::vector<int>{0, 1});
    CHECK(g.grid_coords(4) == std::vector<int>{1, 0});
    CHECK(g.grid_coords(11) == std::vector<int>{2, 3});
}

TEST_CASE("tree distance equals parent-walk oracle") {
    for (int arity : {1, 2, 3}) {
        int depth = arity == 1 ? 6 : (arity == 2 ? 4 : 3);
        auto t = tree_space(arity, depth);
        for (PointId a = 0; a < t.size(); ++a)
            for (PointId b = 0; b < t.size(); ++b)
                CHECK(t.dist(a, b) == tree_walk_distance(arity, a, b));
    }
}

TEST_CASE("binary tree of depth 2 has expected shape") {
    auto t = tree_space(2, 2);
    CHECK(t.size() == 7);
    CHECK(t.tree_arity() == 2);
    CHECK(t.tree_depth() == 2);
    CHECK(t.dist(3, 5) == 4);  // 3-1-0-2-5
    CHECK(t.dist(3, 4) == 2);  // siblings under 1
    CHECK(t.diameter() == 4);
    CHECK(tree_node_depth(2, 0) == 0);
    CHECK(tree_node_depth(2, 2) == 1);
    CHECK(tree_node_depth(2, 6) == 2);
}

TEST_CASE("graph factory builds shortest-path metric") {
    // 4-cycle: 0-1-2-3-0.
    auto c4 = from_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.dist(0, 2) == 2);
    CHECK(c4.dist(1, 3) == 2);
    CHECK(c4.dist(0, 1) == 1);
    CHECK(c4.diameter() == 2);
    // Duplicate and reversed edges collapse.
    auto dup = from_graph(3, {{0, 1}, {1, 0}, {1, 2}, {1, 2}});
    CHECK(dup.edges() == std::vector<std::pair<PointId, PointId>>{{0, 1}, {1, 2}});
}

TEST_CASE("graph factory rejects invalid input") {
    CHECK_THROWS_AS(from_graph(3, {{0, 1}}), validation_error);          // disconnected
    CHECK_THROWS_AS(from_graph(2, {{0, 0}, {0, 1}}), validation_error);  // self-loop
    CHECK_THROWS_AS(from_graph(2, {{0, 5}}), validation_error);          // out of range
    CHECK_THROWS_AS(from_graph(0, {}), validation_error);                // empty
}

TEST_CASE("point budget rejects oversized spaces") {
    const std::vector<int> too_long{static_cast<int>(kDefaultPointBudget) + 1};
    const std::vector<int> too_square{100, 100};
    const std::vector<int> just_fits{70, 70};
    CHECK_THROWS_AS(grid_space(too_long), validation_error);
    CHECK_THROWS_AS(grid_space(too_square), validation_error);
    CHECK_THROWS_AS(tree_space(2, 13), validation_error);  // 2^14 - 1 points
    CHECK_NOTHROW(grid_space(just_fits));                  // 4900 <= 5000
}

TEST_CASE("eccentricity and diameter agree with brute force") {
    auto t = tree_space(2, 3);
    int best = 0;
    for (PointId a = 0; a < t.size(); ++a) {
        int ecc = 0;
        for (PointId b = 0; b < t.size(); ++b) ecc = std::max(ecc, t.dist(a, b));
        CHECK(t.eccentricity(a) == ecc);
        best = std::max(best, ecc);
    }
    CHECK(t.diameter() == best);
}

TEST_CASE("ball matches brute-force distance scan") {
    auto g = grid_space({4, 4});
    for (PointId c = 0; c < g.size(); ++c) {
        for (int r = 0; r <= g.diameter() + 1; ++r) {
            std::vector<PointId> expect;
            for (PointId p = 0; p < g.size(); ++p)
                if (g.dist(c, p) <= r) expect.push_back(p);
            CHECK(g.ball(c, r) == expect);
        }
    }
}

TEST_CASE("set_diameter computes max pairwise distance") {
    auto p7 = grid_space({7});
    const std::vector<PointId> six{0, 1, 2, 3, 4, 5};
    const std::vector<PointId> lone{3};
    const std::vector<PointId> ends{0, 6};
    const std::vector<PointId> none;
    CHECK(set_diameter(p7, six) == 5);
    CHECK(set_diameter(p7, lone) == 0);
    CHECK(set_diameter(p7, ends) == 6);
    CHECK_THROWS_AS(set_diameter(p7, none), precondition_error);
}

TEST_CASE("edges are canonical and sorted") {
    auto g = from_graph(4, {{3, 2}, {1, 0}, {2, 1}});
    CHECK(g.edges() == std::vector<std::pair<PointId, PointId>>{{0, 1}, {1, 2}, {2, 3}});
    auto p3 = grid_space({3});
    CHECK(p3.edges() == std::vector<std::pair<PointId, PointId>>{{0, 1}, {1, 2}});
}
