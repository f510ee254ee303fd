#include "convexia/convexity.hpp"
#include "convexia/errors.hpp"
#include "convexia/generators.hpp"
#include "convexia/tree_family.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace convexia;
using namespace testing;

namespace {

Graph double_star(std::size_t left, std::size_t right) {
    std::vector<Edge> e{{0, 1}};
    int next = 2;
    for (std::size_t i = 0; i < left; ++i) e.emplace_back(0, next++);
    for (std::size_t i = 0; i < right; ++i) e.emplace_back(1, next++);
    return Graph(std::size_t(next), e);
}

}  // namespace

TEST_SUITE("tree_family") {

TEST_CASE("geodetic number of a tree is its leaf count") {
    for (std::size_t n = 2; n <= 8; ++n) CHECK(tree_geodetic_number(path(n)).value == 2);
    CHECK(tree_geodetic_number(star(5)).value == 5);
    CHECK(tree_geodetic_number(Graph(1)).value == 1);
    CHECK(tree_geodetic_number(star(5)).witness == VertexSet{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(tree_geodetic_number(cycle(4)), DomainError);
}

TEST_CASE("2-geodetic number of small trees") {
    CHECK(tree_2geodetic_number(path(3)).value == 2);
    CHECK(tree_2geodetic_number(path(4)).value == 3);
    CHECK(tree_2geodetic_number(path(5)).value == 3);
    CHECK(tree_2geodetic_number(path(5)).witness == VertexSet{0, 2, 4});
    CHECK(tree_2geodetic_number(Graph(1)).value == 1);
    CHECK(tree_2geodetic_number(complete(2)).value == 2);
    CHECK_THROWS_AS(tree_2geodetic_number(cycle(5)), DomainError);
    CHECK_THROWS_AS(tree_2geodetic_number(Graph(2)), DomainError);
}

TEST_CASE("leaf states") {
    const RootedTree t = root_tree(path(3), 1);
    const auto states = two_geodetic_states(t);
    for (Vertex leaf : {0, 2}) {
        CHECK(states[leaf].alpha == 1);
        CHECK(states[leaf].beta == kInfeasible);
        CHECK(states[leaf].gamma == kInfeasible);
    }
    CHECK(states[1].gamma == 2);
    CHECK(saturating_add(kInfeasible, 3) == kInfeasible);
}

TEST_CASE("tree DP matches the oracle on every tree up to 10 vertices") {
    for (std::size_t n = 1; n <= 10; ++n)
        for (const Graph& t : all_trees(n)) {
            const WitnessedNumber r = tree_2geodetic_number(t);
            CHECK(r.value == min_convexity_number(t, ConvexityKind::two_geodetic).value);
            CHECK(int(r.witness.size()) == r.value);
            CHECK(is_convexity_set(t, r.witness, ConvexityKind::two_geodetic));
        }
}

TEST_CASE("values do not depend on the root") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (const Graph& t : all_trees(n)) {
            const int base = tree_2geodetic_number(t, 0).value;
            for (Vertex r = 1; r < Vertex(n); ++r) CHECK(tree_2geodetic_number(t, r).value == base);
        }
}

TEST_CASE("cotree geodetic cases") {
    CHECK(cotree_case(star(3)) == CotreeCase::small_diameter);
    CHECK(cotree_geodetic_number(star(3)).value == 4);
    CHECK(cotree_case(path(4)) == CotreeCase::diameter_three);
    CHECK(cotree_geodetic_number(path(4)).value == 2);
    CHECK(cotree_case(path(6)) == CotreeCase::degree_two);
    CHECK(cotree_geodetic_number(path(6)).value == 3);

    // P5 with a pendant leaf on each inner vertex: no degree-2 vertex, diameter 4.
    const Graph spiny = make(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(cotree_case(spiny) == CotreeCase::general);
    CHECK(cotree_geodetic_number(spiny).value == 4);
    CHECK(min_convexity_number(complement(spiny), ConvexityKind::geodetic).value == 4);
}

TEST_CASE("cotree 2-geodetic cases") {
    CHECK(cotree_2geodetic_number(path(4)).value == 3);
    CHECK(cotree_2geodetic_number(double_star(2, 2)).value == 4);
    CHECK(cotree_2geodetic_number(path(6)).value == 3);
    CHECK_THROWS_AS(cotree_geodetic_number(cycle(5)), DomainError);
}

TEST_CASE("cotree formulas match the oracle on every tree up to 9 vertices") {
    for (std::size_t n = 1; n <= 9; ++n)
        for (const Graph& t : all_trees(n)) {
            const Graph co = complement(t);
            const WitnessedNumber g = cotree_geodetic_number(t);
            const WitnessedNumber g2 = cotree_2geodetic_number(t);
            CHECK(g.value == min_convexity_number(co, ConvexityKind::geodetic).value);
            CHECK(g2.value == min_convexity_number(co, ConvexityKind::two_geodetic).value);
            CHECK(is_convexity_set(co, g.witness, ConvexityKind::geodetic));
            CHECK(is_convexity_set(co, g2.witness, ConvexityKind::two_geodetic));
        }
}

TEST_CASE("a million-vertex path") {
    const Graph p = path(1'000'000);
    CHECK(tree_2geodetic_number(p).value == 500'001);
    CHECK(tree_geodetic_number(p).value == 2);
}

}
