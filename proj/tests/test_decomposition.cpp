#include <random>

#include "convexia/convexity.hpp"
#include "convexia/decomposition.hpp"
#include "convexia/errors.hpp"
#include "convexia/generators.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace convexia;
using namespace testing;

namespace {

int oracle(const Graph& g, ConvexityKind k) { return min_convexity_number(g, k).value; }

// Cograph on n vertices from random unions and joins of single vertices.
Graph random_cograph(std::size_t n, Rng& rng) {
    if (n == 1) return Graph(1);
    const auto k = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    const Graph a = random_cograph(k, rng), b = random_cograph(n - k, rng);
    return rng() % 2 ? join(a, b) : disjoint_union(a, b);
}

bool five_sets_have_one_p4(const Graph& g) {
    const Mask all = full_mask(g.order());
    for (Mask s = 0; s <= all; ++s)
        if (std::popcount(s) == 5 && naive::induced_p4_count(g, s) > 1) return false;
    return true;
}

}  // namespace

TEST_SUITE("class_decomposition") {

TEST_CASE("tree-cograph decomposition shapes") {
    const auto tree = decompose_tree_cograph(star(4));
    REQUIRE(tree);
    CHECK(tree->kind == NodeKind::tree_leaf);

    const auto c4 = decompose_tree_cograph(cycle(4));
    REQUIRE(c4);
    CHECK(c4->kind == NodeKind::join_node);
    CHECK(c4->children.size() == 2);
    for (const auto& child : c4->children)
        CHECK((child.kind == NodeKind::tree_leaf || child.kind == NodeKind::cotree_leaf));

    CHECK_FALSE(decompose_tree_cograph(cycle(5)));
}

TEST_CASE("tree-cograph numbers") {
    for (std::size_t n = 1; n <= 5; ++n) CHECK(tree_cograph_number(complete(n), ConvexityKind::geodetic).value == int(n));
    CHECK(tree_cograph_number(cycle(4), ConvexityKind::geodetic).value == 2);
    const Graph diamond = make(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(tree_cograph_number(diamond, ConvexityKind::geodetic).value == 2);
    CHECK_THROWS_AS(tree_cograph_number(cycle(5), ConvexityKind::geodetic), DomainError);
}

TEST_CASE("spider recognition") {
    const auto p4 = decompose_p4_sparse(path(4));
    REQUIRE(p4);
    CHECK(p4->kind == NodeKind::spider);
    REQUIRE(p4->spider);
    CHECK(p4->spider->feet.size() == 2);
    CHECK(p4->spider->thin);
    CHECK(p4->spider->head.empty());

    CHECK_FALSE(decompose_p4_sparse(cycle(5)));

    const Graph headed = make_spider(3, true, Graph(1));
    const auto h = decompose_p4_sparse(headed);
    REQUIRE(h);
    CHECK(h->kind == NodeKind::spider);
    CHECK(h->children.size() == 1);
    CHECK(h->spider->head == VertexSet{6});

    for (std::size_t k = 2; k <= 6; ++k)
        for (bool thin : {true, false}) {
            const Graph s = make_spider(k, thin);
            const auto found = find_spider(s);
            REQUIRE(found);
            CHECK(is_valid_spider(s, *found));
            CHECK(found->feet.size() == k);
            if (k > 2) CHECK(found->thin == thin);
        }
}

TEST_CASE("P4-sparse numbers") {
    const Graph thin3 = make_spider(3, true);
    CHECK(p4_sparse_number(thin3, ConvexityKind::geodetic).value == 3);
    CHECK(p4_sparse_number(thin3, ConvexityKind::two_geodetic).value == 4);
    CHECK(p4_sparse_number(path(4), ConvexityKind::geodetic).value == 2);
    CHECK(p4_sparse_number(path(4), ConvexityKind::two_geodetic).value == 3);
    const Graph headed = make_spider(2, true, Graph(1));
    CHECK(p4_sparse_number(headed, ConvexityKind::geodetic).value == 3);
    CHECK(oracle(headed, ConvexityKind::geodetic) == 3);
}

TEST_CASE("thick spiders without a head") {
    for (std::size_t k = 2; k <= 5; ++k) {
        const Graph s = make_spider(k, false);
        CHECK(p4_sparse_number(s, ConvexityKind::geodetic).value == oracle(s, ConvexityKind::geodetic));
        CHECK(p4_sparse_number(s, ConvexityKind::two_geodetic).value == oracle(s, ConvexityKind::two_geodetic));
        CHECK(p4_sparse_number(s, ConvexityKind::geodetic).value == (k == 2 ? 2 : int(k)));
    }
}

TEST_CASE("formulas match the oracle on every graph up to 7 vertices in either class") {
    for (std::size_t n = 1; n <= 7; ++n)
        for (const Graph& g : all_graphs(n))
            for (ConvexityKind k : {ConvexityKind::geodetic, ConvexityKind::two_geodetic}) {
                if (decompose_tree_cograph(g)) {
                    const WitnessedNumber r = tree_cograph_number(g, k);
                    CHECK(r.value == oracle(g, k));
                    CHECK(is_convexity_set(g, r.witness, k));
                }
                if (decompose_p4_sparse(g)) {
                    const WitnessedNumber r = p4_sparse_number(g, k);
                    CHECK(r.value == oracle(g, k));
                    CHECK(is_convexity_set(g, r.witness, k));
                }
            }
}

TEST_CASE("cographs are in both classes and both pipelines agree") {
    Rng rng(17);
    for (int i = 0; i < 150; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
        const Graph g = random_cograph(n, rng);
        REQUIRE(decompose_tree_cograph(g));
        REQUIRE(decompose_p4_sparse(g));
        for (ConvexityKind k : {ConvexityKind::geodetic, ConvexityKind::two_geodetic}) {
            const int expected = oracle(g, k);
            CHECK(tree_cograph_number(g, k).value == expected);
            CHECK(p4_sparse_number(g, k).value == expected);
        }
    }
}

TEST_CASE("built instances are recognized") {
    Rng rng(19);
    for (int i = 0; i < 200; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        CHECK(decompose_tree_cograph(random_tree_cograph(n, rng)));
        CHECK(decompose_p4_sparse(random_p4_sparse(n, rng)));
    }
}

TEST_CASE("P4-sparse recognition matches the five-vertex definition") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (const Graph& g : all_graphs(n)) CHECK(decompose_p4_sparse(g).has_value() == five_sets_have_one_p4(g));
}

}
