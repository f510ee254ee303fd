#include <random>

#include "convexia/errors.hpp"
#include "convexia/generators.hpp"
#include "convexia/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace convexia;
using namespace testing;

TEST_SUITE("graph_core") {

TEST_CASE("graph6 decoding") {
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.adjacent(0, 1));

    const Graph two = parse_graph6("A?");
    CHECK(two.order() == 2);
    CHECK(two.size() == 0);

    // Reference encodings from the standard codec.
    CHECK(to_graph6(path(4)) == "Ch");
    CHECK(to_graph6(cycle(5)) == "Dhc");
    CHECK(to_graph6(complete(4)) == "C~");
    CHECK(parse_graph6("Dhc") == cycle(5));
}

TEST_CASE("edge list parsing") {
    const Graph p3 = parse_edge_list("0 1\n1 2\n");
    CHECK(p3 == path(3));

    const Graph padded = parse_edge_list("# comment\nn=5\n\n0 1\n");
    CHECK(padded.order() == 5);
    CHECK(padded.size() == 1);
}

TEST_CASE("malformed input reports an offset") {
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
    try {
        parse_edge_list("0 1\n1 q\n");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.offset() >= 4);
    }
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
}

TEST_CASE("vertex range is checked") {
    const std::vector<Edge> bad{{0, 3}};
    CHECK_THROWS_AS(Graph(3, bad), RangeError);
}

TEST_CASE("serialization round trips") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
        const Graph g = random_graph(n, 0.4, rng);
        CHECK(load_graph(serialize(g, GraphFormat::graph6), GraphFormat::graph6) == g);
        CHECK(load_graph(serialize(g, GraphFormat::edge_list), GraphFormat::edge_list) == g);
    }
}

TEST_CASE("complement") {
    CHECK(complement(complete(3)).size() == 0);
    // P4 0-1-2-3 has complement 1-3-0-2.
    const Graph c = complement(path(4));
    CHECK(c == make(4, {{1, 3}, {3, 0}, {0, 2}}));

    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const Graph g = random_graph(9, 0.5, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("components") {
    const Graph g = make(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(components(g) == std::vector<VertexSet>{{0, 1, 2}, {3}});
    CHECK(components(path(5)) == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
    CHECK(components(Graph(3)) == std::vector<VertexSet>{{0}, {1}, {2}});

    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const Graph h = random_graph(10, 0.15, rng);
        std::vector<int> seen(10, 0);
        for (const auto& c : components(h))
            for (Vertex v : c) ++seen[v];
        CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
    }
}

TEST_CASE("distances and diameter") {
    CHECK(distances(path(5), 0) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(diameter(path(4)) == 3);
    CHECK(diameter(star(4)) == 2);
    CHECK(diameter(Graph(2)) == kInfinite);
}

TEST_CASE("simplicial vertices") {
    CHECK(simplicial_vertices(complete(4)) == VertexSet{0, 1, 2, 3});
    CHECK(simplicial_vertices(cycle(5)).empty());
    CHECK(simplicial_vertices(Graph(1)) == VertexSet{0});
    for (std::size_t n = 2; n <= 10; ++n)
        for (const Graph& t : all_trees(n)) {
            VertexSet leaves;
            for (Vertex v = 0; v < Vertex(n); ++v)
                if (t.degree(v) == 1) leaves.push_back(v);
            CHECK(simplicial_vertices(t) == leaves);
        }
}

TEST_CASE("trees") {
    CHECK(is_tree(path(4)));
    CHECK_FALSE(is_tree(cycle(4)));
    CHECK(is_tree(Graph(1)));
    CHECK(is_tree(complete(2)));
    CHECK_FALSE(is_tree(Graph(2)));
}

TEST_CASE("chordality against chordless cycle search") {
    CHECK(is_chordal(star(3)));
    CHECK_FALSE(is_chordal(cycle(4)));
    CHECK(is_chordal(make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})));

    // A graph is chordal iff no vertex set of size >= 4 induces a cycle.
    auto brute = [](const Graph& g) {
        const Mask all = full_mask(g.order());
        for (Mask s = 0; s <= all; ++s) {
            if (std::popcount(s) < 4 || !naive::connected(g, s)) continue;
            bool two_regular = true;
            for (Vertex v = 0; v < Vertex(g.order()) && two_regular; ++v)
                if (s >> v & 1) two_regular = std::popcount(g.neighbor_mask(v) & s) == 2;
            if (two_regular) return false;
        }
        return true;
    };
    for (std::size_t n = 1; n <= 7; ++n)
        for (const Graph& g : all_graphs(n)) CHECK(is_chordal(g) == brute(g));
}

TEST_CASE("small graph enumeration counts") {
    const std::vector<std::size_t> graphs{1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 1; n <= graphs.size(); ++n) CHECK(all_graphs(n).size() == graphs[n - 1]);
    const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (std::size_t n = 1; n <= trees.size(); ++n) CHECK(all_trees(n).size() == trees[n - 1]);
}

}
