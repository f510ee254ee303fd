#include <random>

#include "convexia/at_free.hpp"
#include "convexia/convexity.hpp"
#include "convexia/errors.hpp"
#include "convexia/generators.hpp"
#include "convexia/permutation.hpp"
#include "convexia/suites.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace convexia;
using namespace testing;

namespace {

int oracle_m(const Graph& g) { return min_convexity_number(g, ConvexityKind::monophonic).value; }

bool has_crossing_set(const PermutationDiagram& d, const VertexSet& s) {
    for (const auto& line : scanline_separator_set(d))
        if (line.crossing == s) return true;
    return false;
}

}  // namespace

TEST_SUITE("perm_monophonic") {

TEST_CASE("diagram parsing") {
    const PermutationDiagram d = parse_permutation("2 4 1 3");
    CHECK(d.order() == 4);
    CHECK(d.bottom(0) == 2);
    CHECK(d.bottom(1) == 0);
    CHECK(to_string(d) == "2 4 1 3");
    CHECK_THROWS_AS(parse_permutation("1 1 2"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1 2 x"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1 3"), ParseError);
}

TEST_CASE("diagram graphs") {
    CHECK(permutation_to_graph(parse_permutation("1 2 3 4 5")).size() == 0);
    CHECK(permutation_to_graph(parse_permutation("5 4 3 2 1")) == complete(5));
    // Labels 2-1-4-3 form a path.
    CHECK(permutation_to_graph(parse_permutation("2 4 1 3")) == make(4, {{1, 0}, {0, 3}, {3, 2}}));
    const PermutationDiagram d = parse_permutation("3 1 4 2 5");
    CHECK(permutation_to_graph(induced_diagram(d, VertexSet{0, 2, 3})) ==
          induced_subgraph(permutation_to_graph(d), VertexSet{0, 2, 3}));
}

TEST_CASE("scanline separators") {
    const PermutationDiagram p4 = parse_permutation("2 4 1 3");
    CHECK(has_crossing_set(p4, VertexSet{0}));
    CHECK(has_crossing_set(p4, VertexSet{3}));
    CHECK(crossing_set(p4, {0, 0}).empty());
    const PermutationDiagram identity = parse_permutation("1 2 3 4");
    CHECK(has_crossing_set(identity, VertexSet{}));
    CHECK(minimal_separators_brute(permutation_to_graph(identity)) == std::vector<VertexSet>{VertexSet{}});

    Rng rng(59);
    for (int i = 0; i < 150; ++i) {
        const auto d = random_permutation(std::uniform_int_distribution<std::size_t>(2, 8)(rng), rng);
        const Graph g = permutation_to_graph(d);
        for (const VertexSet& s : minimal_separators_brute(g)) CHECK(has_crossing_set(d, s));
    }
}

TEST_CASE("neighborhoods in a component are nested") {
    Rng rng(61);
    for (int i = 0; i < 150; ++i) {
        const auto d = random_permutation(std::uniform_int_distribution<std::size_t>(2, 12)(rng), rng);
        const Graph g = permutation_to_graph(d);
        for (const auto& line : scanline_separator_set(d)) {
            const VertexSet alive = set_difference(all_vertices(g), line.crossing);
            for (const VertexSet& c : components(g, alive))
                for (Vertex a : line.crossing)
                    for (Vertex b : line.crossing) {
                        if (a >= b || g.adjacent(a, b)) continue;
                        const Mask na = g.neighbor_mask(a) & to_mask(c), nb = g.neighbor_mask(b) & to_mask(c);
                        CHECK(((na & ~nb) == 0 || (nb & ~na) == 0));
                    }
        }
    }
}

TEST_CASE("join formula") {
    CHECK(join_monophonic_number({true, 2}, {true, 2}) == 4);
    CHECK(join_monophonic_number({false, 2}, {true, 1}) == 2);
    CHECK(join_monophonic_number({false, 2}, {false, 2}) == 2);
    CHECK(join_monophonic_number({false, 5}, {false, 6}) == 4);
    CHECK(oracle_m(join(Graph(2), Graph(2))) == 2);
    CHECK(oracle_m(join(Graph(2), Graph(1))) == 2);

    Rng rng(67);
    for (int i = 0; i < 150; ++i) {
        const auto n1 = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const auto n2 = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const Graph a = random_graph(n1, 0.5, rng), b = random_graph(n2, 0.5, rng);
        const JoinFactor fa{is_complete(a), is_complete(a) ? int(n1) : oracle_m(a)};
        const JoinFactor fb{is_complete(b), is_complete(b) ? int(n2) : oracle_m(b)};
        CHECK(join_monophonic_number(fa, fb) == oracle_m(join(a, b)));
    }
}

TEST_CASE("membership on paths") {
    CHECK(monophonic_membership(path(5), 0, 4, 2));
    const Graph chorded = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
    CHECK_FALSE(monophonic_membership(chorded, 0, 4, 2));
    CHECK_FALSE(contains(monophonic_closure(chorded, VertexSet{0, 4}), 2));
    CHECK_THROWS_AS(monophonic_membership(path(5), 0, 4, 1), DomainError);
}

TEST_CASE("the crossing-pair condition alone over-includes") {
    // Delta_z(x) = {5}, Delta_z(y) = {5, 6}; every x,y-path through z has a chord at 5.
    const Graph g = permutation_to_graph(parse_permutation("6 1 7 2 8 5 4 3"));
    CHECK(contains(between_set(g, 0, 7), 1));
    CHECK(crossing_pair_condition(g, 0, 7, 1));
    CHECK_FALSE(monophonic_membership(g, 0, 7, 1));
    CHECK_FALSE(contains(monophonic_closure(g, VertexSet{0, 7}), 1));
}

TEST_CASE("pair closures match path search") {
    Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 11)(rng);
        const Graph g = permutation_to_graph(random_permutation(n, rng));
        for (Vertex x = 0; x < Vertex(n); ++x)
            for (Vertex y = x + 1; y < Vertex(n); ++y)
                CHECK(monophonic_pair_closure(g, x, y) == monophonic_closure(g, VertexSet{x, y}));
        // Pairs in different components store 0 in one table and {x,y} in the other.
        const auto a = betweenness_pair_masks(g), b = monophonic_pair_masks(g);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const Mask ends = bit(Vertex(x)) | bit(Vertex(y));
                CHECK((a[x * n + y] | ends) == (b[x * n + y] | ends));
            }
    }
}

TEST_CASE("separator pairs") {
    // P5 as 1-0-3-2-4: {0} and {2} are parallel with 3 between them, but
    // 0 and 2 are nonadjacent so they do not form a successional pair.
    const PermutationDiagram p5 = parse_permutation("2 4 1 5 3");
    const auto parallel = parallel_separator_pairs(p5);
    REQUIRE(parallel.size() == 1);
    CHECK(parallel[0].s1 == VertexSet{0});
    CHECK(parallel[0].s2 == VertexSet{2});
    CHECK(parallel[0].between == VertexSet{3});
    CHECK(successional_pairs(p5).empty());

    for (const auto& p : successional_pairs(parse_permutation("4 3 2 1"))) CHECK(p.between.empty());

    Rng rng(73);
    for (int i = 0; i < 200; ++i) {
        const auto d = random_connected_permutation(std::uniform_int_distribution<std::size_t>(2, 10)(rng), rng);
        const Graph g = permutation_to_graph(d);
        for (const auto& p : successional_pairs(d)) {
            for (Vertex a : p.s1)
                for (Vertex b : p.s2) CHECK((a == b || g.adjacent(a, b)));
            for (Vertex s : p.s1) {
                int partial = 0;
                for (const VertexSet& c : p.components) {
                    const int seen = std::popcount(g.neighbor_mask(s) & to_mask(c));
                    partial += seen > 0 && seen < int(c.size());
                }
                CHECK(partial <= 1);
            }
        }
    }
}

TEST_CASE("monophonic number of small diagrams") {
    CHECK(permutation_monophonic_number(parse_permutation("2 4 1 3")).value == 2);
    CHECK(permutation_monophonic_number(parse_permutation("3 4 1 2")).value == 2);
    CHECK(permutation_monophonic_number(parse_permutation("1")).value == 1);
    CHECK(permutation_monophonic_number(parse_permutation("4 3 2 1")).value == 4);
    CHECK(permutation_monophonic_number(parse_permutation("6 1 7 2 8 5 4 3")).value ==
          oracle_m(permutation_to_graph(parse_permutation("6 1 7 2 8 5 4 3"))));
    CHECK_THROWS_AS(permutation_monophonic_number(parse_permutation("1 2")), DomainError);
}

TEST_CASE("dynamic program matches the oracle") {
    Rng rng(79);
    for (int i = 0; i < 300; ++i) {
        const auto d = random_connected_permutation(std::uniform_int_distribution<std::size_t>(1, 11)(rng), rng);
        const Graph g = permutation_to_graph(d);
        const WitnessedNumber r = permutation_monophonic_number(d);
        CHECK(r.value == oracle_m(g));
        CHECK(int(r.witness.size()) == r.value);
        CHECK(is_convexity_set(g, r.witness, ConvexityKind::monophonic));
    }
}

TEST_CASE("larger diagrams run without the oracle") {
    Rng rng(83);
    const auto d = random_connected_permutation(30, rng);
    const WitnessedNumber r = permutation_monophonic_number(d);
    CHECK(r.value >= 2);
    const auto pairs = betweenness_pair_masks(permutation_to_graph(d));
    CHECK(pair_closure(pairs, 30, to_mask(r.witness)) == full_mask(30));
}

TEST_CASE("cover tables use at most four boundary vertices per side") {
    const SuiteReport r = run_suite("cover-bound", {5, 60, 1});
    CHECK(r.cases == 60);
    CHECK(r.failures.empty());
}

}
