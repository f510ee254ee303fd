#pragma once

#include <optional>
#include <string>
#include <vector>

#include "convexia/convexity.hpp"
#include "convexia/graph.hpp"
#include "json.hpp"

namespace convexia {

struct AsteroidalTriple {
    Vertex x = 0;
    Vertex y = 0;
    Vertex z = 0;

    friend bool operator==(const AsteroidalTriple&, const AsteroidalTriple&) = default;
};

/// For every vertex v, the component index of each vertex in G - N[v]
/// (-1 for members of N[v]). Row-major n*n.
std::vector<int> avoiding_component_table(const Graph& g);

/// Lexicographically first asteroidal triple, or nullopt if g is AT-free.
std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g);

inline bool is_at_free(const Graph& g) { return !find_asteroidal_triple(g).has_value(); }

/// C_a(b): the component of G - N[a] containing b; empty when b is in N[a].
VertexSet component_avoiding(const Graph& g, Vertex a, Vertex b);

/// C_x(y) and C_y(x) intersected. Throws DomainError for adjacent or equal x, y.
VertexSet between_set(const Graph& g, Vertex x, Vertex y);

/// Betweenness data of a nonadjacent pair: delta_x = N(C_x(y)) and
/// a_x = V - (C_x(y) + delta_x), and symmetrically for y.
struct PairStructure {
    Vertex x = 0;
    Vertex y = 0;
    VertexSet between;
    VertexSet delta_x;
    VertexSet a_x;
    VertexSet delta_y;
    VertexSet a_y;
};

PairStructure pair_structure(const Graph& g, Vertex x, Vertex y);

/// The nonadjacent pair with the most vertices between them (first in
/// lexicographic order on ties). Requires g connected and not complete.
PairStructure extremal_pair(const Graph& g);

/// Nonadjacent pairs ordered by between-count, largest first (ties lexicographic).
std::vector<std::pair<Vertex, Vertex>> pairs_by_betweenness(const Graph& g);

/// A component C of G - N[x] with x chosen to make C as large as possible
/// (smallest x, then first component, on ties), delta = N(C) and
/// rest = V - (C + delta). Every vertex of rest is adjacent to all of delta.
struct LargestAvoidingSplit {
    Vertex x = 0;
    VertexSet component;
    VertexSet delta;
    VertexSet rest;
};

/// Requires g connected and not complete.
LargestAvoidingSplit largest_avoiding_split(const Graph& g);

/// Every induced x,y-path dominates g (equivalently every path does).
bool is_dominating_pair(const Graph& g, Vertex x, Vertex y, const OracleConfig& cfg = {});

/// Outcome of checking that Steiner sets are geodetic on one graph.
struct SteinerGeodeticReport {
    std::string graph_id;
    int geodetic = 0;
    int steiner = 0;
    int sets_checked = 0;
    std::vector<VertexSet> violations;  // Steiner sets that are not geodetic
};

nlohmann::json to_json(const SteinerGeodeticReport& report);

/// Checks every minimum Steiner set, and every Steiner set of size at most
/// `size_bound` when that is larger, for being geodetic. Requires g connected
/// and AT-free.
SteinerGeodeticReport verify_steiner_implies_geodetic(const Graph& g, std::string graph_id, const OracleConfig& cfg = {},
                                                      int size_bound = 0);

/// True iff the vertex set of every Steiner W-tree spans a caterpillar.
bool caterpillar_realization(const Graph& g, std::span<const Vertex> w, const OracleConfig& cfg = {});

/// h plus two nonadjacent vertices joined to all of h (indices n and n+1).
Graph cm_reduction(const Graph& h);

/// Brute-force clique number (n <= 64).
int clique_number(const Graph& g);

/// For connected chordal graphs the monophonic number is the number of
/// simplicial vertices.
WitnessedNumber chordal_monophonic_number(const Graph& g);

/// Closed intervals with endpoints num/denominator.
struct IntervalFamily {
    struct Interval {
        std::string label;
        long left = 0;
        long right = 0;
    };
    long denominator = 1;
    std::vector<Interval> intervals;
};

Graph interval_graph(const IntervalFamily& family);

struct LabeledIntervalGraph {
    Graph graph;
    IntervalFamily intervals;
};

/// The nine-interval unit-interval graph with g = 4 < s = 5.
LabeledIntervalGraph figure1_graph();

/// `copies` disjoint, non-overlapping translates of the same family.
LabeledIntervalGraph figure1_copies(int copies);

}  // namespace convexia
