#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "convexia/graph.hpp"

namespace convexia {

enum class ConvexityKind { geodetic, two_geodetic, monophonic, steiner };

std::string_view to_string(ConvexityKind kind);

/// An invariant value together with a vertex set certifying it.
struct WitnessedNumber {
    int value = 0;
    VertexSet witness;

    friend bool operator==(const WitnessedNumber&, const WitnessedNumber&) = default;
};

/// Limits for the exponential oracles. `cap` bounds the vertex count for
/// subset enumeration and chordless-path search, and the terminal count for
/// Steiner computations. Values above 64 are rejected.
struct OracleConfig {
    std::size_t cap = 16;
};

/// I(S): S plus every vertex on a shortest path between two members of S.
/// Pairs in different components contribute nothing.
VertexSet geodetic_interval(const Graph& g, std::span<const Vertex> s);

/// J(S): S plus every vertex on a chordless path between two members of S,
/// found by exhaustive induced-path search.
VertexSet monophonic_closure(const Graph& g, std::span<const Vertex> s, const OracleConfig& cfg = {});

/// Fewest edges of a connected subgraph containing all of `w`.
int steiner_distance(const Graph& g, std::span<const Vertex> w, const OracleConfig& cfg = {});

/// Vertices lying on some Steiner W-tree.
VertexSet steiner_interval(const Graph& g, std::span<const Vertex> w, const OracleConfig& cfg = {});

bool is_convexity_set(const Graph& g, std::span<const Vertex> s, ConvexityKind kind, const OracleConfig& cfg = {});

/// Exact minimum by subset enumeration in increasing cardinality. Simplicial
/// vertices are placed in the seed (they belong to every set of each kind).
/// Among minimum sets the one whose non-seed part comes first in
/// lexicographic order is returned. Disconnected graphs are solved per
/// component and summed; the steiner kind requires a connected graph.
WitnessedNumber min_convexity_number(const Graph& g, ConvexityKind kind, const OracleConfig& cfg = {});

/// Every minimum set of the given kind (g must be connected).
std::vector<VertexSet> minimum_convexity_sets(const Graph& g, ConvexityKind kind, const OracleConfig& cfg = {});

/// c_m(G): largest proper subset C with J(C) = C.
WitnessedNumber max_proper_monophonically_convex(const Graph& g, const OracleConfig& cfg = {});

// ---- mask-level building blocks (n <= 64) --------------------------------------

/// Row-major n*n table; entry (a,b) is the mask of I({a,b}).
std::vector<Mask> geodetic_pair_masks(const Graph& g);

/// Row-major n*n table; entry (a,b) is the mask of J({a,b}), computed by
/// induced-path enumeration from every vertex.
std::vector<Mask> monophonic_pair_masks(const Graph& g);

/// Closure of `s` under a pair table: s | OR over pairs in s.
Mask pair_closure(std::span<const Mask> pairs, std::size_t n, Mask s);

/// Every vertex outside `s` has two nonadjacent neighbors in `s`.
bool is_two_geodetic_mask(const Graph& g, Mask s);

/// Dreyfus-Wagner table for terminals `w`: entry v is the Steiner distance
/// of w + {v}. Requires g connected.
std::vector<int> steiner_extension_costs(const Graph& g, std::span<const Vertex> w, std::span<const int> dist);

}  // namespace convexia
