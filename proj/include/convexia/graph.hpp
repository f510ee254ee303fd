#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace convexia {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex indices of some host graph.
using VertexSet = std::vector<Vertex>;

/// Bit-per-vertex set for graphs with at most 64 vertices. The exact oracles
/// and the small-graph machinery work on masks.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaskBits = 64;
inline constexpr int kInfinite = std::numeric_limits<int>::max();

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(std::size_t n) { return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1; }

Mask to_mask(std::span<const Vertex> set);
VertexSet from_mask(Mask m);

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Adjacency is kept as sorted neighbor lists; graphs with n <= 64 also carry
/// a neighbor bitmask per vertex so that adjacency tests and set algebra are
/// O(1). Optional string labels ride along for display and are ignored by
/// equality.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// raise DomainError, indices >= n raise RangeError.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    bool has_masks() const noexcept { return !masks_.empty() || adj_.empty(); }
    Mask neighbor_mask(Vertex v) const { return masks_[static_cast<std::size_t>(v)]; }
    Mask closed_mask(Vertex v) const { return masks_[static_cast<std::size_t>(v)] | bit(v); }
    Mask vertex_mask() const { return full_mask(order()); }

    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;
    std::string label(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Mask> masks_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

enum class GraphFormat { graph6, edge_list };

Graph load_graph(std::string_view text, GraphFormat format);
std::string serialize(const Graph& g, GraphFormat format);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// ---- elementary queries ----------------------------------------------------

Graph complement(const Graph& g);

/// Subgraph induced by `vertices`; local index i corresponds to vertices[i].
/// Labels are carried over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Components of the subgraph induced by the vertices in `alive`.
std::vector<VertexSet> components(const Graph& g, std::span<const Vertex> alive);

bool is_connected(const Graph& g);

/// BFS distances from `source`; kInfinite marks unreachable vertices.
std::vector<int> distances(const Graph& g, Vertex source);

/// Row-major n x n distance table (BFS from every vertex).
std::vector<int> distance_matrix(const Graph& g);

/// Maximum pairwise distance; kInfinite when g is disconnected. 0 for n <= 1.
int diameter(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> set);
bool is_independent(const Graph& g, std::span<const Vertex> set);
bool is_complete(const Graph& g);

VertexSet simplicial_vertices(const Graph& g);

/// True iff connected with n-1 edges. K1 counts as a tree; the empty graph does not.
bool is_tree(const Graph& g);

/// Perfect-elimination check on a maximum cardinality search order.
bool is_chordal(const Graph& g);

/// Vertex set helpers on sorted vectors.
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
bool contains(std::span<const Vertex> set, Vertex v);
VertexSet all_vertices(const Graph& g);

/// Open neighborhood of a set: vertices outside `set` with a neighbor inside.
VertexSet neighborhood(const Graph& g, std::span<const Vertex> set);

}  // namespace convexia
