#pragma once

#include <optional>
#include <vector>

#include "convexia/convexity.hpp"
#include "convexia/graph.hpp"

namespace convexia {

/// Feet S, body K and head R of a spider. For a thick spider the naming
/// follows the same convention: R is joined to the body K.
/// `partner[i]` is the body vertex matched (thin) or anti-matched (thick)
/// with `feet[i]`.
struct SpiderPartition {
    VertexSet feet;
    VertexSet body;
    VertexSet head;
    std::vector<Vertex> partner;
    bool thin = true;
};

/// Checks every defining condition of the partition against g.
bool is_valid_spider(const Graph& g, const SpiderPartition& spider);

/// Thin spider first, then thick; nullopt if g is neither.
std::optional<SpiderPartition> find_spider(const Graph& g);

enum class NodeKind { union_node, join_node, tree_leaf, cotree_leaf, spider };

const char* to_string(NodeKind kind);

/// Vertex sets are in the indices of the decomposed graph. A join node's
/// children are the co-components; a spider's only child (if any) is the
/// decomposition of its head.
struct DecompositionTree {
    NodeKind kind = NodeKind::tree_leaf;
    VertexSet vertices;
    std::vector<DecompositionTree> children;
    std::optional<SpiderPartition> spider;
};

/// Tree leaf, cotree leaf, union over components, join over co-components,
/// tried in that order at every level.
std::optional<DecompositionTree> decompose_tree_cograph(const Graph& g);

/// Union, join, spider (recursing on the head), single vertex.
std::optional<DecompositionTree> decompose_p4_sparse(const Graph& g);

/// Number of the given kind (geodetic or 2-geodetic) from a decomposition of g.
WitnessedNumber decomposition_number(const Graph& g, const DecompositionTree& tree, ConvexityKind kind);

/// g or g2 of a tree-cograph. Throws DomainError outside the class.
WitnessedNumber tree_cograph_number(const Graph& g, ConvexityKind kind);

/// g or g2 of a P4-sparse graph. Throws DomainError outside the class.
WitnessedNumber p4_sparse_number(const Graph& g, ConvexityKind kind);

/// Complements of the connected components of the complement.
std::vector<VertexSet> co_components(const Graph& g);

}  // namespace convexia
