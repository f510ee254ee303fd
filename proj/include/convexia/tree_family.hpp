#pragma once

#include <limits>
#include <vector>

#include "convexia/convexity.hpp"
#include "convexia/graph.hpp"

namespace convexia {

/// A tree hung from `root`. `order` lists vertices parents-first (BFS).
struct RootedTree {
    Vertex root = 0;
    std::vector<Vertex> parent;  // -1 at the root
    std::vector<std::vector<Vertex>> children;
    std::vector<Vertex> order;
};

RootedTree root_tree(const Graph& t, Vertex root);

/// Saturating "infinite" count used by the tree DP.
inline constexpr int kInfeasible = std::numeric_limits<int>::max();

inline int saturating_add(int a, int b) { return (a == kInfeasible || b == kInfeasible) ? kInfeasible : a + b; }

/// Per-vertex DP values for minimum 2-geodetic sets of a rooted tree,
/// counting selected vertices inside the subtree of v:
///   alpha: v selected;
///   beta:  v unselected with exactly one selected child (needs a selected parent);
///   gamma: v unselected with at least two selected children.
struct DpState {
    int alpha = kInfeasible;
    int beta = kInfeasible;
    int gamma = kInfeasible;
};

std::vector<DpState> two_geodetic_states(const RootedTree& tree);

/// g(T): the leaves. K1 counts its single vertex as a leaf.
WitnessedNumber tree_geodetic_number(const Graph& t);

/// g2(T) by the three-state DP rooted at `root`, witness by back-tracking.
WitnessedNumber tree_2geodetic_number(const Graph& t, Vertex root = 0);

/// Which closed-form case applies to the complement of a tree.
enum class CotreeCase {
    small_diameter,  // diam(T) <= 2
    diameter_three,  // diam(T) == 3
    degree_two,      // a vertex of degree two and diam(T) > 3
    general,         // everything else
};

CotreeCase cotree_case(const Graph& t);

/// g of the complement of tree t (vertex indices shared with t).
WitnessedNumber cotree_geodetic_number(const Graph& t);

/// g2 of the complement of tree t.
WitnessedNumber cotree_2geodetic_number(const Graph& t);

/// A longest path of the tree, endpoint to endpoint.
std::vector<Vertex> tree_diametral_path(const Graph& t);

}  // namespace convexia
