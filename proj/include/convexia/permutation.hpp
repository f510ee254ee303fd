#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "convexia/convexity.hpp"
#include "convexia/graph.hpp"

namespace convexia {

/// Two horizontal lines. The top line carries labels 1..n in order; the
/// bottom line carries pi[0], pi[1], ... left to right. Label i is vertex i-1.
class PermutationDiagram {
public:
    PermutationDiagram() = default;
    /// Throws DomainError unless `pi` is a permutation of 1..n.
    explicit PermutationDiagram(std::vector<int> pi);

    std::size_t order() const { return pi_.size(); }
    const std::vector<int>& pi() const { return pi_; }

    int top(Vertex v) const { return v; }
    int bottom(Vertex v) const { return bottom_[static_cast<std::size_t>(v)]; }
    /// Leftmost of the two endpoints.
    int left(Vertex v) const { return std::min(top(v), bottom(v)); }

    friend bool operator==(const PermutationDiagram&, const PermutationDiagram&) = default;

private:
    std::vector<int> pi_;
    std::vector<int> bottom_;
};

/// One line of whitespace-separated integers.
PermutationDiagram parse_permutation(std::string_view text);
std::string to_string(const PermutationDiagram& d);

Graph permutation_to_graph(const PermutationDiagram& d);

/// The diagram restricted to `vertices` (sorted). Vertex k of the result is
/// vertices[k].
PermutationDiagram induced_diagram(const PermutationDiagram& d, std::span<const Vertex> vertices);

/// Gap i lies between the i-th and (i+1)-th point of a line, 0 <= i <= n.
struct Scanline {
    int top_gap = 0;
    int bottom_gap = 0;

    friend bool operator==(const Scanline&, const Scanline&) = default;
};

VertexSet crossing_set(const PermutationDiagram& d, Scanline s);

struct ScanlineSet {
    Scanline line;
    VertexSet crossing;
};

/// One scanline per distinct crossing set, first in (top_gap, bottom_gap) order.
std::vector<ScanlineSet> scanline_separator_set(const PermutationDiagram& d);

/// G - S has at least two components C with N(C) = S.
bool is_minimal_separator(const Graph& g, std::span<const Vertex> s);

/// Every minimal separator, by brute force over vertex subsets (n <= 20).
std::vector<VertexSet> minimal_separators_brute(const Graph& g);

/// Monophonic number of a join from its factors: a factor is either a
/// clique (`clique` set, `value` = its order) or a non-clique with `value` = m.
struct JoinFactor {
    bool clique = false;
    int value = 0;
};

int join_monophonic_number(JoinFactor a, JoinFactor b);

/// For z between x and y: some a in N(C_z(x)) and b in N(C_z(y)) are distinct
/// and nonadjacent. Necessary for z in J(x,y) but not sufficient
/// (pi = 6 1 7 2 8 5 4 3, x = 0, y = 7, z = 1). Throws DomainError if z is not between.
bool crossing_pair_condition(const Graph& g, Vertex x, Vertex y, Vertex z);

/// z in J(x,y) for z between x and y on an AT-free graph: the crossing pair
/// a, b must also be reachable from x and y through sides that avoid N(b)
/// and N(a) respectively. Throws DomainError if z is not between.
bool monophonic_membership(const Graph& g, Vertex x, Vertex y, Vertex z);

/// J(x,y) assembled from the betweenness structure instead of path search.
/// Valid on AT-free graphs.
VertexSet monophonic_pair_closure(const Graph& g, Vertex x, Vertex y);

/// Row-major n*n pair table like monophonic_pair_masks, built from
/// monophonic_pair_closure. Requires n <= 64.
std::vector<Mask> betweenness_pair_masks(const Graph& g);

/// Two minimal separators with the vertices between them (C1 and C2 intersected).
struct SeparatorPair {
    VertexSet s1;
    VertexSet s2;
    VertexSet between;
    std::vector<VertexSet> components;  // components of G[between]
};

/// Parallel pairs of distinct scanline minimal separators with a nonempty
/// between set, each unordered pair once.
std::vector<SeparatorPair> parallel_separator_pairs(const PermutationDiagram& d);

/// Parallel pairs in which every cross pair is equal or adjacent, keeping those
/// whose between set is not strictly contained in that of another such pair.
std::vector<SeparatorPair> successional_pairs(const PermutationDiagram& d);

/// Minimum covers of one residue component, keyed by the boundary vertices
/// chosen into Q. Boundary vertices are split by side: `left` ones start
/// before the component does.
struct CoverTable {
    VertexSet component;
    VertexSet left;
    VertexSet right;
    bool joined_clique = false;  // boundary is a clique joined to the component
    struct Entry {
        int cost = 0;
        Mask inside = 0;  // chosen vertices of the component
    };
    std::map<Mask, Entry> entries;  // boundary choice -> cheapest cover
};

/// Per-side limit on boundary vertices in a cover.
inline constexpr int kBoundaryPicks = 4;

/// Covers of `component` by anchors + boundary choice + vertices inside,
/// using `pairs` for J. Boundary choices keep at most `per_side` per side.
CoverTable build_cover_table(const PermutationDiagram& d, const Graph& g, std::span<const Mask> pairs, Mask anchors,
                             std::span<const Vertex> component, int per_side = kBoundaryPicks);

/// Fewest vertices Q of G - anchors such that anchors + Q covers `component`.
/// With per_side >= 0 at most that many boundary vertices per side may be used,
/// and Q is otherwise confined to the component. Exhaustive (n <= 64).
int cover_number(const PermutationDiagram& d, const Graph& g, std::span<const Mask> pairs, Mask anchors,
                 std::span<const Vertex> component, int per_side);

/// Outcome for one anchor pair (x,y) assumed to be in Q.
struct AnchoredSolution {
    Vertex x = 0;
    Vertex y = 0;
    VertexSet closure;                  // J(x,y)
    std::vector<VertexSet> components;  // residue components, left to right
    std::optional<VertexSet> witness;   // nullopt if the tables found no verified cover
};

AnchoredSolution solve_anchored(const PermutationDiagram& d, const Graph& g, std::span<const Mask> pairs, Vertex x,
                                Vertex y);

/// m(G) of a connected permutation graph. Throws DomainError when disconnected
/// and BudgetError for n > 64.
WitnessedNumber permutation_monophonic_number(const PermutationDiagram& d);

}  // namespace convexia
