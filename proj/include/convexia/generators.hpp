#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "convexia/at_free.hpp"
#include "convexia/decomposition.hpp"
#include "convexia/graph.hpp"
#include "convexia/permutation.hpp"

namespace convexia {

using Rng = std::mt19937_64;

/// Uniform labeled tree via a random Pruefer sequence.
Graph random_tree(std::size_t n, Rng& rng);

PermutationDiagram random_permutation(std::size_t n, Rng& rng);

/// Resamples until the permutation graph is connected.
PermutationDiagram random_connected_permutation(std::size_t n, Rng& rng);

/// G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Unit intervals whose consecutive left endpoints differ by at most the
/// unit, so the graph is connected. Endpoints are in hundredths.
LabeledIntervalGraph random_unit_interval(std::size_t n, Rng& rng);

/// Feet 0..k-1, body k..2k-1 (foot i partnered with body k+i), head after.
/// Thin: foot i adjacent to its partner only; thick: to every other body vertex.
Graph make_spider(std::size_t feet, bool thin, const Graph& head = Graph(0));

/// Disjoint union and join of two graphs; b's vertices follow a's.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

/// Random tree-cograph with exactly n vertices: trees, cotrees, unions, joins.
Graph random_tree_cograph(std::size_t n, Rng& rng);

/// Random P4-sparse graph with exactly n vertices: unions, joins, spiders.
Graph random_p4_sparse(std::size_t n, Rng& rng);

/// Canonical upper-triangle code (row-major i<j bits) of the canonical
/// relabeling; equal codes iff isomorphic. n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// The graph with n vertices encoded by a canonical code.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// One representative per isomorphism class, in canonical labeling, sorted by code.
std::vector<Graph> all_graphs(std::size_t n);

/// One representative per isomorphism class of trees on n vertices.
std::vector<Graph> all_trees(std::size_t n);

}  // namespace convexia
