#include "convexia/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

#include "convexia/errors.hpp"
#include "convexia/tree_family.hpp"

namespace convexia {

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::union_node: return "union";
        case NodeKind::join_node: return "join";
        case NodeKind::tree_leaf: return "tree";
        case NodeKind::cotree_leaf: return "cotree";
        case NodeKind::spider: return "spider";
    }
    return "?";
}

std::vector<VertexSet> co_components(const Graph& g) { return components(complement(g)); }

bool is_valid_spider(const Graph& g, const SpiderPartition& sp) {
    const std::size_t k = sp.feet.size();
    if (k < 2 || sp.body.size() != k || sp.partner.size() != k) return false;
    if (sp.feet.size() + sp.body.size() + sp.head.size() != g.order()) return false;
    if (!is_independent(g, sp.feet) || !is_clique(g, sp.body)) return false;
    for (Vertex r : sp.head) {
        for (Vertex b : sp.body)
            if (!g.adjacent(r, b)) return false;
        for (Vertex s : sp.feet)
            if (g.adjacent(r, s)) return false;
    }
    VertexSet partners = sp.partner;
    std::sort(partners.begin(), partners.end());
    if (partners != sp.body) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (Vertex b : sp.body) {
            const bool matched = b == sp.partner[i];
            if (g.adjacent(sp.feet[i], b) != (sp.thin ? matched : !matched)) return false;
        }
    return true;
}

namespace {

std::optional<SpiderPartition> find_thin_spider(const Graph& g) {
    SpiderPartition sp;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) == 1) {
            sp.feet.push_back(static_cast<Vertex>(v));
            sp.partner.push_back(g.neighbors(static_cast<Vertex>(v))[0]);
        }
    if (sp.feet.size() < 2) return std::nullopt;
    sp.body = sp.partner;
    std::sort(sp.body.begin(), sp.body.end());
    if (std::adjacent_find(sp.body.begin(), sp.body.end()) != sp.body.end()) return std::nullopt;
    sp.head = set_difference(set_difference(all_vertices(g), sp.feet), sp.body);
    sp.thin = true;
    if (!is_valid_spider(g, sp)) return std::nullopt;
    return sp;
}

}  // namespace

std::optional<SpiderPartition> find_spider(const Graph& g) {
    if (auto thin = find_thin_spider(g)) return thin;
    // A thick spider is the complement of a thin one with feet and body swapped.
    const Graph co = complement(g);
    auto other = find_thin_spider(co);
    if (!other) return std::nullopt;
    SpiderPartition sp;
    sp.feet = other->body;
    sp.body = other->feet;
    sp.head = other->head;
    sp.thin = false;
    for (Vertex foot : sp.feet) {
        const auto it = std::find(other->partner.begin(), other->partner.end(), foot);
        sp.partner.push_back(other->feet[static_cast<std::size_t>(it - other->partner.begin())]);
    }
    if (!is_valid_spider(g, sp)) return std::nullopt;
    return sp;
}

namespace {

VertexSet to_global(std::span<const Vertex> local, std::span<const Vertex> global) {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(global[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

DecompositionTree make_node(NodeKind kind, VertexSet vertices) {
    DecompositionTree node;
    node.kind = kind;
    node.vertices = std::move(vertices);
    return node;
}

using Decomposer = std::optional<DecompositionTree> (*)(const Graph&, const VertexSet&);

/// Recurses on each part; nullopt if any part fails.
std::optional<DecompositionTree> split(const Graph& g, const VertexSet& global, NodeKind kind,
                                       const std::vector<VertexSet>& parts, Decomposer recurse) {
    DecompositionTree node = make_node(kind, global);
    for (const auto& part : parts) {
        auto child = recurse(induced_subgraph(g, part), to_global(part, global));
        if (!child) return std::nullopt;
        node.children.push_back(std::move(*child));
    }
    return node;
}

std::optional<DecompositionTree> tree_cograph_rec(const Graph& g, const VertexSet& global) {
    if (is_tree(g)) return make_node(NodeKind::tree_leaf, global);
    const Graph co = complement(g);
    if (is_tree(co)) return make_node(NodeKind::cotree_leaf, global);
    if (auto comps = components(g); comps.size() > 1)
        return split(g, global, NodeKind::union_node, comps, tree_cograph_rec);
    if (auto cocomps = components(co); cocomps.size() > 1)
        return split(g, global, NodeKind::join_node, cocomps, tree_cograph_rec);
    return std::nullopt;
}

std::optional<DecompositionTree> p4_sparse_rec(const Graph& g, const VertexSet& global) {
    if (g.order() == 1) return make_node(NodeKind::tree_leaf, global);
    if (auto comps = components(g); comps.size() > 1)
        return split(g, global, NodeKind::union_node, comps, p4_sparse_rec);
    if (auto cocomps = co_components(g); cocomps.size() > 1)
        return split(g, global, NodeKind::join_node, cocomps, p4_sparse_rec);
    auto spider = find_spider(g);
    if (!spider) return std::nullopt;
    DecompositionTree node = make_node(NodeKind::spider, global);
    if (!spider->head.empty()) {
        auto head = p4_sparse_rec(induced_subgraph(g, spider->head), to_global(spider->head, global));
        if (!head) return std::nullopt;
        node.children.push_back(std::move(*head));
    }
    SpiderPartition mapped;
    mapped.feet = to_global(spider->feet, global);
    mapped.body = to_global(spider->body, global);
    mapped.head = to_global(spider->head, global);
    mapped.thin = spider->thin;
    // feet were sorted locally and the map is monotone, so partner order carries over
    for (Vertex p : spider->partner) mapped.partner.push_back(global[static_cast<std::size_t>(p)]);
    node.spider = std::move(mapped);
    return node;
}

}  // namespace

std::optional<DecompositionTree> decompose_tree_cograph(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    return tree_cograph_rec(g, all_vertices(g));
}

std::optional<DecompositionTree> decompose_p4_sparse(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    return p4_sparse_rec(g, all_vertices(g));
}

namespace {

struct Numbers {
    WitnessedNumber geodetic;
    WitnessedNumber two_geodetic;
};

WitnessedNumber sorted_witness(VertexSet set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return {static_cast<int>(set.size()), std::move(set)};
}

WitnessedNumber lift(const WitnessedNumber& local, std::span<const Vertex> global) {
    return {local.value, to_global(local.witness, global)};
}

std::pair<Vertex, Vertex> first_nonadjacent_pair(const Graph& g, std::span<const Vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (!g.adjacent(set[i], set[j])) return {set[i], set[j]};
    throw std::logic_error("co-component without a nonadjacent pair");
}

/// Shared rule for a join node (identical for g and g2): with k co-components
/// of size >= 2, the answer is n (k = 0), g2 of the single large one (k = 1),
/// or min{4, g2 of the large ones} (k >= 2).
WitnessedNumber join_rule(const Graph& g, const DecompositionTree& node, const std::vector<Numbers>& parts) {
    std::vector<std::size_t> large;
    for (std::size_t i = 0; i < node.children.size(); ++i)
        if (node.children[i].vertices.size() >= 2) large.push_back(i);
    if (large.empty()) return sorted_witness(node.vertices);
    if (large.size() == 1) return parts[large[0]].two_geodetic;
    const WitnessedNumber* best = nullptr;
    for (std::size_t i : large)
        if (!best || parts[i].two_geodetic.value < best->value) best = &parts[i].two_geodetic;
    if (best->value <= 4) return *best;
    auto [a, b] = first_nonadjacent_pair(g, node.children[large[0]].vertices);
    auto [c, d] = first_nonadjacent_pair(g, node.children[large[1]].vertices);
    return sorted_witness({a, b, c, d});
}

Numbers spider_rule(const SpiderPartition& sp, const Numbers* head) {
    const auto s = static_cast<int>(sp.feet.size());
    if (head) {
        WitnessedNumber both = sorted_witness(set_union(sp.feet, head->two_geodetic.witness));
        return {both, both};
    }
    if (sp.thin) {
        VertexSet plus_body = sp.feet;
        plus_body.push_back(sp.body.front());
        return {sorted_witness(sp.feet), sorted_witness(std::move(plus_body))};
    }
    if (s == 2) {
        // Thick spider on four vertices is a P4.
        VertexSet plus_body = sp.feet;
        plus_body.push_back(sp.body.front());
        return {sorted_witness(sp.feet), sorted_witness(std::move(plus_body))};
    }
    return {sorted_witness(sp.feet), sorted_witness(sp.feet)};
}

Numbers evaluate(const Graph& g, const DecompositionTree& node) {
    switch (node.kind) {
        case NodeKind::tree_leaf: {
            const Graph t = induced_subgraph(g, node.vertices);
            return {lift(tree_geodetic_number(t), node.vertices), lift(tree_2geodetic_number(t), node.vertices)};
        }
        case NodeKind::cotree_leaf: {
            const Graph t = complement(induced_subgraph(g, node.vertices));
            return {lift(cotree_geodetic_number(t), node.vertices), lift(cotree_2geodetic_number(t), node.vertices)};
        }
        case NodeKind::union_node: {
            VertexSet g_set;
            VertexSet g2_set;
            for (const auto& child : node.children) {
                const Numbers part = evaluate(g, child);
                g_set.insert(g_set.end(), part.geodetic.witness.begin(), part.geodetic.witness.end());
                g2_set.insert(g2_set.end(), part.two_geodetic.witness.begin(), part.two_geodetic.witness.end());
            }
            return {sorted_witness(std::move(g_set)), sorted_witness(std::move(g2_set))};
        }
        case NodeKind::join_node: {
            std::vector<Numbers> parts;
            for (const auto& child : node.children) parts.push_back(evaluate(g, child));
            WitnessedNumber both = join_rule(g, node, parts);
            return {both, both};
        }
        case NodeKind::spider: {
            if (node.children.empty()) return spider_rule(*node.spider, nullptr);
            const Numbers head = evaluate(g, node.children.front());
            return spider_rule(*node.spider, &head);
        }
    }
    throw std::logic_error("unknown node kind");
}

void require_kind(ConvexityKind kind) {
    if (kind != ConvexityKind::geodetic && kind != ConvexityKind::two_geodetic)
        throw DomainError("class formulas cover the geodetic and 2-geodetic kinds only");
}

constexpr std::size_t kVerifyLimit = 1000;

}  // namespace

WitnessedNumber decomposition_number(const Graph& g, const DecompositionTree& tree, ConvexityKind kind) {
    require_kind(kind);
    const Numbers numbers = evaluate(g, tree);
    WitnessedNumber out = kind == ConvexityKind::geodetic ? numbers.geodetic : numbers.two_geodetic;
    if (g.order() <= kVerifyLimit && !is_convexity_set(g, out.witness, kind))
        throw std::logic_error("decomposition witness failed re-verification");
    return out;
}

WitnessedNumber tree_cograph_number(const Graph& g, ConvexityKind kind) {
    require_kind(kind);
    const auto tree = decompose_tree_cograph(g);
    if (!tree) throw DomainError("graph is not a tree-cograph");
    return decomposition_number(g, *tree, kind);
}

WitnessedNumber p4_sparse_number(const Graph& g, ConvexityKind kind) {
    require_kind(kind);
    const auto tree = decompose_p4_sparse(g);
    if (!tree) throw DomainError("graph is not P4-sparse");
    return decomposition_number(g, *tree, kind);
}

}  // namespace convexia
