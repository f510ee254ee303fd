#include "convexia/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "convexia/errors.hpp"
#include "convexia/tree_family.hpp"

namespace convexia {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Graph relabel(const Graph& g, std::span<const Vertex> image) {
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges())
        edges.emplace_back(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]);
    return Graph(g.order(), edges);
}

Graph shuffled(const Graph& g, Rng& rng) {
    std::vector<Vertex> image(g.order());
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    return relabel(g, image);
}

}  // namespace

Graph random_tree(std::size_t n, Rng& rng) {
    if (n <= 1) return Graph(n);
    std::vector<Edge> edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
        return Graph(2, edges);
    }
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = static_cast<Vertex>(uniform(rng, 0, n - 1));
    std::vector<int> degree(n, 1);
    for (Vertex c : code) ++degree[static_cast<std::size_t>(c)];
    std::set<Vertex> leaves;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(static_cast<Vertex>(v));
    for (Vertex c : code) {
        const Vertex leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
    }
    edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
    return Graph(n, edges);
}

PermutationDiagram random_permutation(std::size_t n, Rng& rng) {
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    return PermutationDiagram(std::move(pi));
}

PermutationDiagram random_connected_permutation(std::size_t n, Rng& rng) {
    while (true) {
        PermutationDiagram d = random_permutation(n, rng);
        if (is_connected(permutation_to_graph(d))) return d;
    }
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng)) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return Graph(n, edges);
}

LabeledIntervalGraph random_unit_interval(std::size_t n, Rng& rng) {
    constexpr long unit = 100;
    IntervalFamily family;
    family.denominator = unit;
    long left = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) left += static_cast<long>(uniform(rng, 0, unit));
        family.intervals.push_back({"I" + std::to_string(i + 1), left, left + unit});
    }
    return {interval_graph(family), std::move(family)};
}

Graph make_spider(std::size_t feet, bool thin, const Graph& head) {
    if (feet < 2) throw DomainError("a spider needs at least two feet");
    const std::size_t k = feet;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (j > i) edges.emplace_back(static_cast<Vertex>(k + i), static_cast<Vertex>(k + j));
            if ((i == j) == thin) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(k + j));
        }
    const auto base = static_cast<Vertex>(2 * k);
    for (const auto& [a, b] : head.edges()) edges.emplace_back(base + a, base + b);
    for (std::size_t r = 0; r < head.order(); ++r)
        for (std::size_t j = 0; j < k; ++j) edges.emplace_back(base + static_cast<Vertex>(r), static_cast<Vertex>(k + j));
    return Graph(2 * k + head.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const auto shift = static_cast<Vertex>(a.order());
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(a.order() + b.order(), edges);
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = disjoint_union(a, b).edges();
    const auto shift = static_cast<Vertex>(a.order());
    for (std::size_t u = 0; u < a.order(); ++u)
        for (std::size_t v = 0; v < b.order(); ++v) edges.emplace_back(static_cast<Vertex>(u), shift + static_cast<Vertex>(v));
    return Graph(a.order() + b.order(), edges);
}

namespace {

Graph tree_cograph_rec(std::size_t n, Rng& rng) {
    const std::size_t pick = n <= 2 ? 0 : uniform(rng, 0, 3);
    if (pick == 0) return random_tree(n, rng);
    if (pick == 1) return complement(random_tree(n, rng));
    const std::size_t k = uniform(rng, 1, n - 1);
    Graph a = tree_cograph_rec(k, rng);
    Graph b = tree_cograph_rec(n - k, rng);
    return pick == 2 ? disjoint_union(a, b) : join(a, b);
}

Graph p4_sparse_rec(std::size_t n, Rng& rng) {
    if (n == 1) return Graph(1);
    const std::size_t pick = n < 4 ? uniform(rng, 0, 1) : uniform(rng, 0, 3);
    if (pick >= 2) {
        const std::size_t feet = uniform(rng, 2, n / 2);
        const std::size_t rest = n - 2 * feet;
        return make_spider(feet, rng() % 2 == 0, rest == 0 ? Graph(0) : p4_sparse_rec(rest, rng));
    }
    const std::size_t k = uniform(rng, 1, n - 1);
    Graph a = p4_sparse_rec(k, rng);
    Graph b = p4_sparse_rec(n - k, rng);
    return pick == 0 ? disjoint_union(a, b) : join(a, b);
}

}  // namespace

Graph random_tree_cograph(std::size_t n, Rng& rng) {
    if (n == 0) return Graph(0);
    return shuffled(tree_cograph_rec(n, rng), rng);
}

Graph random_p4_sparse(std::size_t n, Rng& rng) {
    if (n == 0) return Graph(0);
    return shuffled(p4_sparse_rec(n, rng), rng);
}

namespace {

using Cells = std::vector<std::vector<Vertex>>;

/// Splits cells by neighbor counts into each cell until equitable. Split
/// pieces keep count order, so the result depends only on the isomorphism type.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const Mask splitter = to_mask(cells[s]);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2) continue;
                std::vector<std::pair<int, Vertex>> keyed;
                for (Vertex v : cells[c]) keyed.emplace_back(popcount(g.neighbor_mask(v) & splitter), v);
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                if (keyed.front().first == keyed.back().first) continue;
                Cells pieces;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
                    pieces.back().push_back(keyed[i].second);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

std::uint64_t code_of(const Graph& g, const Cells& cells) {
    std::vector<Vertex> order;
    for (const auto& c : cells) order.push_back(c.front());
    std::uint64_t code = 0;
    int index = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j, ++index)
            if (g.adjacent(order[i], order[j])) code |= std::uint64_t{1} << index;
    return code;
}

void search(const Graph& g, Cells cells, std::uint64_t& best, bool& found) {
    refine(g, cells);
    const auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
        const std::uint64_t code = code_of(g, cells);
        if (!found || code > best) best = code;
        found = true;
        return;
    }
    const auto at = static_cast<std::size_t>(target - cells.begin());
    for (Vertex v : cells[at]) {
        Cells next = cells;
        auto& cell = next[at];
        cell.erase(std::find(cell.begin(), cell.end(), v));
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(at), std::vector<Vertex>{v});
        search(g, std::move(next), best, found);
    }
}

std::string ahu(const Graph& t, Vertex v, Vertex parent) {
    std::vector<std::string> parts;
    for (Vertex w : t.neighbors(v))
        if (w != parent) parts.push_back(ahu(t, w, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    return out + ")";
}

std::string tree_code(const Graph& t) {
    const auto path = tree_diametral_path(t);
    const std::size_t d = path.size() - 1;
    std::string code = ahu(t, path[d / 2], -1);
    if (d % 2 == 1) code = std::min(code, ahu(t, path[d / 2 + 1], -1));
    return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.order() > 11) throw BudgetError("canonical labeling", 11);
    if (g.order() == 0) return 0;
    std::uint64_t best = 0;
    bool found = false;
    search(g, Cells{all_vertices(g)}, best, found);
    return best;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
    std::vector<Edge> edges;
    int index = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++index)
            if (code >> index & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(n, edges);
}

std::vector<Graph> all_graphs(std::size_t n) {
    if (n > 10) throw BudgetError("graph enumeration", 10);
    std::set<std::uint64_t> level{0};
    for (std::size_t k = 1; k < n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            const Graph base = graph_from_code(k, code);
            const std::vector<Edge> edges = base.edges();
            for (Mask nb = 0; nb < (Mask{1} << k); ++nb) {
                std::vector<Edge> grown = edges;
                for (Mask r = nb; r != 0; r &= r - 1) grown.emplace_back(std::countr_zero(r), static_cast<Vertex>(k));
                next.insert(canonical_code(Graph(k + 1, grown)));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    if (n == 0) return {Graph(0)};
    for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
    return out;
}

std::vector<Graph> all_trees(std::size_t n) {
    if (n == 0) return {};
    std::vector<Graph> level{Graph(1)};
    for (std::size_t k = 1; k < n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& t : level)
            for (std::size_t v = 0; v < k; ++v) {
                std::vector<Edge> edges = t.edges();
                edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(k));
                Graph grown(k + 1, edges);
                if (seen.insert(tree_code(grown)).second) next.push_back(std::move(grown));
            }
        level = std::move(next);
    }
    return level;
}

}  // namespace convexia
