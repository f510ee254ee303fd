#include "convexia/at_free.hpp"

#include <algorithm>

#include "convexia/detail/combinations.hpp"
#include "convexia/errors.hpp"

namespace convexia {

std::vector<int> avoiding_component_table(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> table(n * n, -1);
    std::vector<Vertex> stack;
    for (std::size_t v = 0; v < n; ++v) {
        int* row = table.data() + v * n;
        std::vector<char> blocked(n, 0);
        blocked[v] = 1;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) blocked[static_cast<std::size_t>(w)] = 1;
        int next_id = 0;
        for (std::size_t s = 0; s < n; ++s) {
            if (blocked[s] || row[s] >= 0) continue;
            row[s] = next_id;
            stack.push_back(static_cast<Vertex>(s));
            while (!stack.empty()) {
                const Vertex u = stack.back();
                stack.pop_back();
                for (Vertex w : g.neighbors(u))
                    if (!blocked[static_cast<std::size_t>(w)] && row[static_cast<std::size_t>(w)] < 0) {
                        row[static_cast<std::size_t>(w)] = next_id;
                        stack.push_back(w);
                    }
            }
            ++next_id;
        }
    }
    return table;
}

std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g) {
    const std::size_t n = g.order();
    const auto table = avoiding_component_table(g);
    auto comp = [&](std::size_t avoid, std::size_t v) { return table[avoid * n + v]; };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            if (comp(x, y) < 0) continue;
            for (std::size_t z = y + 1; z < n; ++z) {
                if (comp(x, z) != comp(x, y)) continue;
                if (comp(y, x) < 0 || comp(y, x) != comp(y, z)) continue;
                if (comp(z, x) < 0 || comp(z, x) != comp(z, y)) continue;
                return AsteroidalTriple{static_cast<Vertex>(x), static_cast<Vertex>(y), static_cast<Vertex>(z)};
            }
        }
    return std::nullopt;
}

VertexSet component_avoiding(const Graph& g, Vertex a, Vertex b) {
    if (a == b || g.adjacent(a, b)) return {};
    std::vector<char> blocked(g.order(), 0);
    blocked[static_cast<std::size_t>(a)] = 1;
    for (Vertex w : g.neighbors(a)) blocked[static_cast<std::size_t>(w)] = 1;
    VertexSet out{b};
    blocked[static_cast<std::size_t>(b)] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (Vertex w : g.neighbors(out[head]))
            if (!blocked[static_cast<std::size_t>(w)]) {
                blocked[static_cast<std::size_t>(w)] = 1;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void require_nonadjacent(const Graph& g, Vertex x, Vertex y) {
    const auto n = static_cast<Vertex>(g.order());
    if (x < 0 || y < 0 || x >= n || y >= n) throw RangeError("vertex outside range");
    if (x == y || g.adjacent(x, y)) throw DomainError("betweenness needs two distinct nonadjacent vertices");
}

}  // namespace

VertexSet between_set(const Graph& g, Vertex x, Vertex y) {
    require_nonadjacent(g, x, y);
    return set_intersection(component_avoiding(g, x, y), component_avoiding(g, y, x));
}

PairStructure pair_structure(const Graph& g, Vertex x, Vertex y) {
    require_nonadjacent(g, x, y);
    PairStructure p;
    p.x = x;
    p.y = y;
    const VertexSet cx = component_avoiding(g, x, y);
    const VertexSet cy = component_avoiding(g, y, x);
    p.between = set_intersection(cx, cy);
    const VertexSet all = all_vertices(g);
    p.delta_x = neighborhood(g, cx);
    p.a_x = set_difference(all, set_union(cx, p.delta_x));
    p.delta_y = neighborhood(g, cy);
    p.a_y = set_difference(all, set_union(cy, p.delta_y));
    return p;
}

std::vector<std::pair<Vertex, Vertex>> pairs_by_betweenness(const Graph& g) {
    const std::size_t n = g.order();
    const auto table = avoiding_component_table(g);
    struct Scored {
        int count;
        Vertex x;
        Vertex y;
    };
    std::vector<Scored> scored;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const int cxy = table[x * n + y];
            if (cxy < 0) continue;
            const int cyx = table[y * n + x];
            int count = 0;
            for (std::size_t z = 0; z < n; ++z) count += table[x * n + z] == cxy && table[y * n + z] == cyx;
            scored.push_back({count, static_cast<Vertex>(x), static_cast<Vertex>(y)});
        }
    std::stable_sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) { return a.count > b.count; });
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& s : scored) out.emplace_back(s.x, s.y);
    return out;
}

PairStructure extremal_pair(const Graph& g) {
    if (!is_connected(g)) throw DomainError("extremal pair needs a connected graph");
    const auto pairs = pairs_by_betweenness(g);
    if (pairs.empty()) throw DomainError("a complete graph has no nonadjacent pair");
    return pair_structure(g, pairs.front().first, pairs.front().second);
}

LargestAvoidingSplit largest_avoiding_split(const Graph& g) {
    if (!is_connected(g) || is_complete(g)) throw DomainError("needs a connected, non-complete graph");
    LargestAvoidingSplit best;
    for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x) {
        VertexSet alive;
        for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
            if (v != x && !g.adjacent(v, x)) alive.push_back(v);
        for (auto& c : components(g, alive))
            if (c.size() > best.component.size()) {
                best.x = x;
                best.component = std::move(c);
            }
    }
    best.delta = neighborhood(g, best.component);
    best.rest = set_difference(set_difference(all_vertices(g), best.component), best.delta);
    return best;
}

namespace {

bool dominating_paths_from(const Graph& g, Vertex last, Vertex target, Mask path, Mask blocked, Mask dominated) {
    Mask next = g.neighbor_mask(last) & ~blocked & ~path;
    for (; next != 0; next &= next - 1) {
        const Vertex w = std::countr_zero(next);
        const Mask dom = dominated | g.closed_mask(w);
        if (w == target) {
            if (dom != g.vertex_mask()) return false;
            continue;
        }
        if (!dominating_paths_from(g, w, target, path | bit(w), blocked | g.closed_mask(last), dom)) return false;
    }
    return true;
}

}  // namespace

bool is_dominating_pair(const Graph& g, Vertex x, Vertex y, const OracleConfig& cfg) {
    if (g.order() > cfg.cap || g.order() > kMaskBits) throw BudgetError("induced path enumeration", cfg.cap);
    if (x == y) return g.closed_mask(x) == g.vertex_mask();
    return dominating_paths_from(g, x, y, bit(x), 0, g.closed_mask(x));
}

nlohmann::json to_json(const SteinerGeodeticReport& report) {
    return {{"graph_id", report.graph_id},
            {"g", report.geodetic},
            {"s", report.steiner},
            {"sets_checked", report.sets_checked},
            {"violations", report.violations}};
}

SteinerGeodeticReport verify_steiner_implies_geodetic(const Graph& g, std::string graph_id, const OracleConfig& cfg,
                                                      int size_bound) {
    if (!is_connected(g)) throw DomainError("Steiner sets need a connected graph");
    if (!is_at_free(g)) throw DomainError("graph has an asteroidal triple");
    SteinerGeodeticReport report;
    report.graph_id = std::move(graph_id);
    report.geodetic = min_convexity_number(g, ConvexityKind::geodetic, cfg).value;

    const auto geodetic_pairs = geodetic_pair_masks(g);
    auto check = [&](Mask w) {
        ++report.sets_checked;
        if (pair_closure(geodetic_pairs, g.order(), w) != g.vertex_mask()) report.violations.push_back(from_mask(w));
    };
    const auto minimum = minimum_convexity_sets(g, ConvexityKind::steiner, cfg);
    report.steiner = minimum.empty() ? 0 : static_cast<int>(minimum.front().size());
    for (const auto& w : minimum) check(to_mask(w));

    if (size_bound > report.steiner) {
        const auto dist = distance_matrix(g);
        const VertexSet all = all_vertices(g);
        for (auto k = static_cast<std::size_t>(report.steiner + 1); k <= static_cast<std::size_t>(size_bound) && k <= g.order(); ++k)
            detail::for_each_combination(all, k, [&](Mask w) {
                const VertexSet terminals = from_mask(w);
                const auto cost = steiner_extension_costs(g, terminals, dist);
                const int sd = cost[static_cast<std::size_t>(terminals[0])];
                if (std::all_of(cost.begin(), cost.end(), [sd](int c) { return c == sd; })) check(w);
                return false;
            });
    }
    return report;
}

namespace {

bool connected_within(const Graph& g, Mask u) {
    if (u == 0) return true;
    Mask seen = u & (~u + 1);
    Mask frontier = seen;
    while (frontier != 0) {
        Mask grow = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) grow |= g.neighbor_mask(std::countr_zero(f));
        frontier = grow & u & ~seen;
        seen |= frontier;
    }
    return seen == u;
}

bool dominating_path_within(const Graph& g, Mask u, Vertex last, Mask path, Mask dominated) {
    if ((dominated & u) == u) return true;
    for (Mask next = g.neighbor_mask(last) & u & ~path; next != 0; next &= next - 1) {
        const Vertex w = std::countr_zero(next);
        if (dominating_path_within(g, u, w, path | bit(w), dominated | g.closed_mask(w))) return true;
    }
    return false;
}

/// G[U] has a spanning caterpillar iff some path in G[U] dominates U.
bool has_spanning_caterpillar(const Graph& g, Mask u) {
    for (Mask s = u; s != 0; s &= s - 1) {
        const Vertex v = std::countr_zero(s);
        if (dominating_path_within(g, u, v, bit(v), g.closed_mask(v))) return true;
    }
    return false;
}

}  // namespace

bool caterpillar_realization(const Graph& g, std::span<const Vertex> w, const OracleConfig& cfg) {
    if (g.order() > cfg.cap || g.order() > kMaskBits) throw BudgetError("Steiner tree enumeration", cfg.cap);
    const int sd = steiner_distance(g, w, cfg);
    const Mask terminals = to_mask(w);
    const VertexSet pool = from_mask(g.vertex_mask() & ~terminals);
    const std::size_t extra = static_cast<std::size_t>(sd + 1) - static_cast<std::size_t>(popcount(terminals));
    bool all_ok = true;
    detail::for_each_combination(pool, extra, [&](Mask add) {
        const Mask u = terminals | add;
        if (!connected_within(g, u)) return false;
        if (!has_spanning_caterpillar(g, u)) all_ok = false;
        return !all_ok;
    });
    return all_ok;
}

Graph cm_reduction(const Graph& h) {
    const std::size_t n = h.order();
    std::vector<Edge> edges = h.edges();
    for (std::size_t v = 0; v < n; ++v) {
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(n));
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(n + 1));
    }
    Graph g(n + 2, edges);
    if (h.labels().empty()) return g;
    std::vector<std::string> labels = h.labels();
    labels.emplace_back("u");
    labels.emplace_back("v");
    return g.with_labels(std::move(labels));
}

namespace {

void grow_clique(const Graph& g, Mask candidates, int size, int& best) {
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    if (size + popcount(candidates) <= best) return;
    const Vertex v = std::countr_zero(candidates);
    grow_clique(g, candidates & g.neighbor_mask(v), size + 1, best);
    grow_clique(g, candidates & ~bit(v), size, best);
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.order() > kMaskBits) throw BudgetError("clique search", kMaskBits);
    int best = 0;
    grow_clique(g, g.vertex_mask(), 0, best);
    return best;
}

WitnessedNumber chordal_monophonic_number(const Graph& g) {
    if (!is_chordal(g)) throw DomainError("graph is not chordal");
    if (!is_connected(g)) throw DomainError("graph is not connected");
    VertexSet simplicial = simplicial_vertices(g);
    return {static_cast<int>(simplicial.size()), std::move(simplicial)};
}

Graph interval_graph(const IntervalFamily& family) {
    const auto& iv = family.intervals;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < iv.size(); ++i) {
        if (iv[i].left >= iv[i].right) throw DomainError("interval " + iv[i].label + " is empty or reversed");
        labels.push_back(iv[i].label);
        for (std::size_t j = i + 1; j < iv.size(); ++j)
            if (std::max(iv[i].left, iv[j].left) <= std::min(iv[i].right, iv[j].right))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return Graph(iv.size(), edges).with_labels(std::move(labels));
}

LabeledIntervalGraph figure1_copies(int copies) {
    if (copies < 1) throw RangeError("copy count must be positive");
    // Tenths. I3 sits at [1.6, 2.6] so that all intervals have unit length.
    struct Proto {
        const char* label;
        long left;
    };
    constexpr Proto proto[] = {{"I1", 0},  {"I2", 8},  {"I3", 16}, {"I4", 4}, {"I5", 4},
                               {"I6", 4},  {"I7", 12}, {"I8", 12}, {"I9", 12}};
    constexpr long unit = 10;
    constexpr long stride = 3 * unit;
    IntervalFamily family;
    family.denominator = unit;
    for (int c = 0; c < copies; ++c)
        for (const auto& p : proto) {
            std::string label = p.label;
            if (copies > 1) label += "_" + std::to_string(c + 1);
            family.intervals.push_back({std::move(label), p.left + c * stride, p.left + unit + c * stride});
        }
    return {interval_graph(family), std::move(family)};
}

LabeledIntervalGraph figure1_graph() { return figure1_copies(1); }

}  // namespace convexia
