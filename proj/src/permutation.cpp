#include "convexia/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "convexia/at_free.hpp"
#include "convexia/decomposition.hpp"
#include "convexia/detail/combinations.hpp"
#include "convexia/errors.hpp"

namespace convexia {

PermutationDiagram::PermutationDiagram(std::vector<int> pi) : pi_(std::move(pi)), bottom_(pi_.size(), -1) {
    const auto n = static_cast<int>(pi_.size());
    for (int k = 0; k < n; ++k) {
        const int label = pi_[static_cast<std::size_t>(k)];
        if (label < 1 || label > n || bottom_[static_cast<std::size_t>(label - 1)] >= 0)
            throw DomainError("not a permutation of 1..n");
        bottom_[static_cast<std::size_t>(label - 1)] = k;
    }
}

PermutationDiagram parse_permutation(std::string_view text) {
    std::vector<int> pi;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
            ++i;
            continue;
        }
        int value = 0;
        const auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{}) throw ParseError("expected an integer", i);
        pi.push_back(value);
        i = static_cast<std::size_t>(end - text.data());
    }
    try {
        return PermutationDiagram(std::move(pi));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string to_string(const PermutationDiagram& d) {
    std::string out;
    for (int label : d.pi()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(label);
    }
    return out;
}

Graph permutation_to_graph(const PermutationDiagram& d) {
    const auto n = static_cast<Vertex>(d.order());
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (d.bottom(i) > d.bottom(j)) edges.emplace_back(i, j);
    return Graph(d.order(), edges);
}

PermutationDiagram induced_diagram(const PermutationDiagram& d, std::span<const Vertex> vertices) {
    std::vector<std::size_t> by_bottom(vertices.size());
    for (std::size_t k = 0; k < by_bottom.size(); ++k) by_bottom[k] = k;
    std::sort(by_bottom.begin(), by_bottom.end(),
              [&](std::size_t a, std::size_t b) { return d.bottom(vertices[a]) < d.bottom(vertices[b]); });
    std::vector<int> pi;
    for (std::size_t k : by_bottom) pi.push_back(static_cast<int>(k) + 1);
    return PermutationDiagram(std::move(pi));
}

VertexSet crossing_set(const PermutationDiagram& d, Scanline s) {
    const auto n = static_cast<int>(d.order());
    if (s.top_gap < 0 || s.top_gap > n || s.bottom_gap < 0 || s.bottom_gap > n)
        throw RangeError("scanline gap outside 0..n");
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if ((d.top(v) < s.top_gap) != (d.bottom(v) < s.bottom_gap)) out.push_back(v);
    return out;
}

std::vector<ScanlineSet> scanline_separator_set(const PermutationDiagram& d) {
    const auto n = static_cast<int>(d.order());
    std::vector<ScanlineSet> out;
    std::set<VertexSet> seen;
    for (int t = 0; t <= n; ++t)
        for (int b = 0; b <= n; ++b) {
            const Scanline line{t, b};
            VertexSet crossing = crossing_set(d, line);
            if (seen.insert(crossing).second) out.push_back({line, std::move(crossing)});
        }
    return out;
}

bool is_minimal_separator(const Graph& g, std::span<const Vertex> s) {
    const VertexSet alive = set_difference(all_vertices(g), s);
    int full = 0;
    for (const auto& c : components(g, alive))
        if (neighborhood(g, c).size() == s.size()) ++full;
    return full >= 2;
}

std::vector<VertexSet> minimal_separators_brute(const Graph& g) {
    if (g.order() > 20) throw BudgetError("minimal separator enumeration", 20);
    std::vector<VertexSet> out;
    for (Mask m = 0; m < (Mask{1} << g.order()); ++m) {
        const VertexSet s = from_mask(m);
        if (is_minimal_separator(g, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int join_monophonic_number(JoinFactor a, JoinFactor b) {
    if (a.clique && b.clique) return a.value + b.value;
    if (a.clique) return b.value;
    if (b.clique) return a.value;
    return std::min({4, a.value, b.value});
}

bool crossing_pair_condition(const Graph& g, Vertex x, Vertex y, Vertex z) {
    if (!contains(between_set(g, x, y), z)) throw DomainError("vertex is not between the pair");
    const VertexSet dx = neighborhood(g, component_avoiding(g, z, x));
    const VertexSet dy = neighborhood(g, component_avoiding(g, z, y));
    for (Vertex a : dx)
        for (Vertex b : dy)
            if (a != b && !g.adjacent(a, b)) return true;
    return false;
}

namespace {

/// `from` reaches `to` through `allowed` (which must contain both).
bool reaches(const Graph& g, Vertex from, Vertex to, std::vector<char> allowed) {
    if (!allowed[static_cast<std::size_t>(from)] || !allowed[static_cast<std::size_t>(to)]) return false;
    std::vector<Vertex> stack{from};
    allowed[static_cast<std::size_t>(from)] = 0;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        if (u == to) return true;
        for (Vertex w : g.neighbors(u))
            if (allowed[static_cast<std::size_t>(w)]) {
                allowed[static_cast<std::size_t>(w)] = 0;
                stack.push_back(w);
            }
    }
    return false;
}

/// Side of a chordless path through z: `side` plus the attachment `a`,
/// minus the neighbors of the attachment `b` used on the other side.
std::vector<char> side_vertices(const Graph& g, const VertexSet& side, Vertex a, Vertex b) {
    std::vector<char> allowed(g.order(), 0);
    for (Vertex v : side) allowed[static_cast<std::size_t>(v)] = !g.adjacent(v, b);
    allowed[static_cast<std::size_t>(a)] = 1;
    return allowed;
}

}  // namespace

bool monophonic_membership(const Graph& g, Vertex x, Vertex y, Vertex z) {
    if (!contains(between_set(g, x, y), z)) throw DomainError("vertex is not between the pair");
    // N[z] separates x from y, so a chordless x,y-path through z enters z from
    // a in N(z) on the x side and leaves to a nonadjacent b on the y side; the
    // two halves may not touch b and a respectively.
    const VertexSet cx = component_avoiding(g, z, x);
    const VertexSet cy = component_avoiding(g, z, y);
    const VertexSet dx = neighborhood(g, cx);
    const VertexSet dy = neighborhood(g, cy);
    for (Vertex a : dx)
        for (Vertex b : dy) {
            if (a == b || g.adjacent(a, b)) continue;
            if (reaches(g, x, a, side_vertices(g, cx, a, b)) && reaches(g, y, b, side_vertices(g, cy, b, a)))
                return true;
        }
    return false;
}

VertexSet monophonic_pair_closure(const Graph& g, Vertex x, Vertex y) {
    if (x == y) return {x};
    if (g.adjacent(x, y)) return x < y ? VertexSet{x, y} : VertexSet{y, x};
    const PairStructure p = pair_structure(g, x, y);
    VertexSet out = set_union(p.delta_x, p.delta_y);
    out = set_union(out, x < y ? VertexSet{x, y} : VertexSet{y, x});
    VertexSet inner;
    for (Vertex z : p.between)
        if (monophonic_membership(g, x, y, z)) inner.push_back(z);
    return set_union(out, inner);
}

std::vector<Mask> betweenness_pair_masks(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaskBits) throw BudgetError("pair table", kMaskBits);
    std::vector<Mask> table(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        table[a * n + a] = bit(static_cast<Vertex>(a));
        for (std::size_t b = a + 1; b < n; ++b) {
            const Mask m = to_mask(monophonic_pair_closure(g, static_cast<Vertex>(a), static_cast<Vertex>(b)));
            table[a * n + b] = m;
            table[b * n + a] = m;
        }
    }
    return table;
}

namespace {

std::vector<VertexSet> scanline_minimal_separators(const PermutationDiagram& d, const Graph& g) {
    std::vector<VertexSet> out;
    for (auto& s : scanline_separator_set(d))
        if (!s.crossing.empty() && is_minimal_separator(g, s.crossing)) out.push_back(std::move(s.crossing));
    std::sort(out.begin(), out.end());
    return out;
}

/// The component of G - s containing all of `part`, or nullopt if `part` spreads over several.
std::optional<VertexSet> component_holding(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> part) {
    for (auto& c : components(g, set_difference(all_vertices(g), s)))
        if (contains(c, part.front())) {
            if (set_intersection(c, part).size() != part.size()) return std::nullopt;
            return std::move(c);
        }
    return std::nullopt;
}

}  // namespace

std::vector<SeparatorPair> parallel_separator_pairs(const PermutationDiagram& d) {
    const Graph g = permutation_to_graph(d);
    const auto seps = scanline_minimal_separators(d, g);
    std::vector<SeparatorPair> out;
    for (std::size_t i = 0; i < seps.size(); ++i)
        for (std::size_t j = i + 1; j < seps.size(); ++j) {
            const VertexSet only1 = set_difference(seps[i], seps[j]);
            const VertexSet only2 = set_difference(seps[j], seps[i]);
            if (only1.empty() || only2.empty()) continue;
            const auto c1 = component_holding(g, seps[j], only1);
            const auto c2 = component_holding(g, seps[i], only2);
            if (!c1 || !c2) continue;
            VertexSet between = set_intersection(*c1, *c2);
            if (between.empty()) continue;
            SeparatorPair pair{seps[i], seps[j], std::move(between), {}};
            pair.components = components(g, pair.between);
            out.push_back(std::move(pair));
        }
    return out;
}

std::vector<SeparatorPair> successional_pairs(const PermutationDiagram& d) {
    const Graph g = permutation_to_graph(d);
    std::vector<SeparatorPair> admissible;
    for (auto& p : parallel_separator_pairs(d)) {
        bool joined = true;
        for (Vertex a : p.s1)
            for (Vertex b : p.s2) joined = joined && (a == b || g.adjacent(a, b));
        if (joined) admissible.push_back(std::move(p));
    }
    std::vector<SeparatorPair> out;
    for (const auto& p : admissible) {
        const bool dominated = std::any_of(admissible.begin(), admissible.end(), [&](const SeparatorPair& q) {
            return q.between.size() > p.between.size() && set_intersection(q.between, p.between) == p.between;
        });
        if (!dominated) out.push_back(p);
    }
    return out;
}

namespace {

/// Subsets of `pool` with at most `limit` members, smallest first.
std::vector<Mask> small_subsets(Mask pool, int limit) {
    const VertexSet members = from_mask(pool);
    std::vector<Mask> out;
    for (std::size_t k = 0; k <= members.size() && static_cast<int>(k) <= limit; ++k)
        detail::for_each_combination(members, k, [&](Mask m) {
            out.push_back(m);
            return false;
        });
    return out;
}

/// Fewest vertices from `pool` whose addition to `base` makes the closure contain `target`.
std::optional<std::pair<int, Mask>> cheapest_addition(std::span<const Mask> pairs, std::size_t n, Mask base, Mask target,
                                                      Mask pool) {
    const VertexSet members = from_mask(pool);
    for (std::size_t k = 0; k <= members.size(); ++k) {
        Mask found = 0;
        bool ok = detail::for_each_combination(members, k, [&](Mask add) {
            if ((pair_closure(pairs, n, base | add) & target) != target) return false;
            found = add;
            return true;
        });
        if (ok) return std::make_pair(static_cast<int>(k), found);
    }
    return std::nullopt;
}

const CoverTable::Entry* lookup(const CoverTable& table, Mask chosen) {
    const Mask boundary = to_mask(table.left) | to_mask(table.right);
    const Mask key = table.joined_clique ? 0 : chosen & boundary;
    const auto it = table.entries.find(key);
    return it == table.entries.end() ? nullptr : &it->second;
}

}  // namespace

CoverTable build_cover_table(const PermutationDiagram& d, const Graph& g, std::span<const Mask> pairs, Mask anchors,
                             std::span<const Vertex> component, int per_side) {
    const std::size_t n = g.order();
    CoverTable table;
    table.component.assign(component.begin(), component.end());
    const Mask inside = to_mask(component);
    const VertexSet around = neighborhood(g, component);
    int start = static_cast<int>(n);
    for (Vertex c : component) start = std::min(start, d.left(c));
    for (Vertex s : around) {
        if (anchors & bit(s)) continue;
        (d.left(s) < start ? table.left : table.right).push_back(s);
    }

    table.joined_clique = is_clique(g, around);
    for (Vertex s : around) table.joined_clique = table.joined_clique && (g.neighbor_mask(s) & inside) == inside;

    const std::vector<Mask> lefts = table.joined_clique ? std::vector<Mask>{0} : small_subsets(to_mask(table.left), per_side);
    const std::vector<Mask> rights =
        table.joined_clique ? std::vector<Mask>{0} : small_subsets(to_mask(table.right), per_side);
    for (Mask l : lefts)
        for (Mask r : rights) {
            const auto best = cheapest_addition(pairs, n, anchors | l | r, inside, inside);
            if (best) table.entries[l | r] = {best->first, best->second};
        }
    return table;
}

int cover_number(const PermutationDiagram& d, const Graph& g, std::span<const Mask> pairs, Mask anchors,
                 std::span<const Vertex> component, int per_side) {
    if (per_side < 0) {
        const auto best = cheapest_addition(pairs, g.order(), anchors, to_mask(component), g.vertex_mask() & ~anchors);
        return best ? best->first : kInfinite;
    }
    const CoverTable table = build_cover_table(d, g, pairs, anchors, component, per_side);
    int best = kInfinite;
    for (const auto& [boundary, entry] : table.entries) best = std::min(best, popcount(boundary) + entry.cost);
    return best;
}

AnchoredSolution solve_anchored(const PermutationDiagram& d, const Graph& g, std::span<const Mask> pairs, Vertex x,
                                Vertex y) {
    const std::size_t n = g.order();
    AnchoredSolution out;
    out.x = x;
    out.y = y;
    const Mask anchors = bit(x) | bit(y);
    const Mask closure = pairs[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)];
    out.closure = from_mask(closure);
    out.components = components(g, from_mask(g.vertex_mask() & ~closure));
    auto first_bottom = [&](const VertexSet& c) {
        int b = static_cast<int>(n);
        for (Vertex v : c) b = std::min(b, d.bottom(v));
        return b;
    };
    std::sort(out.components.begin(), out.components.end(),
              [&](const VertexSet& a, const VertexSet& b) { return first_bottom(a) < first_bottom(b); });

    const std::size_t t = out.components.size();
    std::vector<CoverTable> tables;
    std::vector<Mask> boundary(t);
    for (std::size_t i = 0; i < t; ++i) {
        tables.push_back(build_cover_table(d, g, pairs, anchors, out.components[i]));
        boundary[i] = to_mask(tables[i].left) | to_mask(tables[i].right);
    }
    // frontier[i]: boundary vertices shared by components <= i and components > i.
    std::vector<Mask> prefix(t + 1, 0);
    std::vector<Mask> suffix(t + 1, 0);
    for (std::size_t i = 0; i < t; ++i) prefix[i + 1] = prefix[i] | boundary[i];
    for (std::size_t i = t; i-- > 0;) suffix[i] = suffix[i + 1] | boundary[i];

    struct Cell {
        int cost;
        Mask chosen;
    };
    std::map<Mask, Cell> states{{0, {0, 0}}};
    for (std::size_t i = 0; i < t; ++i) {
        const Mask fresh = boundary[i] & ~prefix[i];
        const Mask frontier = prefix[i + 1] & suffix[i + 1];
        std::map<Mask, Cell> next;
        for (const auto& [carried, cell] : states)
            for (Mask add : small_subsets(fresh, 2 * kBoundaryPicks)) {
                const Mask picked = (carried & boundary[i]) | add;
                const CoverTable::Entry* entry = lookup(tables[i], picked);
                if (!entry) continue;
                const Cell candidate{cell.cost + popcount(add) + entry->cost, cell.chosen | add | entry->inside};
                const Mask key = (carried | add) & frontier;
                auto it = next.find(key);
                if (it == next.end() || candidate.cost < it->second.cost) next[key] = candidate;
            }
        states = std::move(next);
    }
    const Cell* best = nullptr;
    for (const auto& [key, cell] : states)
        if (!best || cell.cost < best->cost) best = &cell;
    if (!best) return out;
    const Mask witness = anchors | best->chosen;
    if (pair_closure(pairs, n, witness) == g.vertex_mask()) out.witness = from_mask(witness);
    return out;
}

namespace {

WitnessedNumber lift(const WitnessedNumber& local, std::span<const Vertex> global) {
    WitnessedNumber out{local.value, {}};
    for (Vertex v : local.witness) out.witness.push_back(global[static_cast<std::size_t>(v)]);
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

std::pair<Vertex, Vertex> nonadjacent_pair(const Graph& g, std::span<const Vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (!g.adjacent(set[i], set[j])) return {set[i], set[j]};
    throw std::logic_error("expected a nonadjacent pair");
}

WitnessedNumber solve(const PermutationDiagram& d);

WitnessedNumber solve_join(const PermutationDiagram& d, const Graph& g, const std::vector<VertexSet>& parts) {
    struct Folded {
        bool clique;
        WitnessedNumber number;
        VertexSet vertices;
    };
    std::optional<Folded> acc;
    for (const auto& part : parts) {
        const Graph h = induced_subgraph(g, part);
        Folded f{is_complete(h), {}, part};
        f.number = f.clique ? WitnessedNumber{static_cast<int>(part.size()), part} : lift(solve(induced_diagram(d, part)), part);
        if (!acc) {
            acc = std::move(f);
            continue;
        }
        Folded merged{acc->clique && f.clique, {}, set_union(acc->vertices, f.vertices)};
        const int value = join_monophonic_number({acc->clique, acc->number.value}, {f.clique, f.number.value});
        if (merged.clique) {
            merged.number = {value, merged.vertices};
        } else if (acc->clique) {
            merged.number = f.number;
        } else if (f.clique || acc->number.value == value) {
            merged.number = acc->number;
        } else if (f.number.value == value) {
            merged.number = f.number;
        } else {
            const auto [a, b] = nonadjacent_pair(g, acc->vertices);
            const auto [c, e] = nonadjacent_pair(g, f.vertices);
            VertexSet four{a, b, c, e};
            std::sort(four.begin(), four.end());
            merged.number = {value, std::move(four)};
        }
        acc = std::move(merged);
    }
    return acc->number;
}

WitnessedNumber solve_prime(const PermutationDiagram& d, const Graph& g) {
    const auto pairs = betweenness_pair_masks(g);
    std::optional<WitnessedNumber> best;
    for (const auto& [x, y] : pairs_by_betweenness(g)) {
        const AnchoredSolution s = solve_anchored(d, g, pairs, x, y);
        if (!s.witness) continue;
        const auto size = static_cast<int>(s.witness->size());
        if (!best || size < best->value) best = WitnessedNumber{size, *s.witness};
        if (best->value == 2) break;
    }
    if (!best) throw std::logic_error("no anchor pair produced a verified cover");
    return *best;
}

WitnessedNumber solve(const PermutationDiagram& d) {
    const Graph g = permutation_to_graph(d);
    const std::size_t n = g.order();
    if (n <= 1 || is_complete(g)) return {static_cast<int>(n), all_vertices(g)};
    if (auto comps = components(g); comps.size() > 1) {
        WitnessedNumber sum;
        for (const auto& c : comps) {
            const WitnessedNumber part = lift(solve(induced_diagram(d, c)), c);
            sum.value += part.value;
            sum.witness = set_union(sum.witness, part.witness);
        }
        return sum;
    }
    if (auto parts = co_components(g); parts.size() > 1) return solve_join(d, g, parts);
    return solve_prime(d, g);
}

}  // namespace

WitnessedNumber permutation_monophonic_number(const PermutationDiagram& d) {
    if (d.order() > kMaskBits) throw BudgetError("permutation monophonic number", kMaskBits);
    const Graph g = permutation_to_graph(d);
    if (!is_connected(g)) throw DomainError("permutation graph is disconnected");
    WitnessedNumber out = solve(d);
    const OracleConfig cfg;
    if (g.order() <= cfg.cap && !is_convexity_set(g, out.witness, ConvexityKind::monophonic, cfg))
        throw std::logic_error("monophonic witness failed re-verification");
    return out;
}

}  // namespace convexia
