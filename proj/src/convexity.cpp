#include "convexia/convexity.hpp"

#include <algorithm>
#include <functional>

#include "convexia/detail/combinations.hpp"
#include "convexia/errors.hpp"

namespace convexia {

std::string_view to_string(ConvexityKind kind) {
    switch (kind) {
        case ConvexityKind::geodetic: return "geodetic";
        case ConvexityKind::two_geodetic: return "2-geodetic";
        case ConvexityKind::monophonic: return "monophonic";
        case ConvexityKind::steiner: return "steiner";
    }
    return "?";
}

namespace {

void check_cap(const OracleConfig& cfg) {
    if (cfg.cap > kMaskBits) throw RangeError("oracle cap above 64 is not supported");
}

void require_vertices(const Graph& g, std::size_t limit, const OracleConfig& cfg, const char* what) {
    check_cap(cfg);
    if (g.order() > limit) throw BudgetError(std::string(what) + " on n=" + std::to_string(g.order()), limit);
}

void check_members(const Graph& g, std::span<const Vertex> s) {
    for (Vertex v : s)
        if (v < 0 || static_cast<std::size_t>(v) >= g.order())
            throw RangeError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order()) + "-1");
}

void collect_induced_paths(const Graph& g, Vertex start, Vertex last, Mask path, Mask blocked, Mask* row) {
    // `blocked` holds the closed neighborhoods of every path vertex except `last`.
    Mask next = g.neighbor_mask(last) & ~blocked & ~path;
    while (next != 0) {
        const Vertex w = std::countr_zero(next);
        next &= next - 1;
        const Mask extended = path | bit(w);
        row[w] |= extended;
        collect_induced_paths(g, start, w, extended, blocked | g.closed_mask(last), row);
    }
}

}  // namespace

std::vector<Mask> geodetic_pair_masks(const Graph& g) {
    const std::size_t n = g.order();
    const auto dist = distance_matrix(g);
    std::vector<Mask> table(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const int dab = dist[a * n + b];
            if (dab == kInfinite) continue;
            Mask m = 0;
            for (std::size_t z = 0; z < n; ++z)
                if (dist[a * n + z] != kInfinite && dist[z * n + b] != kInfinite &&
                    dist[a * n + z] + dist[z * n + b] == dab)
                    m |= bit(static_cast<Vertex>(z));
            table[a * n + b] = m;
        }
    }
    return table;
}

std::vector<Mask> monophonic_pair_masks(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Mask> table(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        Mask* row = table.data() + a * n;
        row[a] = bit(static_cast<Vertex>(a));
        collect_induced_paths(g, static_cast<Vertex>(a), static_cast<Vertex>(a), bit(static_cast<Vertex>(a)), 0, row);
    }
    return table;
}

Mask pair_closure(std::span<const Mask> pairs, std::size_t n, Mask s) {
    Mask out = s;
    for (Mask a = s; a != 0; a &= a - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(a));
        for (Mask b = a & (a - 1); b != 0; b &= b - 1) out |= pairs[i * n + static_cast<std::size_t>(std::countr_zero(b))];
    }
    return out;
}

bool is_two_geodetic_mask(const Graph& g, Mask s) {
    for (Mask rest = g.vertex_mask() & ~s; rest != 0; rest &= rest - 1) {
        const Vertex v = std::countr_zero(rest);
        const Mask inside = g.neighbor_mask(v) & s;
        bool ok = false;
        for (Mask a = inside; a != 0 && !ok; a &= a - 1)
            ok = (inside & ~g.closed_mask(std::countr_zero(a))) != 0;
        if (!ok) return false;
    }
    return true;
}

std::vector<int> steiner_extension_costs(const Graph& g, std::span<const Vertex> w, std::span<const int> dist) {
    const std::size_t n = g.order();
    const std::size_t k = w.size();
    const std::size_t states = std::size_t{1} << k;
    std::vector<int> dp(states * n, kInfinite);
    auto at = [&](std::size_t mask, std::size_t v) -> int& { return dp[mask * n + v]; };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t v = 0; v < n; ++v) at(std::size_t{1} << i, v) = dist[static_cast<std::size_t>(w[i]) * n + v];
    for (std::size_t mask = 1; mask < states; ++mask) {
        if ((mask & (mask - 1)) == 0) continue;
        const std::size_t low = mask & (~mask + 1);
        for (std::size_t v = 0; v < n; ++v) {
            int best = kInfinite;
            // Submasks containing the lowest terminal; the complement covers the rest.
            for (std::size_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
                if ((sub & low) == 0) continue;
                const int a = at(sub, v);
                const int b = at(mask ^ sub, v);
                if (a != kInfinite && b != kInfinite) best = std::min(best, a + b);
            }
            at(mask, v) = best;
        }
        for (std::size_t v = 0; v < n; ++v) {
            int best = at(mask, v);
            for (std::size_t u = 0; u < n; ++u) {
                const int a = at(mask, u);
                const int d = dist[u * n + v];
                if (a != kInfinite && d != kInfinite) best = std::min(best, a + d);
            }
            at(mask, v) = best;
        }
    }
    return {dp.begin() + static_cast<std::ptrdiff_t>((states - 1) * n), dp.end()};
}

VertexSet geodetic_interval(const Graph& g, std::span<const Vertex> s) {
    check_members(g, s);
    const std::size_t n = g.order();
    std::vector<std::vector<int>> rows;
    rows.reserve(s.size());
    for (Vertex v : s) rows.push_back(distances(g, v));
    std::vector<char> in(n, 0);
    for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const int dxy = rows[i][static_cast<std::size_t>(s[j])];
            if (dxy == kInfinite) continue;
            for (std::size_t z = 0; z < n; ++z)
                if (rows[i][z] != kInfinite && rows[j][z] != kInfinite && rows[i][z] + rows[j][z] == dxy) in[z] = 1;
        }
    }
    VertexSet out;
    for (std::size_t z = 0; z < n; ++z)
        if (in[z]) out.push_back(static_cast<Vertex>(z));
    return out;
}

VertexSet monophonic_closure(const Graph& g, std::span<const Vertex> s, const OracleConfig& cfg) {
    require_vertices(g, cfg.cap, cfg, "monophonic closure");
    check_members(g, s);
    const std::size_t n = g.order();
    const Mask target = to_mask(s);
    Mask out = target;
    std::vector<Mask> row(n);
    for (Vertex a : s) {
        std::fill(row.begin(), row.end(), 0);
        collect_induced_paths(g, a, a, bit(a), 0, row.data());
        for (Mask b = target; b != 0; b &= b - 1) out |= row[static_cast<std::size_t>(std::countr_zero(b))];
    }
    return from_mask(out);
}

namespace {

void require_terminals(const Graph& g, std::span<const Vertex> w, const OracleConfig& cfg) {
    check_cap(cfg);
    check_members(g, w);
    if (w.empty()) throw DomainError("Steiner distance needs at least one terminal");
    if (w.size() > cfg.cap) throw BudgetError("Steiner computation with " + std::to_string(w.size()) + " terminals", cfg.cap);
    const auto d = distances(g, w[0]);
    for (Vertex v : w)
        if (d[static_cast<std::size_t>(v)] == kInfinite) throw DomainError("Steiner terminals span several components");
}

}  // namespace

int steiner_distance(const Graph& g, std::span<const Vertex> w, const OracleConfig& cfg) {
    require_terminals(g, w, cfg);
    const auto dist = distance_matrix(g);
    return steiner_extension_costs(g, w, dist)[static_cast<std::size_t>(w[0])];
}

VertexSet steiner_interval(const Graph& g, std::span<const Vertex> w, const OracleConfig& cfg) {
    require_terminals(g, w, cfg);
    require_vertices(g, cfg.cap, cfg, "Steiner interval");
    const auto dist = distance_matrix(g);
    const auto cost = steiner_extension_costs(g, w, dist);
    const int sd = cost[static_cast<std::size_t>(w[0])];
    VertexSet out;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (cost[v] == sd) out.push_back(static_cast<Vertex>(v));
    return out;
}

namespace {

/// Precomputed tables answering "is S a set of this kind" for masks S.
class KindChecker {
public:
    KindChecker(const Graph& g, ConvexityKind kind) : g_(g), kind_(kind) {
        switch (kind) {
            case ConvexityKind::geodetic: pairs_ = geodetic_pair_masks(g); break;
            case ConvexityKind::monophonic: pairs_ = monophonic_pair_masks(g); break;
            case ConvexityKind::steiner: dist_ = distance_matrix(g); break;
            case ConvexityKind::two_geodetic: break;
        }
    }

    bool operator()(Mask s) const {
        const Mask all = g_.vertex_mask();
        switch (kind_) {
            case ConvexityKind::geodetic:
            case ConvexityKind::monophonic: return pair_closure(pairs_, g_.order(), s) == all;
            case ConvexityKind::two_geodetic: return is_two_geodetic_mask(g_, s);
            case ConvexityKind::steiner: {
                if (s == 0) return g_.order() == 0;
                const VertexSet w = from_mask(s);
                const auto cost = steiner_extension_costs(g_, w, dist_);
                const int sd = cost[static_cast<std::size_t>(w[0])];
                return std::all_of(cost.begin(), cost.end(), [sd](int c) { return c == sd; });
            }
        }
        return false;
    }

private:
    const Graph& g_;
    ConvexityKind kind_;
    std::vector<Mask> pairs_;
    std::vector<int> dist_;
};

template <class Visit>
void enumerate_candidates(const Graph& g, Visit&& visit) {
    const Mask forced = to_mask(simplicial_vertices(g));
    const VertexSet pool = from_mask(g.vertex_mask() & ~forced);
    for (std::size_t k = 0; k <= pool.size(); ++k)
        if (detail::for_each_combination(pool, k, [&](Mask extra) { return visit(forced | extra); })) return;
}

WitnessedNumber min_connected(const Graph& g, ConvexityKind kind, const OracleConfig& cfg) {
    require_vertices(g, cfg.cap, cfg, "subset enumeration");
    if (g.order() == 0) return {};
    const KindChecker check(g, kind);
    WitnessedNumber out{-1, {}};
    enumerate_candidates(g, [&](Mask s) {
        if (!check(s)) return false;
        out = {popcount(s), from_mask(s)};
        return true;
    });
    return out;
}

}  // namespace

bool is_convexity_set(const Graph& g, std::span<const Vertex> s, ConvexityKind kind, const OracleConfig& cfg) {
    check_members(g, s);
    const VertexSet all = all_vertices(g);
    switch (kind) {
        case ConvexityKind::geodetic: return geodetic_interval(g, s) == all;
        case ConvexityKind::monophonic: return monophonic_closure(g, s, cfg) == all;
        case ConvexityKind::steiner:
            if (s.empty()) return g.order() == 0;
            return steiner_interval(g, s, cfg) == all;
        case ConvexityKind::two_geodetic: {
            std::vector<char> in(g.order(), 0);
            for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
            for (Vertex v : all) {
                if (in[static_cast<std::size_t>(v)]) continue;
                VertexSet inside;
                for (Vertex w : g.neighbors(v))
                    if (in[static_cast<std::size_t>(w)]) inside.push_back(w);
                if (is_clique(g, inside)) return false;
            }
            return true;
        }
    }
    return false;
}

WitnessedNumber min_convexity_number(const Graph& g, ConvexityKind kind, const OracleConfig& cfg) {
    check_cap(cfg);
    const auto comps = components(g);
    if (comps.size() <= 1) return min_connected(g, kind, cfg);
    if (kind == ConvexityKind::steiner) throw DomainError("Steiner number is undefined on a disconnected graph");
    WitnessedNumber total;
    for (const auto& comp : comps) {
        const auto part = min_connected(induced_subgraph(g, comp), kind, cfg);
        total.value += part.value;
        for (Vertex v : part.witness) total.witness.push_back(comp[static_cast<std::size_t>(v)]);
    }
    std::sort(total.witness.begin(), total.witness.end());
    return total;
}

std::vector<VertexSet> minimum_convexity_sets(const Graph& g, ConvexityKind kind, const OracleConfig& cfg) {
    require_vertices(g, cfg.cap, cfg, "subset enumeration");
    if (kind == ConvexityKind::steiner && !is_connected(g))
        throw DomainError("Steiner number is undefined on a disconnected graph");
    const KindChecker check(g, kind);
    std::vector<VertexSet> out;
    int found_size = -1;
    enumerate_candidates(g, [&](Mask s) {
        if (found_size >= 0 && popcount(s) > found_size) return true;
        if (check(s)) {
            found_size = popcount(s);
            out.push_back(from_mask(s));
        }
        return false;
    });
    return out;
}

WitnessedNumber max_proper_monophonically_convex(const Graph& g, const OracleConfig& cfg) {
    require_vertices(g, cfg.cap, cfg, "convex subset enumeration");
    const std::size_t n = g.order();
    if (n == 0) throw DomainError("the empty graph has no proper subset");
    const auto pairs = monophonic_pair_masks(g);
    const VertexSet all = all_vertices(g);
    for (std::size_t k = n - 1;; --k) {
        WitnessedNumber out{-1, {}};
        detail::for_each_combination(all, k, [&](Mask c) {
            if (pair_closure(pairs, n, c) != c) return false;
            out = {static_cast<int>(k), from_mask(c)};
            return true;
        });
        if (out.value >= 0) return out;
        if (k == 0) break;
    }
    return {0, {}};
}

}  // namespace convexia
