#include "convexia/suites.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>

#include "convexia/at_free.hpp"
#include "convexia/convexity.hpp"
#include "convexia/decomposition.hpp"
#include "convexia/generators.hpp"
#include "convexia/permutation.hpp"
#include "convexia/tree_family.hpp"

namespace convexia {

using nlohmann::json;

json to_json(const SuiteReport& report) {
    return {{"suite", report.suite}, {"cases", report.cases}, {"failures", report.failures}};
}

namespace {

using Check = std::function<std::vector<json>()>;

/// Runs the checks on `jobs` threads; failures are gathered in case order.
SuiteReport run_checks(std::string suite, const std::vector<Check>& checks, int jobs) {
    std::vector<std::vector<json>> results(checks.size());
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    auto work = [&](std::size_t first) {
        for (std::size_t i = first; i < checks.size(); i += workers) results[i] = checks[i]();
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    SuiteReport report{std::move(suite), static_cast<int>(checks.size()), {}};
    for (auto& r : results)
        for (auto& f : r) report.failures.push_back(std::move(f));
    return report;
}

int budget_or(const SuiteOptions& o, int fallback) { return o.budget > 0 ? o.budget : fallback; }

json mismatch(const std::string& id, const std::string& what, int expected, int got) {
    return {{"case", id}, {"check", what}, {"oracle", expected}, {"computed", got}};
}

std::string perm_id(const PermutationDiagram& d) { return "perm:" + to_string(d); }

SuiteReport dp_vs_oracle(const SuiteOptions& o) {
    std::vector<Check> checks;
    const int max_n = o.budget > 0 ? std::min(o.budget, 12) : 10;
    for (int n = 1; n <= max_n; ++n)
        for (Graph t : all_trees(static_cast<std::size_t>(n)))
            checks.push_back([t = std::move(t)] {
                std::vector<json> out;
                const std::string id = "g6:" + to_graph6(t);
                const int g2 = min_convexity_number(t, ConvexityKind::two_geodetic).value;
                const int dp = tree_2geodetic_number(t).value;
                if (g2 != dp) out.push_back(mismatch(id, "g2", g2, dp));
                const int g = min_convexity_number(t, ConvexityKind::geodetic).value;
                if (g != tree_geodetic_number(t).value) out.push_back(mismatch(id, "g", g, tree_geodetic_number(t).value));
                return out;
            });
    return run_checks("dp-vs-oracle", checks, o.jobs);
}

SuiteReport class_vs_oracle(const SuiteOptions& o) {
    Rng rng(o.seed);
    std::vector<Check> checks;
    const int count = budget_or(o, 500);
    for (int i = 0; i < count; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        const bool tree_cograph = i % 2 == 0;
        Graph g = tree_cograph ? random_tree_cograph(n, rng) : random_p4_sparse(n, rng);
        checks.push_back([g = std::move(g), tree_cograph] {
            std::vector<json> out;
            const std::string id = "g6:" + to_graph6(g);
            for (ConvexityKind kind : {ConvexityKind::geodetic, ConvexityKind::two_geodetic}) {
                const int oracle = min_convexity_number(g, kind).value;
                const int value = tree_cograph ? tree_cograph_number(g, kind).value : p4_sparse_number(g, kind).value;
                if (oracle != value) out.push_back(mismatch(id, std::string(to_string(kind)), oracle, value));
            }
            return out;
        });
    }
    return run_checks("class-vs-oracle", checks, o.jobs);
}

std::vector<json> steiner_check(const Graph& g, const std::string& id) {
    const SteinerGeodeticReport r = verify_steiner_implies_geodetic(g, id);
    std::vector<json> out;
    if (!r.violations.empty() || r.geodetic > r.steiner) out.push_back(to_json(r));
    return out;
}

SuiteReport steiner_geodetic(const SuiteOptions& o) {
    Rng rng(o.seed);
    std::vector<Check> checks;
    const int count = budget_or(o, 200);
    for (int i = 0; i < count; ++i) {
        const auto d = random_connected_permutation(std::uniform_int_distribution<std::size_t>(2, 10)(rng), rng);
        checks.push_back([d] { return steiner_check(permutation_to_graph(d), perm_id(d)); });
    }
    for (int i = 0; i < count; ++i) {
        const auto u = random_unit_interval(std::uniform_int_distribution<std::size_t>(2, 10)(rng), rng);
        checks.push_back([g = u.graph, i] { return steiner_check(g, "unit-interval:" + std::to_string(i)); });
    }
    return run_checks("steiner-geodetic", checks, o.jobs);
}

json violation(const std::string& id, const std::string& what, nlohmann::json detail) {
    return {{"case", id}, {"check", what}, {"detail", std::move(detail)}};
}

std::vector<json> betweenness_check(const Graph& g, const std::string& id) {
    std::vector<json> out;
    const std::size_t n = g.order();
    const auto dfs = monophonic_pair_masks(g);
    for (Vertex x = 0; x < static_cast<Vertex>(n); ++x)
        for (Vertex y = x + 1; y < static_cast<Vertex>(n); ++y) {
            if (g.adjacent(x, y)) continue;
            const PairStructure p = pair_structure(g, x, y);
            for (Vertex z : p.between) {
                if (contains(component_avoiding(g, z, x), y))
                    out.push_back(violation(id, "separation", {x, y, z}));
                const bool member = (dfs[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] & bit(z)) != 0;
                if (monophonic_membership(g, x, y, z) != member) out.push_back(violation(id, "membership", {x, y, z}));
            }
            const Mask bound = bit(x) | bit(y) | to_mask(p.delta_x) | to_mask(p.delta_y) | to_mask(p.between);
            if ((dfs[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] & ~bound) != 0)
                out.push_back(violation(id, "containment", {x, y}));
        }
    if (is_connected(g) && !is_complete(g)) {
        const PairStructure e = extremal_pair(g);
        if (!is_dominating_pair(g, e.x, e.y)) out.push_back(violation(id, "dominating-pair", {e.x, e.y}));
        auto joined = [&](const VertexSet& a, const VertexSet& delta) {
            for (Vertex u : a)
                for (Vertex v : delta)
                    if (!g.adjacent(u, v)) return false;
            return true;
        };
        if (!joined(e.a_x, e.delta_x) || !joined(e.a_y, e.delta_y))
            out.push_back(violation(id, "extremal-join", {e.x, e.y}));
        const LargestAvoidingSplit split = largest_avoiding_split(g);
        if (!joined(split.rest, split.delta)) out.push_back(violation(id, "largest-component-join", split.x));
    }
    return out;
}

SuiteReport betweenness(const SuiteOptions& o) {
    Rng rng(o.seed);
    std::vector<Check> checks;
    const int count = budget_or(o, 200);
    for (int i = 0; i < count; ++i) {
        const auto d = random_connected_permutation(std::uniform_int_distribution<std::size_t>(2, 10)(rng), rng);
        checks.push_back([d] { return betweenness_check(permutation_to_graph(d), perm_id(d)); });
    }
    for (int i = 0; i < count; ++i) {
        const auto u = random_unit_interval(std::uniform_int_distribution<std::size_t>(2, 10)(rng), rng);
        checks.push_back([g = u.graph, i] { return betweenness_check(g, "unit-interval:" + std::to_string(i)); });
    }
    return run_checks("betweenness", checks, o.jobs);
}

std::vector<json> perm_dp_check(const PermutationDiagram& d) {
    const Graph g = permutation_to_graph(d);
    const int oracle = min_convexity_number(g, ConvexityKind::monophonic).value;
    const int value = permutation_monophonic_number(d).value;
    if (oracle == value) return {};
    return {mismatch(perm_id(d), "m", oracle, value)};
}

std::vector<json> join_check(const Graph& a, const Graph& b) {
    const int oracle = min_convexity_number(join(a, b), ConvexityKind::monophonic).value;
    const JoinFactor fa{is_complete(a), is_complete(a) ? static_cast<int>(a.order())
                                                        : min_convexity_number(a, ConvexityKind::monophonic).value};
    const JoinFactor fb{is_complete(b), is_complete(b) ? static_cast<int>(b.order())
                                                        : min_convexity_number(b, ConvexityKind::monophonic).value};
    const int value = join_monophonic_number(fa, fb);
    if (oracle == value) return {};
    return {mismatch("join:" + to_graph6(a) + "+" + to_graph6(b), "m", oracle, value)};
}

SuiteReport perm_dp(const SuiteOptions& o) {
    Rng rng(o.seed);
    std::vector<Check> checks;
    const int count = budget_or(o, 500);
    for (int i = 0; i < count; ++i) {
        const auto d = random_connected_permutation(std::uniform_int_distribution<std::size_t>(1, 11)(rng), rng);
        checks.push_back([d] { return perm_dp_check(d); });
    }
    for (int i = 0; i < count / 5; ++i) {
        const auto n1 = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const auto n2 = std::uniform_int_distribution<std::size_t>(1, 8 - n1)(rng);
        Graph a = random_graph(n1, 0.5, rng);
        Graph b = random_graph(n2, 0.5, rng);
        checks.push_back([a = std::move(a), b = std::move(b)] { return join_check(a, b); });
    }
    return run_checks("perm-dp", checks, o.jobs);
}

std::vector<json> cover_check(const PermutationDiagram& d) {
    std::vector<json> out;
    const Graph g = permutation_to_graph(d);
    const std::string id = perm_id(d);
    const std::size_t n = g.order();

    // Neighborhood nesting along every scanline separator.
    for (const auto& s : scanline_separator_set(d)) {
        if (s.crossing.empty() || !is_minimal_separator(g, s.crossing)) continue;
        for (const auto& c : components(g, set_difference(all_vertices(g), s.crossing))) {
            const Mask cm = to_mask(c);
            for (Vertex a : s.crossing)
                for (Vertex b : s.crossing) {
                    if (a >= b || g.adjacent(a, b)) continue;
                    const Mask na = g.neighbor_mask(a) & cm;
                    const Mask nb = g.neighbor_mask(b) & cm;
                    if ((na & ~nb) != 0 && (nb & ~na) != 0) out.push_back(violation(id, "nesting", {a, b}));
                }
        }
    }
    if (!is_connected(g) || is_complete(g)) return out;

    const PairStructure e = extremal_pair(g);
    for (const auto& q : minimum_convexity_sets(g, ConvexityKind::monophonic)) {
        const bool misses_ax = set_intersection(q, e.a_x).empty() && set_intersection(q, e.delta_x).empty();
        const bool misses_ay = set_intersection(q, e.a_y).empty() && set_intersection(q, e.delta_y).empty();
        if (misses_ax || misses_ay) out.push_back(violation(id, "delta-hit", q));
    }

    const auto pairs = betweenness_pair_masks(g);
    const Mask anchors = bit(e.x) | bit(e.y);
    const Mask closure = pairs[static_cast<std::size_t>(e.x) * n + static_cast<std::size_t>(e.y)];
    for (const auto& c : components(g, from_mask(g.vertex_mask() & ~closure))) {
        const int bounded = cover_number(d, g, pairs, anchors, c, kBoundaryPicks);
        const int open = cover_number(d, g, pairs, anchors, c, static_cast<int>(n));
        if (bounded > open) out.push_back(violation(id, "cover-bound", {{"component", c}, {"bounded", bounded}, {"open", open}}));
    }
    return out;
}

SuiteReport cover_bound(const SuiteOptions& o) {
    Rng rng(o.seed);
    std::vector<Check> checks;
    const int count = budget_or(o, 200);
    for (int i = 0; i < count; ++i) {
        const auto d = random_connected_permutation(std::uniform_int_distribution<std::size_t>(2, 10)(rng), rng);
        checks.push_back([d] { return cover_check(d); });
    }
    return run_checks("cover-bound", checks, o.jobs);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"dp-vs-oracle", "class-vs-oracle", "steiner-geodetic",
                                                "betweenness",  "perm-dp",         "cover-bound"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "dp-vs-oracle") return dp_vs_oracle(options);
    if (name == "class-vs-oracle") return class_vs_oracle(options);
    if (name == "steiner-geodetic") return steiner_geodetic(options);
    if (name == "betweenness") return betweenness(options);
    if (name == "perm-dp") return perm_dp(options);
    if (name == "cover-bound") return cover_bound(options);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace convexia
