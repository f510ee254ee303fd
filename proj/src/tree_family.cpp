#include "convexia/tree_family.hpp"

#include <algorithm>
#include <stdexcept>

#include "convexia/errors.hpp"

namespace convexia {

namespace {

// Complement-side witnesses are re-verified up to this order; beyond it the
// complement would be dense and quadratic to build.
constexpr std::size_t kVerifyLimit = 1000;

void require_tree(const Graph& t) {
    if (!is_tree(t)) throw DomainError("input is not a tree");
}

struct Backtrack {
    Vertex beta_child = -1;
    Vertex gamma_first = -1;
    Vertex gamma_second = -1;
};

int min3(const DpState& s) { return std::min({s.alpha, s.beta, s.gamma}); }

std::vector<DpState> run_dp(const RootedTree& tree, std::vector<Backtrack>* back) {
    const std::size_t n = tree.parent.size();
    std::vector<DpState> state(n);
    if (back) back->assign(n, {});
    for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
        const Vertex v = *it;
        const auto& kids = tree.children[static_cast<std::size_t>(v)];
        DpState& s = state[static_cast<std::size_t>(v)];
        if (kids.empty()) {
            s = {1, kInfeasible, kInfeasible};
            continue;
        }

        int alpha = 1;
        for (Vertex x : kids) alpha = saturating_add(alpha, min3(state[static_cast<std::size_t>(x)]));

        // beta: one child selected, the other children unselected with their
        // own two selected children (v cannot serve them).
        int gamma_sum = 0;
        int gamma_missing = 0;
        for (Vertex x : kids) {
            const int gx = state[static_cast<std::size_t>(x)].gamma;
            if (gx == kInfeasible) ++gamma_missing;
            else gamma_sum += gx;
        }
        int beta = kInfeasible;
        Vertex beta_child = -1;
        for (Vertex x : kids) {
            const DpState& sx = state[static_cast<std::size_t>(x)];
            const bool own_missing = sx.gamma == kInfeasible;
            if (gamma_missing - (own_missing ? 1 : 0) > 0) continue;
            const int value = saturating_add(sx.alpha, gamma_sum - (own_missing ? 0 : sx.gamma));
            if (value < beta) {
                beta = value;
                beta_child = x;
            }
        }

        // gamma: the two cheapest upgrades to "selected" on top of the best
        // admissible state of each child.
        int gamma = kInfeasible;
        Vertex first = -1;
        Vertex second = -1;
        if (kids.size() >= 2) {
            int base = 0;
            int d1 = kInfeasible;
            int d2 = kInfeasible;
            for (Vertex x : kids) {
                const DpState& sx = state[static_cast<std::size_t>(x)];
                const int best = std::min(sx.alpha, sx.gamma);
                base = saturating_add(base, best);
                const int d = sx.alpha - best;
                if (d < d1) {
                    d2 = d1;
                    second = first;
                    d1 = d;
                    first = x;
                } else if (d < d2) {
                    d2 = d;
                    second = x;
                }
            }
            gamma = saturating_add(saturating_add(base, d1), d2);
        }

        s = {alpha, beta, gamma};
        if (back) (*back)[static_cast<std::size_t>(v)] = {beta_child, first, second};
    }
    return state;
}

}  // namespace

RootedTree root_tree(const Graph& t, Vertex root) {
    const std::size_t n = t.order();
    if (root < 0 || static_cast<std::size_t>(root) >= n) throw RangeError("root outside vertex range");
    RootedTree tree;
    tree.root = root;
    tree.parent.assign(n, -1);
    tree.children.assign(n, {});
    tree.order.reserve(n);
    std::vector<char> seen(n, 0);
    seen[static_cast<std::size_t>(root)] = 1;
    tree.order.push_back(root);
    for (std::size_t head = 0; head < tree.order.size(); ++head) {
        const Vertex v = tree.order[head];
        for (Vertex w : t.neighbors(v)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            tree.parent[static_cast<std::size_t>(w)] = v;
            tree.children[static_cast<std::size_t>(v)].push_back(w);
            tree.order.push_back(w);
        }
    }
    return tree;
}

std::vector<DpState> two_geodetic_states(const RootedTree& tree) { return run_dp(tree, nullptr); }

WitnessedNumber tree_geodetic_number(const Graph& t) {
    require_tree(t);
    WitnessedNumber out;
    for (std::size_t v = 0; v < t.order(); ++v)
        if (t.degree(static_cast<Vertex>(v)) <= 1) out.witness.push_back(static_cast<Vertex>(v));
    out.value = static_cast<int>(out.witness.size());
    return out;
}

WitnessedNumber tree_2geodetic_number(const Graph& t, Vertex root) {
    require_tree(t);
    const RootedTree tree = root_tree(t, root);
    std::vector<Backtrack> back;
    const auto state = run_dp(tree, &back);
    const DpState& top = state[static_cast<std::size_t>(root)];

    enum Pick : char { alpha, beta, gamma };
    std::vector<Pick> pick(t.order(), alpha);
    pick[static_cast<std::size_t>(root)] = top.alpha <= top.gamma ? alpha : gamma;
    for (Vertex v : tree.order) {
        const auto& kids = tree.children[static_cast<std::size_t>(v)];
        const Backtrack& b = back[static_cast<std::size_t>(v)];
        switch (pick[static_cast<std::size_t>(v)]) {
            case alpha:
                for (Vertex x : kids) {
                    const DpState& sx = state[static_cast<std::size_t>(x)];
                    const int best = min3(sx);
                    pick[static_cast<std::size_t>(x)] = sx.alpha == best ? alpha : (sx.beta == best ? beta : gamma);
                }
                break;
            case beta:
                for (Vertex x : kids) pick[static_cast<std::size_t>(x)] = x == b.beta_child ? alpha : gamma;
                break;
            case gamma:
                for (Vertex x : kids) {
                    const DpState& sx = state[static_cast<std::size_t>(x)];
                    const bool forced = x == b.gamma_first || x == b.gamma_second;
                    pick[static_cast<std::size_t>(x)] = (forced || sx.alpha <= sx.gamma) ? alpha : gamma;
                }
                break;
        }
    }

    WitnessedNumber out;
    out.value = std::min(top.alpha, top.gamma);
    for (std::size_t v = 0; v < t.order(); ++v)
        if (pick[v] == alpha) out.witness.push_back(static_cast<Vertex>(v));
    if (static_cast<int>(out.witness.size()) != out.value)
        throw std::logic_error("2-geodetic back-tracking disagrees with the DP value");
    return out;
}

std::vector<Vertex> tree_diametral_path(const Graph& t) {
    require_tree(t);
    auto farthest = [&](Vertex s, std::vector<Vertex>& parent) {
        const RootedTree tree = root_tree(t, s);
        parent = tree.parent;
        return tree.order.back();
    };
    std::vector<Vertex> parent;
    const Vertex a = farthest(0, parent);
    const Vertex b = farthest(a, parent);
    std::vector<Vertex> path;
    for (Vertex v = b; v >= 0; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    return path;
}

CotreeCase cotree_case(const Graph& t) {
    const auto path = tree_diametral_path(t);
    const std::size_t diam = path.size() - 1;
    if (diam <= 2) return CotreeCase::small_diameter;
    if (diam == 3) return CotreeCase::diameter_three;
    for (std::size_t v = 0; v < t.order(); ++v)
        if (t.degree(static_cast<Vertex>(v)) == 2) return CotreeCase::degree_two;
    return CotreeCase::general;
}

namespace {

Vertex first_of_degree(const Graph& t, std::size_t degree) {
    for (std::size_t v = 0; v < t.order(); ++v)
        if (t.degree(static_cast<Vertex>(v)) == degree) return static_cast<Vertex>(v);
    return -1;
}

Vertex leaf_of(const Graph& t, Vertex center) {
    for (Vertex w : t.neighbors(center))
        if (t.degree(w) == 1) return w;
    return -1;
}

WitnessedNumber make_witness(VertexSet set) {
    std::sort(set.begin(), set.end());
    return {static_cast<int>(set.size()), std::move(set)};
}

void verify_on_complement(const Graph& t, const WitnessedNumber& w, ConvexityKind kind) {
    if (t.order() > kVerifyLimit) return;
    if (!is_convexity_set(complement(t), w.witness, kind))
        throw std::logic_error("cotree witness failed re-verification");
}

}  // namespace

WitnessedNumber cotree_geodetic_number(const Graph& t) {
    require_tree(t);
    const auto path = tree_diametral_path(t);
    const std::size_t diam = path.size() - 1;
    WitnessedNumber out;
    switch (cotree_case(t)) {
        case CotreeCase::small_diameter: out = make_witness(all_vertices(t)); break;
        case CotreeCase::diameter_three:
            // The two centers: every leaf lies on a length-3 geodesic between them.
            out = make_witness({path[1], path[2]});
            break;
        case CotreeCase::degree_two: {
            const Vertex v = first_of_degree(t, 2);
            const auto nb = t.neighbors(v);
            out = make_witness({nb[0], v, nb[1]});
            break;
        }
        case CotreeCase::general:
            if (diam == 4) out = make_witness({path[0], path[1], path[2], path[3]});
            else out = make_witness({path[0], path[1], path[diam - 1], path[diam]});
            break;
    }
    verify_on_complement(t, out, ConvexityKind::geodetic);
    return out;
}

WitnessedNumber cotree_2geodetic_number(const Graph& t) {
    require_tree(t);
    if (cotree_case(t) != CotreeCase::diameter_three) {
        WitnessedNumber out = cotree_geodetic_number(t);
        verify_on_complement(t, out, ConvexityKind::two_geodetic);
        return out;
    }
    const auto path = tree_diametral_path(t);
    Vertex b = path[1];
    Vertex c = path[2];
    WitnessedNumber out;
    if (t.degree(b) == 2 || t.degree(c) == 2) {
        if (t.degree(b) != 2) std::swap(b, c);
        out = make_witness({leaf_of(t, b), b, c});
    } else {
        out = make_witness({leaf_of(t, b), b, c, leaf_of(t, c)});
    }
    verify_on_complement(t, out, ConvexityKind::two_geodetic);
    return out;
}

}  // namespace convexia
