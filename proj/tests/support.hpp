#pragma once

// Small graph builders and a brute-force reference oracle written straight
// from the definitions, independent of the library's oracles.

#include <algorithm>
#include <queue>
#include <vector>

#include "convexia/graph.hpp"

namespace testing {

using convexia::Edge;
using convexia::Graph;
using convexia::Mask;
using convexia::Vertex;
using convexia::VertexSet;

inline Graph make(std::size_t n, std::vector<Edge> edges) { return Graph(n, edges); }

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i < n; ++i) e.emplace_back(int(i - 1), int(i));
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(int(i), int((i + 1) % n));
    return Graph(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(int(i), int(j));
    return Graph(n, e);
}

inline Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, int(i));
    return Graph(leaves + 1, e);
}

namespace naive {

inline bool adj(const Graph& g, int u, int v) { return g.adjacent(u, v); }

inline bool connected(const Graph& g, Mask s) {
    if (s == 0) return true;
    Mask seen = s & (~s + 1), frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (int v = 0; v < int(g.order()); ++v)
            if (frontier >> v & 1)
                for (int w : g.neighbors(v))
                    if ((s >> w & 1) && !(seen >> w & 1)) next |= Mask{1} << w;
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

inline std::vector<int> bfs(const Graph& g, int s) {
    std::vector<int> d(g.order(), -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (d[w] < 0) d[w] = d[v] + 1, q.push(w);
    }
    return d;
}

inline Mask geodetic_hull(const Graph& g, Mask s) {
    const int n = int(g.order());
    Mask out = s;
    for (int x = 0; x < n; ++x) {
        if (!(s >> x & 1)) continue;
        const auto dx = bfs(g, x);
        for (int y = x + 1; y < n; ++y) {
            if (!(s >> y & 1) || dx[y] < 0) continue;
            const auto dy = bfs(g, y);
            for (int z = 0; z < n; ++z)
                if (dx[z] >= 0 && dx[z] + dy[z] == dx[y]) out |= Mask{1} << z;
        }
    }
    return out;
}

// P induces a path with ends x and y.
inline bool induced_path(const Graph& g, Mask p, int x, int y) {
    if (!connected(g, p)) return false;
    int edges = 0;
    for (int v = 0; v < int(g.order()); ++v) {
        if (!(p >> v & 1)) continue;
        int deg = 0;
        for (int w : g.neighbors(v)) deg += p >> w & 1;
        edges += deg;
        if (deg > 2 || ((v == x || v == y) && deg != 1)) return false;
    }
    return edges / 2 == std::popcount(p) - 1;
}

inline Mask monophonic_hull(const Graph& g, Mask s) {
    const int n = int(g.order());
    Mask out = s;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (!(s >> x & 1) || !(s >> y & 1)) continue;
            const Mask ends = (Mask{1} << x) | (Mask{1} << y);
            const Mask rest = ((Mask{1} << n) - 1) & ~ends;
            for (Mask sub = rest;; sub = (sub - 1) & rest) {
                if ((out | sub) != out && induced_path(g, sub | ends, x, y)) out |= sub;
                if (sub == 0) break;
            }
        }
    return out;
}

// Union of all minimum connected vertex sets containing W.
inline Mask steiner_hull(const Graph& g, Mask w) {
    const int n = int(g.order());
    const Mask all = (Mask{1} << n) - 1;
    int best = n + 1;
    Mask out = 0;
    for (Mask u = 0; u <= all; ++u) {
        if ((u & w) != w || std::popcount(u) > best || !connected(g, u)) continue;
        if (std::popcount(u) < best) best = std::popcount(u), out = 0;
        out |= u;
    }
    return out;
}

inline bool two_geodetic(const Graph& g, Mask s) {
    for (int v = 0; v < int(g.order()); ++v) {
        if (s >> v & 1) continue;
        bool ok = false;
        for (int a : g.neighbors(v))
            for (int b : g.neighbors(v))
                ok = ok || ((s >> a & 1) && (s >> b & 1) && a != b && !g.adjacent(a, b));
        if (!ok) return false;
    }
    return true;
}

enum class Kind { geodetic, two_geodetic, monophonic, steiner };

inline bool covers(const Graph& g, Mask s, Kind k) {
    const Mask all = (Mask{1} << g.order()) - 1;
    switch (k) {
        case Kind::geodetic: return geodetic_hull(g, s) == all;
        case Kind::two_geodetic: return two_geodetic(g, s);
        case Kind::monophonic: return monophonic_hull(g, s) == all;
        case Kind::steiner: return s != 0 && steiner_hull(g, s) == all;
    }
    return false;
}

// Minimum over all subsets; connected graphs only.
inline int number(const Graph& g, Kind k) {
    const Mask all = (Mask{1} << g.order()) - 1;
    int best = int(g.order());
    for (Mask s = 0; s <= all; ++s)
        if (std::popcount(s) < best && covers(g, s, k)) best = std::popcount(s);
    return best;
}

inline int max_proper_monophonic_convex(const Graph& g) {
    const Mask all = (Mask{1} << g.order()) - 1;
    int best = 0;
    for (Mask s = 0; s < all; ++s)
        if (std::popcount(s) > best && monophonic_hull(g, s) == s) best = std::popcount(s);
    return best;
}

inline int clique_number(const Graph& g) {
    const Mask all = (Mask{1} << g.order()) - 1;
    int best = 0;
    for (Mask s = 1; s <= all; ++s) {
        bool clique = true;
        for (int u = 0; u < int(g.order()) && clique; ++u)
            for (int v = u + 1; v < int(g.order()) && clique; ++v)
                if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v)) clique = false;
        if (clique) best = std::max(best, std::popcount(s));
    }
    return best;
}

// Asteroidal triple by the boxed definition: each pair joined by a path
// avoiding the closed neighborhood of the third.
inline bool has_asteroidal_triple(const Graph& g) {
    const int n = int(g.order());
    auto joined = [&](int a, int b, int avoid) {
        Mask alive = (Mask{1} << n) - 1;
        alive &= ~(Mask{1} << avoid);
        for (int w : g.neighbors(avoid)) alive &= ~(Mask{1} << w);
        if (!(alive >> a & 1) || !(alive >> b & 1)) return false;
        Mask seen = Mask{1} << a, frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1)
                    for (int w : g.neighbors(v))
                        if ((alive >> w & 1) && !(seen >> w & 1)) next |= Mask{1} << w;
            seen |= next;
            frontier = next;
        }
        return (seen >> b & 1) != 0;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (joined(a, b, c) && joined(a, c, b) && joined(b, c, a)) return true;
    return false;
}

// Number of 4-subsets of `within` inducing a P4.
inline int induced_p4_count(const Graph& g, Mask within) {
    int count = 0;
    for (Mask s = within;; s = (s - 1) & within) {
        if (std::popcount(s) == 4 && naive::connected(g, s)) {
            int edges = 0, ends = 0;
            for (int v = 0; v < int(g.order()); ++v) {
                if (!(s >> v & 1)) continue;
                int deg = 0;
                for (int w : g.neighbors(v)) deg += s >> w & 1;
                edges += deg;
                ends += deg == 1;
            }
            count += edges == 6 && ends == 2;
        }
        if (s == 0) break;
    }
    return count;
}

inline Mask mask_of(const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s) m |= Mask{1} << v;
    return m;
}

}  // namespace naive
}  // namespace testing
