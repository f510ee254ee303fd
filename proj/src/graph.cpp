#include "convexia/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

#include "convexia/errors.hpp"

namespace convexia {

Mask to_mask(std::span<const Vertex> set) {
    Mask m = 0;
    for (Vertex v : set) m |= bit(v);
    return m;
}

VertexSet from_mask(Mask m) {
    VertexSet out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Graph::Graph(std::size_t n) : adj_(n) {
    if (n <= kMaskBits) masks_.assign(n, 0);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw RangeError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} outside vertex range 0.." + std::to_string(n) + "-1");
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
    if (!masks_.empty())
        for (std::size_t v = 0; v < n; ++v) masks_[v] = to_mask(adj_[v]);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!masks_.empty()) return (masks_[static_cast<std::size_t>(u)] >> v) & 1U;
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != order())
        throw RangeError("label count " + std::to_string(labels.size()) + " does not match n=" +
                         std::to_string(order()));
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

std::string Graph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

// ---- graph6 ------------------------------------------------------------------

namespace {

constexpr std::size_t kGraph6MaxOrder = 62;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (!text.empty() && text.front() == '>') {
        if (text.substr(0, header.size()) != header) throw ParseError("malformed graph6 header", 0);
        base = header.size();
        text.remove_prefix(header.size());
    }
    if (text.empty()) throw ParseError("empty graph6 string", base);
    const auto first = static_cast<unsigned char>(text[0]);
    if (first == 126) throw RangeError("graph6 with n > 62 is not supported");
    if (first < 63 || first > 125) throw ParseError("bad graph6 size byte", base);
    const std::size_t n = first - 63U;
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != 1 + bytes)
        throw ParseError("graph6 length " + std::to_string(text.size()) + " does not match n=" +
                             std::to_string(n) + " (expected " + std::to_string(1 + bytes) + ")",
                         base + std::min(text.size(), 1 + bytes));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const std::size_t pos = 1 + k / 6;
            const auto c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126) throw ParseError("bad graph6 character", base + pos);
            if (((c - 63U) >> (5 - k % 6)) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    for (std::size_t pos = 1; pos < text.size(); ++pos) {
        const auto c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw ParseError("bad graph6 character", base + pos);
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) throw RangeError("graph6 output supports n <= 62, got " + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    unsigned acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

// ---- edge list -----------------------------------------------------------------

namespace {

bool parse_index(std::string_view token, long long& value) {
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    long long declared = -1;
    long long max_index = -1;
    bool seen_content = false;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::pair<std::string_view, std::size_t>> tokens;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) tokens.emplace_back(line.substr(i, j - i), line_start + i);
            i = j;
        }

        if (!tokens.empty()) {
            if (tokens.size() == 1 && tokens[0].first.starts_with("n=")) {
                if (seen_content) throw ParseError("n=<k> must precede the edges", tokens[0].second);
                if (!parse_index(tokens[0].first.substr(2), declared) || declared < 0)
                    throw ParseError("bad vertex count", tokens[0].second);
            } else if (tokens.size() != 2) {
                throw ParseError("expected two vertex indices per line", tokens.front().second);
            } else {
                long long u = 0;
                long long v = 0;
                if (!parse_index(tokens[0].first, u) || u < 0) throw ParseError("bad vertex index", tokens[0].second);
                if (!parse_index(tokens[1].first, v) || v < 0) throw ParseError("bad vertex index", tokens[1].second);
                if (u == v) throw ParseError("self-loop", tokens[0].second);
                if (declared >= 0 && (u >= declared || v >= declared))
                    throw RangeError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                     "} outside declared n=" + std::to_string(declared));
                max_index = std::max({max_index, u, v});
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
            seen_content = true;
        }
        line_start = line_end + 1;
    }
    const long long n = declared >= 0 ? declared : max_index + 1;
    return Graph(static_cast<std::size_t>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = "n=" + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph load_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string serialize(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? to_graph6(g) : to_edge_list(g);
}

// ---- queries -----------------------------------------------------------------

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph(n, edges).with_labels(g.labels());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> local(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i]))
            if (Vertex j = local[static_cast<std::size_t>(w)]; j > static_cast<Vertex>(i))
                edges.emplace_back(static_cast<Vertex>(i), j);
    Graph h(vertices.size(), edges);
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (Vertex v : vertices) labels.push_back(g.label(v));
        h = h.with_labels(std::move(labels));
    }
    return h;
}

std::vector<VertexSet> components(const Graph& g, std::span<const Vertex> alive) {
    std::vector<char> in(g.order(), 0);
    for (Vertex v : alive) in[static_cast<std::size_t>(v)] = 1;
    VertexSet order(alive.begin(), alive.end());
    std::sort(order.begin(), order.end());
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s : order) {
        if (in[static_cast<std::size_t>(s)] != 1) continue;
        VertexSet comp;
        in[static_cast<std::size_t>(s)] = 2;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (in[static_cast<std::size_t>(w)] == 1) {
                    in[static_cast<std::size_t>(w)] = 2;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    const VertexSet all = all_vertices(g);
    return components(g, all);
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

std::vector<int> distances(const Graph& g, Vertex source) {
    std::vector<int> dist(g.order(), kInfinite);
    std::queue<Vertex> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] == kInfinite) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push(w);
            }
    }
    return dist;
}

std::vector<int> distance_matrix(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> table(n * n);
    for (std::size_t s = 0; s < n; ++s) {
        auto row = distances(g, static_cast<Vertex>(s));
        std::copy(row.begin(), row.end(), table.begin() + static_cast<std::ptrdiff_t>(s * n));
    }
    return table;
}

int diameter(const Graph& g) {
    int best = 0;
    for (std::size_t s = 0; s < g.order(); ++s)
        for (int d : distances(g, static_cast<Vertex>(s))) best = std::max(best, d);
    return best;
}

bool is_clique(const Graph& g, std::span<const Vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (!g.adjacent(set[i], set[j])) return false;
    return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j])) return false;
    return true;
}

bool is_complete(const Graph& g) {
    const std::size_t n = g.order();
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (is_clique(g, g.neighbors(static_cast<Vertex>(v)))) out.push_back(static_cast<Vertex>(v));
    return out;
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

bool is_chordal(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> weight(n, 0);
    std::vector<int> visited_at(n, -1);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = -1;
        for (std::size_t v = 0; v < n; ++v)
            if (visited_at[v] < 0 && (best < 0 || weight[v] > weight[static_cast<std::size_t>(best)]))
                best = static_cast<Vertex>(v);
        visited_at[static_cast<std::size_t>(best)] = static_cast<int>(step);
        order.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (visited_at[static_cast<std::size_t>(w)] < 0) ++weight[static_cast<std::size_t>(w)];
    }
    // Reverse MCS order is a perfect elimination order iff g is chordal: the
    // neighbors visited before v must be pairwise adjacent.
    for (Vertex v : order) {
        VertexSet earlier;
        for (Vertex w : g.neighbors(v))
            if (visited_at[static_cast<std::size_t>(w)] < visited_at[static_cast<std::size_t>(v)]) earlier.push_back(w);
        if (!is_clique(g, earlier)) return false;
    }
    return true;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(std::span<const Vertex> set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

VertexSet all_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) out[v] = static_cast<Vertex>(v);
    return out;
}

VertexSet neighborhood(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> mark(g.order(), 0);
    for (Vertex v : set) mark[static_cast<std::size_t>(v)] = 1;
    VertexSet out;
    for (Vertex v : set)
        for (Vertex w : g.neighbors(v))
            if (mark[static_cast<std::size_t>(w)] == 0) {
                mark[static_cast<std::size_t>(w)] = 2;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace convexia
