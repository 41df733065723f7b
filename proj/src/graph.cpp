#include "reconf/graph.hpp"

#include "reconf/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace reconf {

namespace {

constexpr int kBitMatrixLimit = 1 << 14;

}  // namespace

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
        throw PreconditionError("duplicate edge " + std::to_string(it->first) + " " + std::to_string(it->second));

    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());

    if (n <= kBitMatrixLimit) {
        words_per_row_ = (static_cast<std::size_t>(n) + 63) / 64;
        bits_.assign(words_per_row_ * static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges_) {
            bits_[static_cast<std::size_t>(u) * words_per_row_ + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
            bits_[static_cast<std::size_t>(v) * words_per_row_ + static_cast<std::size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
        }
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!bits_.empty())
        return (bits_[static_cast<std::size_t>(u) * words_per_row_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
    const auto& a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::induced(std::span<const Vertex> vs) const {
    std::vector<int> local(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) local[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (Vertex w : neighbors(vs[i])) {
            int j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), j);
        }
    return Graph(static_cast<int>(vs.size()), es);
}

Graph Graph::complement() const {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) es.emplace_back(u, v);
    return Graph(n_, es);
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_split_partition(const Graph& g, const SplitPartition& p) {
    if (p.clique.size() + p.independent.size() != static_cast<std::size_t>(g.num_vertices())) return false;
    VertexSet all;
    std::merge(p.clique.begin(), p.clique.end(), p.independent.begin(), p.independent.end(), std::back_inserter(all));
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<Vertex>(i)) return false;
    return is_clique(g, p.clique) && is_independent(g, p.independent);
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    // Hammer-Simeone: with degrees d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
    // g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(by_degree[static_cast<std::size_t>(i - 1)]) >= i - 1) m = i;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(by_degree[static_cast<std::size_t>(i)]);
    if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;

    // The top-m vertices form a maximum clique K0 with an independent
    // complement. Every other maximum clique is {v} + N(v) for an independent
    // vertex v of degree m-1.
    VertexSet k0(by_degree.begin(), by_degree.begin() + m);
    std::sort(k0.begin(), k0.end());
    std::vector<VertexSet> candidates{k0};
    for (int i = m; i < n; ++i) {
        Vertex v = by_degree[static_cast<std::size_t>(i)];
        if (g.degree(v) == m - 1 && m > 0) {
            VertexSet q = g.neighbors(v);
            q.insert(std::lower_bound(q.begin(), q.end(), v), v);
            candidates.push_back(std::move(q));
        }
    }

    const long long total_edges = static_cast<long long>(g.num_edges());
    auto complement_independent = [&](const VertexSet& q) {
        long long touching = 0;
        for (Vertex v : q) touching += g.degree(v);
        long long inside = static_cast<long long>(q.size()) * (static_cast<long long>(q.size()) - 1) / 2;
        return touching - inside == total_edges;
    };

    std::optional<VertexSet> best;
    for (auto& q : candidates) {
        if (!is_clique(g, q) || !complement_independent(q)) continue;
        if (!best || q < *best) best = q;
    }
    if (!best) return std::nullopt;

    SplitPartition p;
    p.clique = *best;
    for (Vertex v = 0; v < n; ++v)
        if (!std::binary_search(p.clique.begin(), p.clique.end(), v)) p.independent.push_back(v);
    return p;
}

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& ord) {
    const int n = g.num_vertices();
    if (ord.order.size() != static_cast<std::size_t>(n)) return false;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < ord.order.size(); ++i) {
        Vertex v = ord.order[i];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) return false;
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    // Standard check: the later neighbors of v minus the earliest one, p, must
    // all be adjacent to p.
    for (Vertex v = 0; v < n; ++v) {
        Vertex parent = -1;
        for (Vertex w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] &&
                (parent == -1 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(parent)]))
                parent = w;
        if (parent == -1) continue;
        for (Vertex w : g.neighbors(v))
            if (w != parent && pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] && !g.has_edge(parent, w))
                return false;
    }
    return true;
}

std::optional<EliminationOrder> elimination_order(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> numbered(static_cast<std::size_t>(n), 0);
    EliminationOrder ord;
    ord.order.resize(static_cast<std::size_t>(n));
    for (int step = n - 1; step >= 0; --step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!numbered[static_cast<std::size_t>(v)] &&
                (pick == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
                pick = v;
        numbered[static_cast<std::size_t>(pick)] = 1;
        ord.order[static_cast<std::size_t>(step)] = pick;
        for (Vertex w : g.neighbors(pick))
            if (!numbered[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
    if (!is_perfect_elimination_order(g, ord)) return std::nullopt;
    return ord;
}

int clique_number_chordal(const Graph& g, const EliminationOrder& ord) {
    if (!is_perfect_elimination_order(g, ord))
        throw PreconditionError("order is not a perfect elimination order");
    const int n = g.num_vertices();
    if (n == 0) return 0;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < ord.order.size(); ++i) pos[static_cast<std::size_t>(ord.order[i])] = static_cast<int>(i);
    int best = 1;
    for (Vertex v = 0; v < n; ++v) {
        int later = 0;
        for (Vertex w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) ++later;
        best = std::max(best, later + 1);
    }
    return best;
}

namespace {

bool color_search(const Graph& h, const std::vector<Vertex>& order, std::vector<int>& color, std::size_t idx,
                  int used, int c) {
    if (idx == order.size()) return true;
    Vertex v = order[idx];
    // Symmetry breaking: a fresh color is only ever the next unused one.
    for (int col = 0; col < std::min(used + 1, c); ++col) {
        bool ok = true;
        for (Vertex w : h.neighbors(v))
            if (color[static_cast<std::size_t>(w)] == col) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = col;
        if (color_search(h, order, color, idx + 1, std::max(used, col + 1), c)) return true;
        color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

}  // namespace

bool colorable_exhaustive(const Graph& g, std::span<const Vertex> s, int c) {
    if (c < 1) return s.empty();
    Graph h = g.induced(s);
    std::vector<Vertex> order(static_cast<std::size_t>(h.num_vertices()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    std::vector<int> color(order.size(), -1);
    return color_search(h, order, color, 0, 0, c);
}

bool chromatic_leq(const Graph& g, std::span<const Vertex> s, int c) {
    if (static_cast<int>(s.size()) <= c) return true;
    if (c == 1) return is_independent(g, s);
    Graph h = g.induced(s);
    if (auto ord = elimination_order(h)) return clique_number_chordal(h, *ord) <= c;
    return colorable_exhaustive(g, s, c);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> out;
    for (Vertex start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        VertexSet comp{start};
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

ColorabilityChecker::ColorabilityChecker(const Graph& g) : graph_(&g) {
    if (auto ord = elimination_order(g)) {
        position_.resize(static_cast<std::size_t>(g.num_vertices()));
        for (std::size_t i = 0; i < ord->order.size(); ++i)
            position_[static_cast<std::size_t>(ord->order[i])] = static_cast<int>(i);
    }
}

bool ColorabilityChecker::operator()(std::span<const Vertex> s, int c) const {
    if (static_cast<int>(s.size()) <= c) return true;
    if (c == 1) return is_independent(*graph_, s);
    if (position_.empty()) return chromatic_leq(*graph_, s, c);

    // omega(g[s]) = 1 + max over v in s of |later neighbours of v inside s|.
    for (std::size_t i = 0; i < s.size(); ++i) {
        int later = 0;
        const int pv = position_[static_cast<std::size_t>(s[i])];
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i && position_[static_cast<std::size_t>(s[j])] > pv && graph_->has_edge(s[i], s[j]))
                if (++later >= c) return false;
    }
    return true;
}

}  // namespace reconf
