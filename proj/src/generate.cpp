#include "reconf/generate.hpp"

#include "reconf/errors.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <tuple>

namespace reconf {

namespace {

constexpr int kRetries = 1000;

// Portable stand-ins for the std distributions.
int below(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }
bool coin(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

template <class T>
void shuffle(std::mt19937_64& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(below(rng, static_cast<int>(i)))]);
}

VertexSet random_subset(std::mt19937_64& rng, int n, int size) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    shuffle(rng, all);
    VertexSet s(all.begin(), all.begin() + size);
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

ReconfigInstance generate_split(std::uint64_t seed, int n, int clique, int c, int tokens, double density) {
    if (n < 1 || clique < 0 || clique > n || c < 1 || tokens < 0 || tokens > n)
        throw PreconditionError("generate_split: sizes out of range");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i;
    shuffle(rng, label);
    std::vector<Edge> edges;
    auto add = [&](int a, int b) {
        const Vertex u = label[static_cast<std::size_t>(a)], v = label[static_cast<std::size_t>(b)];
        edges.emplace_back(std::min(u, v), std::max(u, v));
    };
    for (int a = 0; a < clique; ++a)
        for (int b = a + 1; b < clique; ++b) add(a, b);
    for (int a = 0; a < clique; ++a)
        for (int b = clique; b < n; ++b)
            if (coin(rng, density)) add(a, b);
    ReconfigInstance inst{Graph(n, edges), c, Rule::ts(), {}, {}};
    ColorabilityChecker colorable(inst.graph);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        VertexSet s = random_subset(rng, n, tokens);
        if (!colorable(s, c)) continue;
        for (int again = 0; again < kRetries; ++again) {
            VertexSet t = random_subset(rng, n, tokens);
            if (!colorable(t, c)) continue;
            inst.source = std::move(s);
            inst.target = std::move(t);
            return inst;
        }
    }
    throw PreconditionError("generate_split: no c-colorable token sets found");
}

NclInstance generate_ncl(std::uint64_t seed, int and_vertices, int or_vertices, int copy_vertices) {
    const int n = and_vertices + or_vertices + copy_vertices;
    if (and_vertices < 0 || or_vertices < 0 || copy_vertices < 0 || n == 0)
        throw PreconditionError("generate_ncl: vertex counts out of range");
    const int red_stubs = 2 * and_vertices;
    const int blue_stubs = and_vertices + 3 * or_vertices + 2 * copy_vertices;
    if (red_stubs % 2 != 0 || blue_stubs % 2 != 0) throw PreconditionError("generate_ncl: odd number of blue stubs");
    const int m = (red_stubs + blue_stubs) / 2;
    if (m > 20) throw PreconditionError("generate_ncl: more than 20 edges");

    std::mt19937_64 rng(seed);
    std::vector<Vertex> red, blue;
    for (Vertex v = 0; v < n; ++v) {
        if (v < and_vertices) {
            red.insert(red.end(), {v, v});
            blue.push_back(v);
        } else if (v < and_vertices + or_vertices) {
            blue.insert(blue.end(), {v, v, v});
        } else {
            blue.insert(blue.end(), {v, v});
        }
    }
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        shuffle(rng, red);
        shuffle(rng, blue);
        std::vector<NclEdge> edges;
        bool loop = false;
        for (std::size_t i = 0; i < red.size(); i += 2) {
            loop = loop || red[i] == red[i + 1];
            edges.push_back({std::min(red[i], red[i + 1]), std::max(red[i], red[i + 1]), NclColor::Red});
        }
        for (std::size_t i = 0; i < blue.size(); i += 2) {
            loop = loop || blue[i] == blue[i + 1];
            edges.push_back({std::min(blue[i], blue[i + 1]), std::max(blue[i], blue[i + 1]), NclColor::Blue});
        }
        if (loop) continue;
        std::sort(edges.begin(), edges.end(), [](const NclEdge& a, const NclEdge& b) {
            return std::tie(a.u, a.v, a.color) < std::tie(b.u, b.v, b.color);
        });

        std::vector<Orientation> valid;
        std::vector<int> in(static_cast<std::size_t>(n));
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::fill(in.begin(), in.end(), 0);
            Orientation d(static_cast<std::size_t>(m));
            for (int e = 0; e < m; ++e) {
                const NclEdge& ed = edges[static_cast<std::size_t>(e)];
                d[static_cast<std::size_t>(e)] = (mask >> e & 1u) ? ed.v : ed.u;
                in[static_cast<std::size_t>(d[static_cast<std::size_t>(e)])] += ed.weight();
            }
            if (std::all_of(in.begin(), in.end(), [](int w) { return w >= 2; })) valid.push_back(std::move(d));
        }
        if (valid.empty()) continue;
        const auto& d0 = valid[static_cast<std::size_t>(below(rng, static_cast<int>(valid.size())))];
        const auto& d1 = valid[static_cast<std::size_t>(below(rng, static_cast<int>(valid.size())))];
        return NclInstance(n, std::move(edges), d0, d1);
    }
    throw PreconditionError("generate_ncl: no machine with a valid orientation found");
}

DsInstance generate_ds(std::uint64_t seed, int n, int k, int size, DsRuleKind rule, double density) {
    if (n < 1 || size < 1 || size > n || size > k) throw PreconditionError("generate_ds: sizes out of range");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng, density)) edges.emplace_back(u, v);
        Graph g(n, edges);
        std::vector<VertexSet> found;
        for (int draw = 0; draw < 200 && found.size() < 2; ++draw) {
            VertexSet s = random_subset(rng, n, size);
            if (is_dominating_set(g, s)) found.push_back(std::move(s));
        }
        if (found.size() == 2) return DsInstance{std::move(g), k, rule, found[0], found[1]};
    }
    throw PreconditionError("generate_ds: no dominating sets of the requested size found");
}

}  // namespace reconf
