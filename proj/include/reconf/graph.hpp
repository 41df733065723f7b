#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace reconf {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids. Every set-valued output of the
// library uses this canonical form so that equality is plain vector equality.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex range [0, n).
///
/// Immutable after construction. Edges are stored normalized (u < v) and
/// sorted; adjacency lists are sorted. Self-loops, duplicate edges and
/// out-of-range endpoints are rejected with PreconditionError.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Subgraph induced by `vs`; vertex i of the result is vs[i].
    Graph induced(std::span<const Vertex> vs) const;
    Graph complement() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    // Row-major adjacency bit matrix; empty for very large graphs, in which
    // case has_edge falls back to binary search.
    std::vector<std::uint64_t> bits_;
    std::size_t words_per_row_ = 0;
};

struct SplitPartition {
    VertexSet clique;       // K
    VertexSet independent;  // I

    friend bool operator==(const SplitPartition&, const SplitPartition&) = default;
};

struct EliminationOrder {
    std::vector<Vertex> order;

    friend bool operator==(const EliminationOrder&, const EliminationOrder&) = default;
};

/// Split recognition via the degree-sequence splittance test. Among all valid
/// partitions whose clique side has maximum size, returns the one with the
/// lexicographically smallest clique side.
std::optional<SplitPartition> split_partition(const Graph& g);

bool is_split_partition(const Graph& g, const SplitPartition& p);

/// Maximum cardinality search; the reversed visit order is returned iff it is
/// a perfect elimination order (i.e. iff g is chordal).
std::optional<EliminationOrder> elimination_order(const Graph& g);

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& ord);

/// omega(g) read off a perfect elimination order. Throws PreconditionError
/// when `ord` is not a perfect elimination order of g.
int clique_number_chordal(const Graph& g, const EliminationOrder& ord);

/// True iff g[s] is c-colorable. Chordal induced subgraphs are decided through
/// their clique number; anything else falls back to backtracking search.
bool chromatic_leq(const Graph& g, std::span<const Vertex> s, int c);

/// Exhaustive c-coloring search on g[s].
bool colorable_exhaustive(const Graph& g, std::span<const Vertex> s, int c);

bool is_independent(const Graph& g, std::span<const Vertex> s);
bool is_clique(const Graph& g, std::span<const Vertex> s);

/// Maximal connected vertex sets, each sorted, ordered by minimum element.
std::vector<VertexSet> connected_components(const Graph& g);

/// Repeated colorability queries against one graph. When the whole graph is
/// chordal its elimination order is computed once; the restriction of that
/// order to any subset is an elimination order of the induced subgraph.
class ColorabilityChecker {
public:
    explicit ColorabilityChecker(const Graph& g);

    bool operator()(std::span<const Vertex> s, int c) const;
    bool chordal() const { return !position_.empty() || graph_->num_vertices() == 0; }

private:
    const Graph* graph_;
    std::vector<int> position_;
};

}  // namespace reconf
