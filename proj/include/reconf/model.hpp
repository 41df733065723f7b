#pragma once

#include "reconf/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace reconf {

// ---------------------------------------------------------------------------
// c-colorable set reconfiguration
// ---------------------------------------------------------------------------

enum class RuleKind { TS, TJ, TAR };

/// Reconfiguration rule. For TAR, `threshold` is the lower bound on the size
/// of every intermediate set; it is ignored for TS and TJ.
struct Rule {
    RuleKind kind = RuleKind::TS;
    int threshold = 0;

    static Rule ts() { return {RuleKind::TS, 0}; }
    static Rule tj() { return {RuleKind::TJ, 0}; }
    static Rule tar(int k) { return {RuleKind::TAR, k}; }

    friend bool operator==(const Rule&, const Rule&) = default;
};

struct ReconfigInstance {
    Graph graph;
    int c = 1;
    Rule rule;
    VertexSet source;
    VertexSet target;

    friend bool operator==(const ReconfigInstance&, const ReconfigInstance&) = default;
};

/// Throws PreconditionError unless S and T are canonical vertex sets of the
/// graph, both c-colorable, of equal size for TS/TJ, and of size >= k for TAR.
void check_instance(const ReconfigInstance& inst);

enum class MoveKind { Slide, Jump, Add, Remove };

/// A single certificate step. Slides and jumps move a token `from` -> `to`;
/// Add uses `to`, Remove uses `from`.
struct Move {
    MoveKind kind = MoveKind::Slide;
    Vertex from = -1;
    Vertex to = -1;

    static Move slide(Vertex u, Vertex v) { return {MoveKind::Slide, u, v}; }
    static Move jump(Vertex u, Vertex v) { return {MoveKind::Jump, u, v}; }
    static Move add(Vertex v) { return {MoveKind::Add, -1, v}; }
    static Move remove(Vertex v) { return {MoveKind::Remove, v, -1}; }

    friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

/// Outcome of certificate validation; `failure_index` is the index of the
/// first offending move, or the sequence length when every move is legal but
/// the final state differs from the target.
struct ValidationResult {
    bool valid = true;
    std::size_t failure_index = 0;
    std::string reason;

    explicit operator bool() const { return valid; }
};

/// Successor of `state` under `m`. Throws IllegalMove when the move violates
/// the rule, the successor is not c-colorable, or TAR drops below threshold.
VertexSet apply_move(const Graph& g, int c, const Rule& rule, const VertexSet& state, const Move& m);
VertexSet apply_move(const ColorabilityChecker& colorable, const Graph& g, int c, const Rule& rule,
                     const VertexSet& state, const Move& m);

ValidationResult validate_sequence(const ReconfigInstance& inst, const MoveSequence& seq);

/// Applies the set changes of `seq` without any legality checks and returns
/// every visited state, starting with `source`.
std::vector<VertexSet> trace_states(const VertexSet& source, const MoveSequence& seq);

/// The sequence read backwards with each move inverted.
MoveSequence reverse_sequence(const MoveSequence& seq);

// ---------------------------------------------------------------------------
// Nondeterministic constraint logic
// ---------------------------------------------------------------------------

enum class NclColor { Red, Blue };

struct NclEdge {
    Vertex u = 0;
    Vertex v = 0;
    NclColor color = NclColor::Red;

    int weight() const { return color == NclColor::Blue ? 2 : 1; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend bool operator==(const NclEdge&, const NclEdge&) = default;
};

/// Head vertex of every edge, indexed by edge id.
using Orientation = std::vector<Vertex>;

enum class NclVertexType { And, Or, Copy };

struct Flip {
    int edge = 0;
    Vertex new_head = 0;

    friend bool operator==(const Flip&, const Flip&) = default;
};

/// NCL machine with a start and a goal orientation. Edges are identified by
/// index, so parallel edges are allowed. Construction enforces that every
/// vertex is AND (two red + one blue), OR (three blue) or COPY (two blue) and
/// that both orientations are valid; violations throw MalformedNcl.
class NclInstance {
public:
    NclInstance() = default;
    NclInstance(int n, std::vector<NclEdge> edges, Orientation start, Orientation goal);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<NclEdge>& edges() const { return edges_; }
    const NclEdge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    /// Incident edge ids of v in increasing order.
    const std::vector<int>& incident(Vertex v) const { return incident_[static_cast<std::size_t>(v)]; }
    NclVertexType type(Vertex v) const { return types_[static_cast<std::size_t>(v)]; }
    const Orientation& start() const { return start_; }
    const Orientation& goal() const { return goal_; }

    friend bool operator==(const NclInstance& a, const NclInstance& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.start_ == b.start_ && a.goal_ == b.goal_;
    }

private:
    int n_ = 0;
    std::vector<NclEdge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<NclVertexType> types_;
    Orientation start_;
    Orientation goal_;
};

/// Every vertex has incoming weight (red 1, blue 2) at least 2.
bool orientation_valid(const NclInstance& ncl, const Orientation& d);

/// Starts at D, ends at D', all orientations valid, consecutive ones differ on
/// exactly one edge.
ValidationResult ncl_validate_sequence(const NclInstance& ncl, const std::vector<Orientation>& seq);

/// Orientation trace obtained by applying `flips` to the start orientation.
std::vector<Orientation> apply_flips(const NclInstance& ncl, const std::vector<Flip>& flips);

// ---------------------------------------------------------------------------
// Dominating set reconfiguration
// ---------------------------------------------------------------------------

enum class DsRuleKind { TJ, TAR };

/// Under TAR every intermediate set has size at most k; under TJ the size
/// stays |S|.
struct DsInstance {
    Graph graph;
    int k = 0;
    DsRuleKind rule = DsRuleKind::TJ;
    VertexSet source;
    VertexSet target;

    friend bool operator==(const DsInstance&, const DsInstance&) = default;
};

bool is_dominating_set(const Graph& g, std::span<const Vertex> s);

void check_ds_instance(const DsInstance& ds);

VertexSet apply_ds_move(const DsInstance& ds, const VertexSet& state, const Move& m);

ValidationResult validate_ds_sequence(const DsInstance& ds, const MoveSequence& seq);

// Canonical-set helpers shared by the rest of the library.
bool is_canonical_set(std::span<const Vertex> s, int n);
bool contains(const VertexSet& s, Vertex v);
VertexSet set_insert(VertexSet s, Vertex v);
VertexSet set_erase(VertexSet s, Vertex v);

}  // namespace reconf
