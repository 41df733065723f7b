#pragma once

#include "reconf/model.hpp"
#include "reconf/oracle.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace reconf {

// ---------------------------------------------------------------------------
// NCL -> split graph
// ---------------------------------------------------------------------------

/// True iff every blue edge has exactly one COPY endpoint.
bool is_normalized(const NclInstance& ncl);

/// Subdivides every blue edge whose endpoints are both non-COPY with a fresh
/// COPY vertex. A replaced edge e = (u,v) becomes (u,w) followed by (w,v) at
/// the same position of the edge list; new vertices are numbered n, n+1, ...
/// in edge order. Orientations keep their head: if e pointed at v, (w,v)
/// points at v and (u,w) points at w, and symmetrically for u.
/// Throws MalformedNcl for a blue edge joining two COPY vertices.
NclInstance ncl_normalize(const NclInstance& ncl);

enum class GadgetRole { Selector, Gate };

struct GadgetVertex {
    GadgetRole role = GadgetRole::Selector;
    int edge = 0;
    /// Selector: the NCL vertex the edge points at when this selector holds
    /// a token. Gate: gate index (0 or 1).
    int index = 0;
};

/// The basic split graph G_b of a normalized NCL instance.
///
/// Vertex numbering: selector 2e encodes "edge e points at its first
/// endpoint", 2e+1 "points at its second endpoint"; gates follow in
/// (edge, gate index) order. Red edges get one gate, blue edges two.
struct GadgetGraph {
    Graph graph;
    int m = 0;
    std::vector<NclEdge> ncl_edges;
    std::vector<std::array<Vertex, 2>> selector;
    std::vector<std::vector<Vertex>> gates;
    std::vector<Edge> gate_edges;  // selector-to-own-gate edges, normalized and sorted
    std::vector<GadgetVertex> roles;

    /// Selector of edge e that encodes "e points at x".
    Vertex selector_toward(int e, Vertex x) const;
    bool is_gate(Vertex v) const { return roles[static_cast<std::size_t>(v)].role == GadgetRole::Gate; }
    std::vector<std::pair<Vertex, Vertex>> selector_pairs() const;
    /// The state filter forbidding both selectors of one edge.
    StateFilter consistency_filter() const { return no_both_filter(selector_pairs()); }
    std::vector<std::string> labels() const;
};

struct GbConstruction {
    GadgetGraph gadget;
    VertexSet source;  // from D
    VertexSet target;  // from D'
};

/// Throws NotNormalized unless is_normalized(ncl).
GbConstruction build_gb(const NclInstance& ncl);

/// The main configuration encoding orientation d.
VertexSet orientation_to_set(const GadgetGraph& gb, const Orientation& d);

/// C = m + 4 copies of G_b; copy i (0-based) of v is i * |V(G_b)| + v.
struct AmplifiedGraph {
    Graph graph;
    int copies = 0;
    int base_vertices = 0;
    VertexSet source;
    VertexSet target;

    Vertex copy_of(Vertex v, int i) const { return i * base_vertices + v; }
    Vertex base_of(Vertex w) const { return w % base_vertices; }
    int copy_index(Vertex w) const { return w / base_vertices; }
    std::vector<std::string> labels(const GadgetGraph& gb) const;
};

/// Throws NonMainConfiguration when S or T holds a gate vertex.
AmplifiedGraph build_gf(const GadgetGraph& gb, const VertexSet& s, const VertexSet& t);

/// Each gate round-trip e_u -> g -> e_v of a G_b witness becomes 2C slides,
/// copy by copy, through the same gate. Throws MalformedWitness otherwise.
MoveSequence lift_sequence(const GadgetGraph& gb, const MoveSequence& gb_seq, const AmplifiedGraph& amp);

/// Fewest tokens on the copies of {e_u, e_v} over all edges e.
int min_pair_tokens(const GadgetGraph& gb, const AmplifiedGraph& amp, const VertexSet& state);

/// Majority projection of a single G_f state (ties go to the first-endpoint
/// selector). Throws InvalidState if some edge has fewer than 4 tokens on its
/// selector copies, which no state reachable from S_f can have.
VertexSet project_state(const GadgetGraph& gb, const AmplifiedGraph& amp, const VertexSet& state);

/// Projects every state visited by `gf_seq` from S_f, dropping consecutive
/// repeats.
std::vector<VertexSet> project_sequence(const GadgetGraph& gb, const MoveSequence& gf_seq, const AmplifiedGraph& amp);

/// Gate-free states of a trace.
std::vector<VertexSet> main_configurations(const GadgetGraph& gb, const std::vector<VertexSet>& states);

/// G_b certificate realizing a trace of main configurations, each step
/// routed through the lowest-indexed free gate of the flipped edge.
MoveSequence main_trace_to_certificate(const GadgetGraph& gb, const std::vector<VertexSet>& trace);

// ---------------------------------------------------------------------------
// split (c = 1) -> chordal (c >= 2)
// ---------------------------------------------------------------------------

struct ChordalReduction {
    ReconfigInstance instance;
    std::vector<std::string> labels;
};

/// Attaches |V| disjoint (c-1)-cliques to every edge, each clique vertex
/// adjacent to both endpoints, and adds all of them to S and T. Original
/// vertices keep their ids; the clique for (edge index ei, copy i, member j)
/// is vertex n + (ei * n + i) * (c - 1) + j.
ChordalReduction split_to_chordal(const ReconfigInstance& inst, int c);

// ---------------------------------------------------------------------------
// dominating set reconfiguration
// ---------------------------------------------------------------------------

struct DsSplitReduction {
    ReconfigInstance instance;
    std::vector<std::string> labels;
};

/// phi(S) = copies of S in the clique V_1 = [0, n) plus all of V_2 = [n, 2n).
VertexSet dominating_to_colorable(int n, const VertexSet& s);

/// Split graph G' with clique V_1, independent V_2, and u_1 ~ v_2 iff u does
/// not dominate v. The rule is TS, TJ, or TAR with lower threshold n + k - 1.
/// Throws SizeMismatch unless |S| = |T| = k.
DsSplitReduction dsr_to_split(const DsInstance& ds, RuleKind rule = RuleKind::TS);

/// Converts a TAR dominating-set witness (sizes at most k, |S| = |T| = k-1)
/// into a TJ witness by removing consecutive removals and pairing the
/// remaining alternating moves into jumps. Throws InvalidWitness when `seq`
/// does not validate.
MoveSequence tar_to_tj(const DsInstance& ds, const MoveSequence& seq);

}  // namespace reconf
