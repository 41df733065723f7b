#pragma once

// Structural checks of the gadget graphs, written from the gate-neighbourhood
// description rather than from the construction steps.

#include "reconf/reductions.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace audit {

using namespace reconf;

/// Selector of edge x pointing at the endpoint of x that is not `at`.
inline Vertex far_selector(const GadgetGraph& gb, const NclInstance& ncl, int x, Vertex at) {
    return gb.selector_toward(x, ncl.edge(x).other(at));
}

inline std::vector<int> others(const NclInstance& ncl, Vertex v, int e) {
    std::vector<int> out;
    bool skipped = false;
    for (int x : ncl.incident(v)) {
        if (x == e && !skipped) {
            skipped = true;
            continue;
        }
        out.push_back(x);
    }
    return out;
}

/// Expected selector neighbourhoods of the gates of edge e.
inline std::vector<std::set<Vertex>> expected_gate_selectors(const GadgetGraph& gb, const NclInstance& ncl, int e) {
    const NclEdge& ed = ncl.edge(e);
    std::set<Vertex> base{gb.selector[static_cast<std::size_t>(e)][0], gb.selector[static_cast<std::size_t>(e)][1]};
    if (ed.color == NclColor::Red) {
        // Both endpoints are AND; each contributes its blue edge.
        for (Vertex w : {ed.u, ed.v})
            for (int x : others(ncl, w, e))
                if (ncl.edge(x).color == NclColor::Blue) base.insert(far_selector(gb, ncl, x, w));
        return {base};
    }
    const Vertex copy = ncl.type(ed.u) == NclVertexType::Copy ? ed.u : ed.v;
    const Vertex other = ed.other(copy);
    for (int f : others(ncl, copy, e)) base.insert(far_selector(gb, ncl, f, copy));
    const auto rest = others(ncl, other, e);
    if (ncl.type(other) == NclVertexType::And) {
        for (int x : rest) base.insert(far_selector(gb, ncl, x, other));
        return {base, base};
    }
    // OR: one gate per remaining edge.
    std::set<Vertex> a = base, b = base;
    a.insert(far_selector(gb, ncl, rest[0], other));
    b.insert(far_selector(gb, ncl, rest[1], other));
    return {a, b};
}

/// Returns a description of every violated property; empty when clean.
inline std::vector<std::string> check_gb(const GbConstruction& out, const NclInstance& ncl) {
    std::vector<std::string> bad;
    const GadgetGraph& gb = out.gadget;
    const Graph& g = gb.graph;
    const int m = ncl.num_edges();
    if (gb.m != m) bad.push_back("m differs");

    std::vector<Vertex> sel, gates;
    for (int e = 0; e < m; ++e) {
        const auto& s = gb.selector[static_cast<std::size_t>(e)];
        if (s[0] != 2 * e || s[1] != 2 * e + 1) bad.push_back("selector numbering of edge " + std::to_string(e));
        sel.insert(sel.end(), {s[0], s[1]});
        const std::size_t want = ncl.edge(e).color == NclColor::Red ? 1 : 2;
        if (gb.gates[static_cast<std::size_t>(e)].size() != want) bad.push_back("gate count of edge " + std::to_string(e));
        for (Vertex x : gb.gates[static_cast<std::size_t>(e)]) gates.push_back(x);
    }
    if (static_cast<int>(sel.size() + gates.size()) != g.num_vertices()) bad.push_back("vertex count");
    for (std::size_t i = 0; i < gates.size(); ++i)
        if (gates[i] != 2 * m + static_cast<int>(i)) bad.push_back("gate numbering");

    if (!is_independent(g, sel)) bad.push_back("selectors are not independent");
    if (!is_clique(g, gates)) bad.push_back("gates are not a clique");

    std::vector<Edge> own;
    std::size_t cross = 0;
    for (int e = 0; e < m; ++e) {
        const auto want = expected_gate_selectors(gb, ncl, e);
        for (std::size_t i = 0; i < want.size(); ++i) {
            const Vertex gate = gb.gates[static_cast<std::size_t>(e)][i];
            std::set<Vertex> got;
            for (Vertex x : g.neighbors(gate))
                if (!gb.is_gate(x)) got.insert(x);
            // Only the pair of neighbourhoods is fixed, not which gate gets
            // which one.
            bool match = got == want[i];
            if (!match && want.size() == 2) match = got == want[1 - i];
            if (!match) bad.push_back("selector neighbourhood of gate " + std::to_string(gate));
            cross += got.size();
            for (int s = 0; s < 2; ++s) {
                const Vertex v = gb.selector[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)];
                own.emplace_back(std::min(v, gate), std::max(v, gate));
            }
        }
    }
    std::sort(own.begin(), own.end());
    if (own != gb.gate_edges) bad.push_back("gate edge set differs from selector-to-own-gate pairs");
    const std::size_t clique_edges = gates.size() * (gates.size() - (gates.empty() ? 0 : 1)) / 2;
    if (g.num_edges() != cross + clique_edges) bad.push_back("unexpected extra edges");
    if (out.source != orientation_to_set(gb, ncl.start()) || out.target != orientation_to_set(gb, ncl.goal()))
        bad.push_back("S/T do not encode D/D'");
    for (int e = 0; e < m; ++e) {
        const Vertex head = ncl.start()[static_cast<std::size_t>(e)];
        if (!contains(out.source, gb.selector_toward(e, head))) bad.push_back("S misses e toward its head");
    }
    return bad;
}

inline std::vector<std::string> check_gf(const GadgetGraph& gb, const AmplifiedGraph& amp, const VertexSet& s,
                                         const VertexSet& t) {
    std::vector<std::string> bad;
    const int c = amp.copies;
    const int nb = gb.graph.num_vertices();
    if (c != gb.m + 4) bad.push_back("C != m + 4");
    if (amp.graph.num_vertices() != c * nb) bad.push_back("|V(G_f)| != C |V(G_b)|");
    if (static_cast<int>(amp.source.size()) != gb.m * c || static_cast<int>(amp.target.size()) != gb.m * c)
        bad.push_back("|S_f| or |T_f| != mC");
    if (!is_independent(amp.graph, amp.source) || !is_independent(amp.graph, amp.target)) bad.push_back("S_f/T_f not independent");
    if (!split_partition(amp.graph)) bad.push_back("G_f is not split");
    for (Vertex v : s)
        for (int i = 0; i < c; ++i)
            if (!contains(amp.source, amp.copy_of(v, i))) bad.push_back("S_f misses a copy");
    for (Vertex v : t)
        for (int i = 0; i < c; ++i)
            if (!contains(amp.target, amp.copy_of(v, i))) bad.push_back("T_f misses a copy");

    // Edge pattern between copies: all pairs for non-gate edges, same copy
    // only for gate edges, nothing for non-edges. Distinct copies of one gate
    // are adjacent.
    const int probes = std::min(c, 3);
    for (Vertex u = 0; u < nb; ++u) {
        for (int i = 0; i < probes; ++i)
            for (int j = 0; j < probes; ++j)
                if (amp.graph.has_edge(amp.copy_of(u, i), amp.copy_of(u, j)) != (i != j && gb.is_gate(u)))
                    bad.push_back("copies of vertex " + std::to_string(u));
        for (Vertex v = u + 1; v < nb; ++v) {
            const bool edge = gb.graph.has_edge(u, v);
            const bool gate_edge = std::binary_search(gb.gate_edges.begin(), gb.gate_edges.end(), Edge{u, v});
            for (int i = 0; i < probes; ++i)
                for (int j = 0; j < probes; ++j) {
                    const bool want = edge && (i == j || !gate_edge);
                    if (amp.graph.has_edge(amp.copy_of(u, i), amp.copy_of(v, j)) != want)
                        bad.push_back("copy edge pattern at " + std::to_string(u) + "," + std::to_string(v));
                }
        }
    }
    std::size_t want_edges = 0;
    for (Vertex u = 0; u < nb; ++u)
        if (gb.is_gate(u)) want_edges += static_cast<std::size_t>(c) * static_cast<std::size_t>(c - 1) / 2;
    for (const Edge& e : gb.graph.edges()) {
        const bool gate_edge = std::binary_search(gb.gate_edges.begin(), gb.gate_edges.end(), e);
        want_edges += gate_edge ? static_cast<std::size_t>(c) : static_cast<std::size_t>(c) * static_cast<std::size_t>(c);
    }
    if (amp.graph.num_edges() != want_edges) bad.push_back("G_f edge count");
    return bad;
}

}  // namespace audit
