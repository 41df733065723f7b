#include "reconf/reductions.hpp"

#include "reconf/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace reconf {

// ---------------------------------------------------------------------------
// NCL normalization and G_b
// ---------------------------------------------------------------------------

bool is_normalized(const NclInstance& ncl) {
    for (const auto& e : ncl.edges()) {
        if (e.color != NclColor::Blue) continue;
        const int copies = (ncl.type(e.u) == NclVertexType::Copy) + (ncl.type(e.v) == NclVertexType::Copy);
        if (copies != 1) return false;
    }
    return true;
}

NclInstance ncl_normalize(const NclInstance& ncl) {
    std::vector<NclEdge> edges;
    Orientation start, goal;
    int n = ncl.num_vertices();
    for (int e = 0; e < ncl.num_edges(); ++e) {
        const NclEdge& ed = ncl.edge(e);
        const Vertex d0 = ncl.start()[static_cast<std::size_t>(e)];
        const Vertex d1 = ncl.goal()[static_cast<std::size_t>(e)];
        const bool u_copy = ncl.type(ed.u) == NclVertexType::Copy;
        const bool v_copy = ncl.type(ed.v) == NclVertexType::Copy;
        if (ed.color == NclColor::Red || u_copy != v_copy) {
            edges.push_back(ed);
            start.push_back(d0);
            goal.push_back(d1);
            continue;
        }
        if (u_copy && v_copy)
            throw MalformedNcl("blue edge " + std::to_string(e) + " joins two COPY vertices");
        const Vertex w = n++;
        edges.push_back({ed.u, w, NclColor::Blue});
        edges.push_back({w, ed.v, NclColor::Blue});
        for (auto [d, out] : {std::pair{d0, &start}, std::pair{d1, &goal}}) {
            if (d == ed.v) {
                out->push_back(w);
                out->push_back(ed.v);
            } else {
                out->push_back(ed.u);
                out->push_back(w);
            }
        }
    }
    return NclInstance(n, std::move(edges), std::move(start), std::move(goal));
}

Vertex GadgetGraph::selector_toward(int e, Vertex x) const {
    const auto& ed = ncl_edges[static_cast<std::size_t>(e)];
    return selector[static_cast<std::size_t>(e)][x == ed.u ? 0 : 1];
}

std::vector<std::pair<Vertex, Vertex>> GadgetGraph::selector_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& s : selector) out.emplace_back(s[0], s[1]);
    return out;
}

std::vector<std::string> GadgetGraph::labels() const {
    std::vector<std::string> out;
    for (const auto& r : roles)
        out.push_back(r.role == GadgetRole::Selector
                          ? "sel " + std::to_string(r.edge) + " " + std::to_string(r.index)
                          : "gate " + std::to_string(r.edge) + " " + std::to_string(r.index));
    return out;
}

GbConstruction build_gb(const NclInstance& ncl) {
    if (!is_normalized(ncl)) throw NotNormalized("some blue edge does not have exactly one COPY endpoint");
    GbConstruction out;
    GadgetGraph& gb = out.gadget;
    const int m = ncl.num_edges();
    gb.m = m;
    gb.ncl_edges = ncl.edges();

    // Selectors first, then gates.
    for (int e = 0; e < m; ++e) {
        gb.selector.push_back({2 * e, 2 * e + 1});
        gb.roles.push_back({GadgetRole::Selector, e, ncl.edge(e).u});
        gb.roles.push_back({GadgetRole::Selector, e, ncl.edge(e).v});
    }
    Vertex next = 2 * m;
    gb.gates.resize(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        const int count = ncl.edge(e).color == NclColor::Red ? 1 : 2;
        for (int i = 0; i < count; ++i) {
            gb.gates[static_cast<std::size_t>(e)].push_back(next++);
            gb.roles.push_back({GadgetRole::Gate, e, i});
        }
    }

    std::set<Edge> edges;
    auto connect = [&](Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    auto gate = [&](int e, int i) { return gb.gates[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)]; };
    // Selector of edge x (incident on u) for the orientation pointing away
    // from u.
    auto away = [&](int x, Vertex u) { return gb.selector_toward(x, ncl.edge(x).other(u)); };

    // Each selector sees the gates of its own edge.
    for (int e = 0; e < m; ++e)
        for (Vertex g : gb.gates[static_cast<std::size_t>(e)]) {
            connect(gb.selector[static_cast<std::size_t>(e)][0], g);
            connect(gb.selector[static_cast<std::size_t>(e)][1], g);
        }
    gb.gate_edges.assign(edges.begin(), edges.end());

    for (Vertex u = 0; u < ncl.num_vertices(); ++u) {
        const auto& inc = ncl.incident(u);
        switch (ncl.type(u)) {
            case NclVertexType::And: {
                int blue = -1;
                std::vector<int> reds;
                for (int x : inc) {
                    if (ncl.edge(x).color == NclColor::Blue)
                        blue = x;
                    else
                        reds.push_back(x);
                }
                for (int r : reds) {
                    connect(away(blue, u), gate(r, 0));
                    connect(away(r, u), gate(blue, 0));
                    connect(away(r, u), gate(blue, 1));
                }
                break;
            }
            case NclVertexType::Or: {
                const int x0 = inc[0], x1 = inc[1], x2 = inc[2];
                connect(away(x0, u), gate(x1, 0));
                connect(away(x0, u), gate(x2, 0));
                connect(away(x1, u), gate(x0, 0));
                connect(away(x1, u), gate(x2, 1));
                connect(away(x2, u), gate(x0, 1));
                connect(away(x2, u), gate(x1, 1));
                break;
            }
            case NclVertexType::Copy: {
                const int x0 = inc[0], x1 = inc[1];
                connect(away(x0, u), gate(x1, 0));
                connect(away(x0, u), gate(x1, 1));
                connect(away(x1, u), gate(x0, 0));
                connect(away(x1, u), gate(x0, 1));
                break;
            }
        }
    }

    // Gates form the clique side.
    for (Vertex a = 2 * m; a < next; ++a)
        for (Vertex b = a + 1; b < next; ++b) connect(a, b);

    std::vector<Edge> edge_list(edges.begin(), edges.end());
    gb.graph = Graph(next, edge_list);
    out.source = orientation_to_set(gb, ncl.start());
    out.target = orientation_to_set(gb, ncl.goal());
    return out;
}

VertexSet orientation_to_set(const GadgetGraph& gb, const Orientation& d) {
    if (d.size() != static_cast<std::size_t>(gb.m)) throw PreconditionError("orientation length differs from edge count");
    VertexSet s;
    for (int e = 0; e < gb.m; ++e) s.push_back(gb.selector_toward(e, d[static_cast<std::size_t>(e)]));
    std::sort(s.begin(), s.end());
    return s;
}

// ---------------------------------------------------------------------------
// G_f and witness transfer
// ---------------------------------------------------------------------------

std::vector<std::string> AmplifiedGraph::labels(const GadgetGraph& gb) const {
    const auto base = gb.labels();
    std::vector<std::string> out;
    for (int i = 0; i < copies; ++i)
        for (Vertex v = 0; v < base_vertices; ++v)
            out.push_back("copy " + std::to_string(i) + " " + std::to_string(v) + " " + base[static_cast<std::size_t>(v)]);
    return out;
}

AmplifiedGraph build_gf(const GadgetGraph& gb, const VertexSet& s, const VertexSet& t) {
    for (const VertexSet* x : {&s, &t})
        for (Vertex v : *x)
            if (gb.is_gate(v)) throw NonMainConfiguration("configuration holds gate vertex " + std::to_string(v));

    AmplifiedGraph amp;
    amp.copies = gb.m + 4;
    amp.base_vertices = gb.graph.num_vertices();
    const int c = amp.copies;
    std::vector<Edge> edges;
    for (const Edge& e : gb.graph.edges()) {
        const bool gate_edge = std::binary_search(gb.gate_edges.begin(), gb.gate_edges.end(), e);
        for (int i = 0; i < c; ++i) {
            edges.emplace_back(amp.copy_of(e.first, i), amp.copy_of(e.second, i));
            if (gate_edge) continue;
            for (int j = 0; j < c; ++j)
                if (j != i) edges.emplace_back(amp.copy_of(e.first, i), amp.copy_of(e.second, j));
        }
    }
    // Copies of one gate are joined too, so all gate copies form the clique.
    for (const auto& gs : gb.gates)
        for (Vertex g : gs)
            for (int i = 0; i < c; ++i)
                for (int j = i + 1; j < c; ++j) edges.emplace_back(amp.copy_of(g, i), amp.copy_of(g, j));
    amp.graph = Graph(c * amp.base_vertices, edges);
    for (int i = 0; i < c; ++i)
        for (Vertex v : s) amp.source.push_back(amp.copy_of(v, i));
    for (int i = 0; i < c; ++i)
        for (Vertex v : t) amp.target.push_back(amp.copy_of(v, i));
    std::sort(amp.source.begin(), amp.source.end());
    std::sort(amp.target.begin(), amp.target.end());
    return amp;
}

MoveSequence lift_sequence(const GadgetGraph& gb, const MoveSequence& gb_seq, const AmplifiedGraph& amp) {
    if (gb_seq.size() % 2 != 0) throw MalformedWitness("odd number of moves");
    const int nb = gb.graph.num_vertices();
    auto in_range = [&](Vertex v) { return v >= 0 && v < nb; };
    MoveSequence out;
    out.reserve(gb_seq.size() * static_cast<std::size_t>(amp.copies));
    for (std::size_t i = 0; i < gb_seq.size(); i += 2) {
        const Move& in = gb_seq[i];
        const Move& back = gb_seq[i + 1];
        const std::string where = "step at move " + std::to_string(i);
        if (in.kind != MoveKind::Slide || back.kind != MoveKind::Slide) throw MalformedWitness(where + " is not two slides");
        if (!in_range(in.from) || !in_range(in.to) || !in_range(back.to))
            throw MalformedWitness(where + " uses a vertex outside G_b");
        const GadgetVertex& src = gb.roles[static_cast<std::size_t>(in.from)];
        const GadgetVertex& via = gb.roles[static_cast<std::size_t>(in.to)];
        const GadgetVertex& dst = gb.roles[static_cast<std::size_t>(back.to)];
        if (src.role != GadgetRole::Selector || via.role != GadgetRole::Gate || via.edge != src.edge ||
            back.from != in.to || dst.role != GadgetRole::Selector || dst.edge != src.edge || back.to == in.from)
            throw MalformedWitness(where + " is not a selector-gate-selector round trip of one edge");
        for (int c = 0; c < amp.copies; ++c) {
            out.push_back(Move::slide(amp.copy_of(in.from, c), amp.copy_of(in.to, c)));
            out.push_back(Move::slide(amp.copy_of(in.to, c), amp.copy_of(back.to, c)));
        }
    }
    return out;
}

int min_pair_tokens(const GadgetGraph& gb, const AmplifiedGraph& amp, const VertexSet& state) {
    std::vector<int> count(static_cast<std::size_t>(amp.base_vertices), 0);
    for (Vertex w : state) ++count[static_cast<std::size_t>(amp.base_of(w))];
    int best = amp.copies * 2;
    for (const auto& s : gb.selector)
        best = std::min(best, count[static_cast<std::size_t>(s[0])] + count[static_cast<std::size_t>(s[1])]);
    return best;
}

VertexSet project_state(const GadgetGraph& gb, const AmplifiedGraph& amp, const VertexSet& state) {
    std::vector<int> count(static_cast<std::size_t>(amp.base_vertices), 0);
    for (Vertex w : state) ++count[static_cast<std::size_t>(amp.base_of(w))];
    VertexSet out;
    for (int e = 0; e < gb.m; ++e) {
        const auto& s = gb.selector[static_cast<std::size_t>(e)];
        const int cu = count[static_cast<std::size_t>(s[0])];
        const int cv = count[static_cast<std::size_t>(s[1])];
        if (cu + cv < 4)
            throw InvalidState("edge " + std::to_string(e) + " has only " + std::to_string(cu + cv) +
                               " tokens on its selector copies; state is unreachable from S_f");
        out.push_back(cu >= cv ? s[0] : s[1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> project_sequence(const GadgetGraph& gb, const MoveSequence& gf_seq, const AmplifiedGraph& amp) {
    std::vector<VertexSet> out;
    for (const VertexSet& state : trace_states(amp.source, gf_seq)) {
        VertexSet p = project_state(gb, amp, state);
        if (out.empty() || out.back() != p) out.push_back(std::move(p));
    }
    return out;
}

std::vector<VertexSet> main_configurations(const GadgetGraph& gb, const std::vector<VertexSet>& states) {
    std::vector<VertexSet> out;
    for (const VertexSet& s : states)
        if (std::none_of(s.begin(), s.end(), [&](Vertex v) { return gb.is_gate(v); })) out.push_back(s);
    return out;
}

MoveSequence main_trace_to_certificate(const GadgetGraph& gb, const std::vector<VertexSet>& trace) {
    MoveSequence out;
    for (std::size_t i = 1; i < trace.size(); ++i) {
        VertexSet gone, came;
        std::set_difference(trace[i - 1].begin(), trace[i - 1].end(), trace[i].begin(), trace[i].end(),
                            std::back_inserter(gone));
        std::set_difference(trace[i].begin(), trace[i].end(), trace[i - 1].begin(), trace[i - 1].end(),
                            std::back_inserter(came));
        if (gone.size() != 1 || came.size() != 1) throw InvalidState("trace step " + std::to_string(i) + " is not a single flip");
        const Vertex from = gone[0], to = came[0];
        const int e = gb.roles[static_cast<std::size_t>(from)].edge;
        if (gb.is_gate(from) || gb.is_gate(to) || gb.roles[static_cast<std::size_t>(to)].edge != e)
            throw InvalidState("trace step " + std::to_string(i) + " does not flip one edge");
        const VertexSet rest = set_erase(trace[i - 1], from);
        Vertex chosen = -1;
        for (Vertex g : gb.gates[static_cast<std::size_t>(e)]) {
            const auto& nb = gb.graph.neighbors(g);
            if (std::none_of(rest.begin(), rest.end(), [&](Vertex x) { return std::binary_search(nb.begin(), nb.end(), x); })) {
                chosen = g;
                break;
            }
        }
        if (chosen == -1) throw InvalidState("no free gate for edge " + std::to_string(e) + " at trace step " + std::to_string(i));
        out.push_back(Move::slide(from, chosen));
        out.push_back(Move::slide(chosen, to));
    }
    return out;
}

// ---------------------------------------------------------------------------
// split -> chordal
// ---------------------------------------------------------------------------

ChordalReduction split_to_chordal(const ReconfigInstance& inst, int c) {
    if (c < 2) throw BadColorBound("target color bound must be >= 2, got " + std::to_string(c));
    if (inst.rule.kind != RuleKind::TS || inst.c != 1)
        throw PreconditionError("input must be an independent-set (c = 1) TS instance");
    if (!split_partition(inst.graph)) throw NotSplit("input graph is not split");
    if (inst.source.empty() || inst.target.empty()) throw PreconditionError("S and T must be non-empty");
    check_instance(inst);

    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    const int width = c - 1;
    const int added = static_cast<int>(g.num_edges()) * n * width;

    ChordalReduction out;
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Vertex v = 0; v < n; ++v) out.labels.push_back("orig " + std::to_string(v));
    Vertex next = n;
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const auto [u, v] = g.edges()[ei];
        for (int i = 0; i < n; ++i) {
            const Vertex first = next;
            for (int j = 0; j < width; ++j, ++next) {
                edges.emplace_back(u, next);
                edges.emplace_back(v, next);
                for (Vertex w = first; w < next; ++w) edges.emplace_back(w, next);
                out.labels.push_back("clique " + std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(i) +
                                     " " + std::to_string(j));
            }
        }
    }
    out.instance.graph = Graph(n + added, edges);
    out.instance.c = c;
    out.instance.rule = Rule::ts();
    out.instance.source = inst.source;
    out.instance.target = inst.target;
    for (Vertex w = n; w < n + added; ++w) {
        out.instance.source.push_back(w);
        out.instance.target.push_back(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// dominating set reconfiguration
// ---------------------------------------------------------------------------

VertexSet dominating_to_colorable(int n, const VertexSet& s) {
    VertexSet out = s;
    for (Vertex v = 0; v < n; ++v) out.push_back(n + v);
    return out;
}

DsSplitReduction dsr_to_split(const DsInstance& ds, RuleKind rule) {
    check_ds_instance(ds);
    const int k = ds.k;
    if (static_cast<int>(ds.source.size()) != k || static_cast<int>(ds.target.size()) != k)
        throw SizeMismatch("|S| and |T| must both equal k = " + std::to_string(k));
    if (k < 1) throw SizeMismatch("k must be at least 1");
    const Graph& g = ds.graph;
    const int n = g.num_vertices();

    DsSplitReduction out;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && !g.has_edge(u, v)) edges.emplace_back(u, n + v);
    for (Vertex v = 0; v < n; ++v) out.labels.push_back("clique " + std::to_string(v));
    for (Vertex v = 0; v < n; ++v) out.labels.push_back("indep " + std::to_string(v));

    out.instance.graph = Graph(2 * n, edges);
    out.instance.c = k;
    switch (rule) {
        case RuleKind::TS: out.instance.rule = Rule::ts(); break;
        case RuleKind::TJ: out.instance.rule = Rule::tj(); break;
        case RuleKind::TAR: out.instance.rule = Rule::tar(n + k - 1); break;
    }
    out.instance.source = dominating_to_colorable(n, ds.source);
    out.instance.target = dominating_to_colorable(n, ds.target);
    return out;
}

MoveSequence tar_to_tj(const DsInstance& ds, const MoveSequence& seq) {
    if (ds.rule != DsRuleKind::TAR) throw PreconditionError("input instance must use the TAR rule");
    if (static_cast<int>(ds.source.size()) != ds.k - 1 || static_cast<int>(ds.target.size()) != ds.k - 1)
        throw PreconditionError("requires |S| = |T| = k - 1");
    if (auto v = validate_ds_sequence(ds, seq); !v)
        throw InvalidWitness("TAR witness fails at move " + std::to_string(v.failure_index) + ": " + v.reason);

    std::vector<VertexSet> sets = trace_states(ds.source, seq);
    auto dedupe = [&] { sets.erase(std::unique(sets.begin(), sets.end()), sets.end()); };
    auto removal = [&](std::size_t t) { return sets[t + 1].size() + 1 == sets[t].size(); };
    auto only = [](const VertexSet& a, const VertexSet& b) {
        VertexSet d;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
        return d.front();
    };

    dedupe();
    const std::size_t guard = (sets.size() + 2) * (sets.size() + 2);
    for (std::size_t round = 0;; ++round) {
        if (round > guard) throw InvalidWitness("consecutive-removal elimination did not terminate");
        std::size_t i = 0;
        while (i + 2 < sets.size() && !(removal(i) && removal(i + 1))) ++i;
        if (i + 2 >= sets.size()) break;
        std::size_t j = i + 3;
        while (j < sets.size() && sets[j].size() <= sets[j - 1].size()) ++j;
        if (j >= sets.size()) throw InvalidWitness("no addition after a double removal; sizes cannot return to k-1");

        const Vertex u = only(sets[i], sets[i + 1]);
        const Vertex v = only(sets[j], sets[j - 1]);
        if (u == v) {
            for (std::size_t t = i + 1; t < j; ++t) sets[t] = set_insert(sets[t], u);
        } else if (contains(sets[i + 1], v)) {
            for (std::size_t t = i + 2; t < j; ++t) sets[t] = set_insert(sets[t], v);
        } else {
            for (std::size_t t = i + 2; t < j; ++t) sets[t] = set_insert(sets[t], v);
            sets.insert(sets.begin() + static_cast<std::ptrdiff_t>(i + 2), set_insert(sets[i + 1], v));
        }
        dedupe();
    }

    // Sizes now stay within [k-2, k] and return to k-1 after every two moves.
    if ((sets.size() - 1) % 2 != 0) throw InvalidWitness("normalized TAR sequence has odd length");
    MoveSequence out;
    for (std::size_t t = 0; t + 2 < sets.size(); t += 2) {
        const VertexSet& a = sets[t];
        const VertexSet& c = sets[t + 2];
        if (a == c) continue;
        out.push_back(Move::jump(only(a, c), only(c, a)));
    }
    if (auto v = validate_ds_sequence(DsInstance{ds.graph, ds.k, DsRuleKind::TJ, ds.source, ds.target}, out); !v)
        throw InvalidWitness("converted TJ sequence fails at move " + std::to_string(v.failure_index) + ": " + v.reason);
    return out;
}

}  // namespace reconf
