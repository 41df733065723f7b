#include "reconf/split_solver.hpp"

#include "reconf/errors.hpp"
#include "reconf/state_store.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iterator>
#include <string>
#include <thread>

namespace reconf {

namespace {

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void append(MoveSequence& dst, const MoveSequence& src) { dst.insert(dst.end(), src.begin(), src.end()); }

/// Connected split graph with a fixed partition; everything the case analysis
/// needs about one component.
struct SplitContext {
    const Graph& g;
    SplitPartition part;
    std::vector<char> in_clique;
    int c;

    SplitContext(const Graph& graph, SplitPartition p, int c_) : g(graph), part(std::move(p)), c(c_) {
        in_clique.assign(static_cast<std::size_t>(g.num_vertices()), 0);
        for (Vertex v : part.clique) in_clique[static_cast<std::size_t>(v)] = 1;
    }

    bool is_clique_vertex(Vertex v) const { return in_clique[static_cast<std::size_t>(v)] != 0; }
    VertexSet clique_part(const VertexSet& s) const { return intersect(s, part.clique); }
    VertexSet independent_part(const VertexSet& s) const { return intersect(s, part.independent); }

    Vertex lowest_clique_neighbor(Vertex v) const {
        for (Vertex w : g.neighbors(v))
            if (is_clique_vertex(w)) return w;
        return -1;
    }

    /// In a split graph omega(R) is |R_K|, or |R_K| + 1 when some vertex of
    /// R_I sees all of R_K.
    bool colorable(const VertexSet& clique_tokens, const VertexSet& indep_tokens) const {
        const int k = static_cast<int>(clique_tokens.size());
        if (k < c) return true;
        if (k > c) return false;
        for (Vertex v : indep_tokens) {
            bool sees_all = std::all_of(clique_tokens.begin(), clique_tokens.end(),
                                        [&](Vertex x) { return g.has_edge(x, v); });
            if (sees_all) return false;
        }
        return true;
    }
};

/// Router between two sets with at most c-1 clique tokens each.
/// Works on a forward sequence from S and a backward sequence from T and joins
/// them once both sides coincide.
MoveSequence route_small(const SplitContext& ctx, const VertexSet& source, const VertexSet& target) {
    VertexSet a = source;
    VertexSet b = target;
    MoveSequence forward;
    MoveSequence backward;

    // Moves one token of `x` onto v, where v lies in the independent part of
    // the other side but not of x.
    auto bring_to = [&](VertexSet& x, const VertexSet& y, Vertex v, MoveSequence& moves) {
        auto slide = [&](Vertex from, Vertex to) {
            moves.push_back(Move::slide(from, to));
            x = set_insert(set_erase(std::move(x), from), to);
        };
        const VertexSet x_clique = ctx.clique_part(x);
        if (x_clique.empty()) {
            // Some w in X_I \ Y_I exists because |X| = |Y| and v is in Y_I \ X_I.
            const VertexSet spare = difference(ctx.independent_part(x), ctx.independent_part(y));
            const Vertex w = spare.front();
            Vertex via_w = -1;
            for (Vertex k : ctx.g.neighbors(w))
                if (ctx.is_clique_vertex(k) && ctx.g.has_edge(k, v)) {
                    via_w = k;
                    break;
                }
            if (via_w != -1) {
                slide(w, via_w);
                slide(via_w, v);
            } else {
                const Vertex k1 = ctx.lowest_clique_neighbor(w);
                const Vertex k2 = ctx.lowest_clique_neighbor(v);
                slide(w, k1);
                slide(k1, k2);
                slide(k2, v);
            }
            return;
        }
        for (Vertex k : x_clique)
            if (ctx.g.has_edge(k, v)) {
                slide(k, v);
                return;
            }
        // No clique token sees v, so v's lowest clique neighbour is free.
        const Vertex k2 = ctx.lowest_clique_neighbor(v);
        slide(x_clique.front(), k2);
        slide(k2, v);
    };

    for (;;) {
        const VertexSet ai = ctx.independent_part(a);
        const VertexSet bi = ctx.independent_part(b);
        if (ai == bi) break;
        const VertexSet only_a = difference(ai, bi);
        if (!only_a.empty())
            bring_to(b, a, only_a.front(), backward);
        else
            bring_to(a, b, difference(bi, ai).front(), forward);
    }

    const VertexSet from = difference(ctx.clique_part(a), ctx.clique_part(b));
    const VertexSet to = difference(ctx.clique_part(b), ctx.clique_part(a));
    for (std::size_t i = 0; i < from.size(); ++i) forward.push_back(Move::slide(from[i], to[i]));

    append(forward, reverse_sequence(backward));
    return forward;
}

/// BFS over the rigid secondary graph: nodes are clique parts A with |A|
/// fixed, the independent part is frozen, edges are single slides inside K.
class RigidExplorer {
public:
    RigidExplorer(const SplitContext& ctx, VertexSet start_clique, VertexSet independent)
        : ctx_(ctx), indep_(std::move(independent)), store_(state_words(ctx.g.num_vertices())) {
        add(std::move(start_clique), kRoot, Move{});
    }

    std::size_t size() const { return nodes_.size(); }
    bool exhausted() const { return head_ >= nodes_.size(); }
    const VertexSet& clique_part(std::size_t i) const { return nodes_[i]; }
    const VertexSet& independent() const { return indep_; }

    void expand_next() {
        const VertexSet a = nodes_[head_];
        const auto from_node = static_cast<std::uint32_t>(head_++);
        for (Vertex x : a)
            for (Vertex y : ctx_.part.clique) {
                if (contains(a, y)) continue;
                VertexSet next = set_insert(set_erase(a, x), y);
                if (store_.contains(encode_set(next, ctx_.g.num_vertices()))) continue;
                if (!ctx_.colorable(next, indep_)) continue;
                add(std::move(next), from_node, Move::slide(x, y));
            }
    }

    std::optional<std::size_t> find(const VertexSet& clique) const {
        auto key = encode_set(clique, ctx_.g.num_vertices());
        if (!store_.contains(key)) return std::nullopt;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i] == clique) return i;
        return std::nullopt;
    }

    MoveSequence path_to(std::size_t i) const {
        MoveSequence seq;
        for (auto cur = static_cast<std::uint32_t>(i); parent_[cur] != kRoot; cur = parent_[cur]) seq.push_back(via_[cur]);
        std::reverse(seq.begin(), seq.end());
        return seq;
    }

private:
    static constexpr std::uint32_t kRoot = 0xFFFFFFFFu;

    void add(VertexSet clique, std::uint32_t parent, const Move& m) {
        store_.insert(encode_set(clique, ctx_.g.num_vertices()));
        nodes_.push_back(std::move(clique));
        parent_.push_back(parent);
        via_.push_back(m);
    }

    const SplitContext& ctx_;
    VertexSet indep_;
    StateStore store_;
    std::vector<VertexSet> nodes_;
    std::vector<std::uint32_t> parent_;
    std::vector<Move> via_;
    std::size_t head_ = 0;
};

struct Bridge {
    MoveSequence moves;  // rigid prefix followed by the bridging slide
    VertexSet after;     // first state with at most c-1 clique tokens
};

/// Finds a rigid prefix from `start` (which holds c clique tokens) followed by
/// one slide out of the clique. Every such (T_{i-1}, T_i) candidate is
/// accepted: T_i has c-1 clique tokens, so it is c-colorable and routable.
std::optional<Bridge> find_bridge(const SplitContext& ctx, const VertexSet& start, int jobs, SolveStats& stats) {
    RigidExplorer rigid(ctx, ctx.clique_part(start), ctx.independent_part(start));
    std::size_t candidates = 0;

    // Candidate bridges out of node i; returns the first one, counting every
    // candidate looked at.
    auto scan = [&](std::size_t i, std::size_t& counted) -> std::optional<Move> {
        for (Vertex x : rigid.clique_part(i))
            for (Vertex w : ctx.g.neighbors(x)) {
                if (ctx.is_clique_vertex(w) || contains(rigid.independent(), w)) continue;
                ++counted;
                return Move::slide(x, w);
            }
        return std::nullopt;
    };

    std::optional<std::size_t> node;
    std::optional<Move> bridge;
    if (jobs <= 1) {
        for (std::size_t i = 0; !node; ++i) {
            if (i >= rigid.size()) break;
            if (auto m = scan(i, candidates)) {
                node = i;
                bridge = m;
                break;
            }
            while (rigid.size() <= i + 1 && !rigid.exhausted()) rigid.expand_next();
        }
    } else {
        while (!rigid.exhausted()) rigid.expand_next();
        std::atomic<std::size_t> best{rigid.size()};
        std::atomic<std::size_t> counted{0};
        std::vector<std::thread> workers;
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&, t] {
                std::size_t local = 0;
                for (std::size_t i = static_cast<std::size_t>(t); i < rigid.size(); i += static_cast<std::size_t>(jobs)) {
                    if (i >= best.load()) break;
                    if (scan(i, local)) {
                        std::size_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        break;
                    }
                }
                counted += local;
            });
        for (auto& w : workers) w.join();
        candidates = counted.load();
        if (best.load() < rigid.size()) {
            std::size_t dummy = 0;
            node = best.load();
            bridge = scan(*node, dummy);
        }
    }

    stats.rigid_states += rigid.size();
    stats.candidate_pairs += candidates;
    stats.max_candidates_per_enumeration = std::max(stats.max_candidates_per_enumeration, candidates);
    if (!node) return std::nullopt;

    Bridge b;
    b.moves = rigid.path_to(*node);
    b.moves.push_back(*bridge);
    VertexSet before = unite(rigid.clique_part(*node), rigid.independent());
    b.after = set_insert(set_erase(before, bridge->from), bridge->to);
    return b;
}

std::optional<MoveSequence> rigid_path(const SplitContext& ctx, const VertexSet& source, const VertexSet& target,
                                       SolveStats* stats) {
    const VertexSet goal = ctx.clique_part(target);
    RigidExplorer rigid(ctx, ctx.clique_part(source), ctx.independent_part(source));
    std::optional<MoveSequence> out;
    for (std::size_t i = 0; i < rigid.size(); ++i) {
        if (rigid.clique_part(i) == goal) {
            out = rigid.path_to(i);
            break;
        }
        if (rigid.size() <= i + 1 && !rigid.exhausted()) {
            while (rigid.size() <= i + 1 && !rigid.exhausted()) rigid.expand_next();
        }
    }
    if (stats != nullptr) stats->rigid_states += rigid.size();
    return out;
}

/// Case analysis on a connected split component with S != T, |S| = |T|.
std::optional<MoveSequence> solve_connected(const SplitContext& ctx, VertexSet s, VertexSet t, int jobs,
                                            SolveStats& stats) {
    const int c = ctx.c;
    bool swapped = false;
    if (ctx.clique_part(s).size() < ctx.clique_part(t).size()) {
        std::swap(s, t);
        swapped = true;
    }
    const int sk = static_cast<int>(ctx.clique_part(s).size());
    const int tk = static_cast<int>(ctx.clique_part(t).size());

    std::optional<MoveSequence> witness;
    if (sk <= c - 1) {
        witness = route_small(ctx, s, t);
    } else if (tk <= c - 1) {
        if (auto b = find_bridge(ctx, s, jobs, stats)) {
            witness = std::move(b->moves);
            append(*witness, route_small(ctx, b->after, t));
        }
    } else {
        if (ctx.independent_part(s) == ctx.independent_part(t)) witness = rigid_path(ctx, s, t, &stats);
        if (!witness) {
            // Any transformation leaves the rigid component of S through a
            // bridge; reading it backwards, it also enters T's rigid
            // component through one. Both bridge endpoints have c-1 clique
            // tokens, so they are joined by the small-set router.
            auto from_s = find_bridge(ctx, s, jobs, stats);
            if (from_s) {
                auto from_t = find_bridge(ctx, t, jobs, stats);
                if (from_t) {
                    witness = std::move(from_s->moves);
                    append(*witness, route_small(ctx, from_s->after, from_t->after));
                    append(*witness, reverse_sequence(from_t->moves));
                }
            }
        }
    }
    if (witness && swapped) witness = reverse_sequence(*witness);
    return witness;
}

void check_small_preconditions(const SplitInstanceView& view) {
    if (view.instance == nullptr) throw PreconditionError("view without instance");
    const ReconfigInstance& inst = *view.instance;
    const int c = inst.c;
    if (inst.rule.kind != RuleKind::TS) throw PreconditionError("rule must be TS");
    if (c < 2) throw PreconditionError("requires c >= 2");
    if (inst.source.size() != inst.target.size()) throw PreconditionError("|S| != |T|");
    if (static_cast<int>(view.source_clique.size()) > c - 1 || static_cast<int>(view.target_clique.size()) > c - 1)
        throw PreconditionError("more than c-1 tokens in the clique");
    if (connected_components(inst.graph).size() > 1) throw PreconditionError("graph is not connected");
    for (Vertex v : view.partition.independent) {
        const auto& nb = inst.graph.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return contains(view.partition.clique, w); }))
            throw PreconditionError("independent vertex " + std::to_string(v) + " has no clique neighbour");
    }
}

}  // namespace

SplitInstanceView make_split_view(const ReconfigInstance& inst, SplitPartition partition) {
    if (!is_split_partition(inst.graph, partition)) throw NotSplit("not a split partition of the instance graph");
    SplitInstanceView v;
    v.instance = &inst;
    v.source_clique = intersect(inst.source, partition.clique);
    v.source_independent = intersect(inst.source, partition.independent);
    v.target_clique = intersect(inst.target, partition.clique);
    v.target_independent = intersect(inst.target, partition.independent);
    v.partition = std::move(partition);
    return v;
}

MoveSequence reachable_small(const SplitInstanceView& view) {
    check_small_preconditions(view);
    SplitContext ctx(view.instance->graph, view.partition, view.instance->c);
    return route_small(ctx, view.instance->source, view.instance->target);
}

std::optional<MoveSequence> rigid_reach(const SplitInstanceView& view) {
    if (view.instance == nullptr) throw PreconditionError("view without instance");
    const ReconfigInstance& inst = *view.instance;
    if (inst.rule.kind != RuleKind::TS) throw PreconditionError("rule must be TS");
    if (view.source_independent != view.target_independent) throw PreconditionError("rigid reach requires S_I = T_I");
    if (view.source_clique.size() != view.target_clique.size()) return std::nullopt;
    SplitContext ctx(inst.graph, view.partition, inst.c);
    if (!ctx.colorable(view.source_clique, view.source_independent) ||
        !ctx.colorable(view.target_clique, view.target_independent))
        throw PreconditionError("source and target must be c-colorable");
    return rigid_path(ctx, inst.source, inst.target, nullptr);
}

IsolatedTokenCheck isolated_token_check(const ReconfigInstance& inst, const SplitPartition& partition) {
    IsolatedTokenCheck out;
    const Graph& g = inst.graph;
    std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 0) {
            if (contains(inst.source, v) != contains(inst.target, v)) out.feasible = false;
            continue;
        }
        local[static_cast<std::size_t>(v)] = static_cast<int>(out.original_ids.size());
        out.original_ids.push_back(v);
    }
    auto relabel = [&](const VertexSet& s) {
        VertexSet r;
        for (Vertex v : s)
            if (local[static_cast<std::size_t>(v)] >= 0) r.push_back(local[static_cast<std::size_t>(v)]);
        return r;
    };
    out.reduced.graph = g.induced(out.original_ids);
    out.reduced.c = inst.c;
    out.reduced.rule = inst.rule;
    out.reduced.source = relabel(inst.source);
    out.reduced.target = relabel(inst.target);
    out.partition.clique = relabel(partition.clique);
    out.partition.independent = relabel(partition.independent);
    return out;
}

SolveResult solve(const ReconfigInstance& inst, const SolveOptions& options) {
    if (inst.rule.kind != RuleKind::TS) throw RuleMismatch("the split solver handles the TS rule only");
    if (inst.c < 2)
        throw UnsupportedColorBound(
            "c = " + std::to_string(inst.c) +
            ": independent set reconfiguration under TS is PSPACE-complete on split graphs; use the oracle");
    auto partition = split_partition(inst.graph);
    if (!partition) throw NotSplit("input graph is not split");
    check_instance(inst);

    SolveResult result;
    IsolatedTokenCheck iso = isolated_token_check(inst, *partition);
    if (!iso.feasible) return result;

    MoveSequence witness;
    for (const VertexSet& comp : connected_components(iso.reduced.graph)) {
        VertexSet s_local, t_local;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (contains(iso.reduced.source, comp[i])) s_local.push_back(static_cast<Vertex>(i));
            if (contains(iso.reduced.target, comp[i])) t_local.push_back(static_cast<Vertex>(i));
        }
        if (s_local.size() != t_local.size()) return result;
        if (s_local == t_local) continue;

        ++result.stats.components;
        Graph local = iso.reduced.graph.induced(comp);
        auto local_partition = split_partition(local);
        if (!local_partition) throw NotSplit("component is not split");
        SplitContext ctx(local, *local_partition, inst.c);
        auto part = solve_connected(ctx, s_local, t_local, options.jobs, result.stats);
        if (!part) return result;
        for (const Move& m : *part)
            witness.push_back(Move::slide(iso.original_ids[static_cast<std::size_t>(comp[static_cast<std::size_t>(m.from)])],
                                          iso.original_ids[static_cast<std::size_t>(comp[static_cast<std::size_t>(m.to)])]));
    }
    result.reachable = true;
    result.witness = std::move(witness);
    return result;
}

}  // namespace reconf
