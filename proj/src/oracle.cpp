#include "reconf/oracle.hpp"

#include "reconf/errors.hpp"
#include "reconf/state_store.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace reconf {

namespace {

constexpr std::uint32_t kNoParent = 0xFFFFFFFFu;

/// Breadth-first search over vertex sets of an n-vertex graph. `expand`
/// enumerates candidate moves of a state as (move, successor) pairs; `accept`
/// decides whether a not-yet-visited successor is a legal state. The search
/// stops as soon as `target` (when given) is interned.
struct SetSearch {
    int n;
    std::size_t max_states;
    StateStore store;
    std::vector<std::uint32_t> parent;
    std::vector<Move> via;

    SetSearch(int n_, std::size_t cap) : n(n_), max_states(cap), store(state_words(n_)) {}

    template <class Expand, class Accept>
    std::optional<std::uint32_t> run(const VertexSet& start, const VertexSet* target, Expand&& expand,
                                     Accept&& accept) {
        std::vector<std::uint64_t> target_key;
        if (target != nullptr) target_key = encode_set(*target, n);
        intern(encode_set(start, n), kNoParent, Move{});
        if (target != nullptr && *target == start) return 0;

        std::vector<std::uint64_t> key;
        for (std::uint32_t head = 0; head < store.size(); ++head) {
            const VertexSet state = decode_set(store.key(head));
            std::optional<std::uint32_t> found;
            expand(state, [&](const Move& m, const VertexSet& next) {
                if (found) return;
                key = encode_set(next, n);
                if (store.contains(key) || !accept(next)) return;
                std::uint32_t idx = intern(key, head, m);
                if (target != nullptr && key == target_key) found = idx;
            });
            if (found) return found;
        }
        return std::nullopt;
    }

    std::uint32_t intern(const std::vector<std::uint64_t>& key, std::uint32_t from, const Move& m) {
        if (store.size() >= max_states)
            throw ResourceLimit("state cap of " + std::to_string(max_states) + " exceeded");
        auto [idx, inserted] = store.insert(key);
        if (inserted) {
            parent.push_back(from);
            via.push_back(m);
        }
        return idx;
    }

    MoveSequence path_to(std::uint32_t idx) const {
        MoveSequence seq;
        for (std::uint32_t cur = idx; parent[cur] != kNoParent; cur = parent[cur]) seq.push_back(via[cur]);
        std::reverse(seq.begin(), seq.end());
        return seq;
    }
};

template <class Emit>
void expand_reconfig(const Graph& g, const Rule& rule, const VertexSet& state, Emit&& emit) {
    const int n = g.num_vertices();
    switch (rule.kind) {
        case RuleKind::TS:
            for (Vertex u : state)
                for (Vertex v : g.neighbors(u))
                    if (!contains(state, v)) emit(Move::slide(u, v), set_insert(set_erase(state, u), v));
            break;
        case RuleKind::TJ:
            for (Vertex u : state)
                for (Vertex v = 0; v < n; ++v)
                    if (!contains(state, v)) emit(Move::jump(u, v), set_insert(set_erase(state, u), v));
            break;
        case RuleKind::TAR:
            for (Vertex v = 0; v < n; ++v) {
                if (contains(state, v)) {
                    if (static_cast<int>(state.size()) - 1 >= rule.threshold) emit(Move::remove(v), set_erase(state, v));
                } else {
                    emit(Move::add(v), set_insert(state, v));
                }
            }
            break;
    }
}

void check_filter(const StateFilter& filter, const VertexSet& s, const char* which) {
    if (filter && !filter(s)) throw PreconditionError(std::string("state filter rejects the ") + which);
}

}  // namespace

OracleResult reconfig_oracle(const ReconfigInstance& inst, const StateFilter& filter, const OracleOptions& options) {
    check_instance(inst);
    check_filter(filter, inst.source, "source");
    check_filter(filter, inst.target, "target");
    ColorabilityChecker colorable(inst.graph);
    SetSearch search(inst.graph.num_vertices(), options.max_states);
    auto hit = search.run(
        inst.source, &inst.target,
        [&](const VertexSet& s, auto&& emit) { expand_reconfig(inst.graph, inst.rule, s, emit); },
        [&](const VertexSet& next) { return (!filter || filter(next)) && colorable(next, inst.c); });
    OracleResult r;
    r.states_explored = search.store.size();
    if (hit) {
        r.reachable = true;
        r.witness = search.path_to(*hit);
    }
    return r;
}

std::vector<VertexSet> reconfig_reachable_states(const ReconfigInstance& inst, const StateFilter& filter,
                                                 const OracleOptions& options) {
    ReconfigInstance probe = inst;
    probe.target = inst.source;
    check_instance(probe);
    check_filter(filter, inst.source, "source");
    ColorabilityChecker colorable(inst.graph);
    SetSearch search(inst.graph.num_vertices(), options.max_states);
    search.run(
        inst.source, nullptr,
        [&](const VertexSet& s, auto&& emit) { expand_reconfig(inst.graph, inst.rule, s, emit); },
        [&](const VertexSet& next) { return (!filter || filter(next)) && colorable(next, inst.c); });
    std::vector<VertexSet> out;
    out.reserve(search.store.size());
    for (std::uint32_t i = 0; i < search.store.size(); ++i) out.push_back(decode_set(search.store.key(i)));
    return out;
}

OracleResult ds_oracle(const DsInstance& ds, const OracleOptions& options) {
    check_ds_instance(ds);
    const Graph& g = ds.graph;
    const int n = g.num_vertices();
    SetSearch search(n, options.max_states);
    auto hit = search.run(
        ds.source, &ds.target,
        [&](const VertexSet& s, auto&& emit) {
            if (ds.rule == DsRuleKind::TJ) {
                for (Vertex u : s)
                    for (Vertex v = 0; v < n; ++v)
                        if (!contains(s, v)) emit(Move::jump(u, v), set_insert(set_erase(s, u), v));
            } else {
                for (Vertex v = 0; v < n; ++v) {
                    if (contains(s, v))
                        emit(Move::remove(v), set_erase(s, v));
                    else if (static_cast<int>(s.size()) + 1 <= ds.k)
                        emit(Move::add(v), set_insert(s, v));
                }
            }
        },
        [&](const VertexSet& next) { return is_dominating_set(g, next); });
    OracleResult r;
    r.states_explored = search.store.size();
    if (hit) {
        r.reachable = true;
        r.witness = search.path_to(*hit);
    }
    return r;
}

NclOracleResult ncl_oracle(const NclInstance& ncl, const NclOracleOptions& options) {
    const int m = ncl.num_edges();
    if (m > options.max_edges || m > 63)
        throw ResourceLimit("NCL instance has " + std::to_string(m) + " edges, limit is " +
                            std::to_string(options.max_edges));
    if (!orientation_valid(ncl, ncl.start()) || !orientation_valid(ncl, ncl.goal()))
        throw PreconditionError("start and goal orientations must be valid");

    // Bit e is set iff edge e points at its second endpoint.
    auto encode = [&](const Orientation& d) {
        std::uint64_t key = 0;
        for (int e = 0; e < m; ++e)
            if (d[static_cast<std::size_t>(e)] == ncl.edge(e).v) key |= std::uint64_t{1} << e;
        return key;
    };
    auto head_of = [&](std::uint64_t key, int e) { return (key >> e) & 1U ? ncl.edge(e).v : ncl.edge(e).u; };

    StateStore store(1);
    std::vector<std::uint32_t> parent;
    std::vector<Flip> via;
    const std::uint64_t start = encode(ncl.start());
    const std::uint64_t goal = encode(ncl.goal());
    store.insert(std::span<const std::uint64_t>(&start, 1));
    parent.push_back(kNoParent);
    via.push_back({});

    NclOracleResult r;
    std::optional<std::uint32_t> hit;
    if (start == goal) hit = 0;
    std::vector<int> in(static_cast<std::size_t>(ncl.num_vertices()));
    for (std::uint32_t head = 0; !hit && head < store.size(); ++head) {
        const std::uint64_t key = store.key(head)[0];
        std::fill(in.begin(), in.end(), 0);
        for (int e = 0; e < m; ++e) in[static_cast<std::size_t>(head_of(key, e))] += ncl.edge(e).weight();
        for (int e = 0; e < m && !hit; ++e) {
            const Vertex h = head_of(key, e);
            // Flipping e only lowers the in-weight of its current head.
            if (in[static_cast<std::size_t>(h)] - ncl.edge(e).weight() < 2) continue;
            const std::uint64_t next = key ^ (std::uint64_t{1} << e);
            if (store.contains(std::span<const std::uint64_t>(&next, 1))) continue;
            if (store.size() >= options.max_states)
                throw ResourceLimit("state cap of " + std::to_string(options.max_states) + " exceeded");
            const std::uint32_t idx = store.insert(std::span<const std::uint64_t>(&next, 1)).first;
            parent.push_back(head);
            via.push_back({e, ncl.edge(e).other(h)});
            if (next == goal) hit = idx;
        }
    }
    r.states_explored = store.size();
    if (hit) {
        r.reachable = true;
        std::vector<Flip> flips;
        for (std::uint32_t cur = *hit; parent[cur] != kNoParent; cur = parent[cur]) flips.push_back(via[cur]);
        std::reverse(flips.begin(), flips.end());
        r.witness = std::move(flips);
    }
    return r;
}

StateFilter no_both_filter(std::vector<std::pair<Vertex, Vertex>> pairs) {
    return [pairs = std::move(pairs)](std::span<const Vertex> s) {
        for (auto [a, b] : pairs)
            if (std::binary_search(s.begin(), s.end(), a) && std::binary_search(s.begin(), s.end(), b)) return false;
        return true;
    };
}

}  // namespace reconf
