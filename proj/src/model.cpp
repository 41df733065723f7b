#include "reconf/model.hpp"

#include "reconf/errors.hpp"

#include <algorithm>
#include <string>

namespace reconf {

bool is_canonical_set(std::span<const Vertex> s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n) return false;
        if (i > 0 && s[i - 1] >= s[i]) return false;
    }
    return true;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_insert(VertexSet s, Vertex v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
    return s;
}

VertexSet set_erase(VertexSet s, Vertex v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v) s.erase(it);
    return s;
}

void check_instance(const ReconfigInstance& inst) {
    const int n = inst.graph.num_vertices();
    if (inst.c < 1) throw PreconditionError("color bound must be >= 1");
    if (!is_canonical_set(inst.source, n) || !is_canonical_set(inst.target, n))
        throw PreconditionError("source/target must be sorted duplicate-free vertex lists within range");
    if (inst.rule.kind == RuleKind::TAR) {
        if (inst.rule.threshold < 0) throw PreconditionError("TAR threshold must be >= 0");
        if (static_cast<int>(inst.source.size()) < inst.rule.threshold ||
            static_cast<int>(inst.target.size()) < inst.rule.threshold)
            throw PreconditionError("TAR source/target smaller than threshold");
    } else if (inst.source.size() != inst.target.size()) {
        throw PreconditionError("TS/TJ source and target must have equal size");
    }
    if (!chromatic_leq(inst.graph, inst.source, inst.c)) throw PreconditionError("source is not c-colorable");
    if (!chromatic_leq(inst.graph, inst.target, inst.c)) throw PreconditionError("target is not c-colorable");
}

namespace {

const char* kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Slide: return "slide";
        case MoveKind::Jump: return "jump";
        case MoveKind::Add: return "add";
        case MoveKind::Remove: return "remove";
    }
    return "?";
}

void require_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.num_vertices()) throw IllegalMove("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

VertexSet apply_move(const ColorabilityChecker& colorable, const Graph& g, int c, const Rule& rule,
                     const VertexSet& state, const Move& m) {
    VertexSet next;
    switch (m.kind) {
        case MoveKind::Slide:
        case MoveKind::Jump: {
            if (rule.kind == RuleKind::TAR) throw IllegalMove(std::string(kind_name(m.kind)) + " under TAR");
            if (m.kind == MoveKind::Jump && rule.kind == RuleKind::TS) throw IllegalMove("jump under TS");
            require_vertex(g, m.from);
            require_vertex(g, m.to);
            if (!contains(state, m.from)) throw IllegalMove("no token on " + std::to_string(m.from));
            if (contains(state, m.to)) throw IllegalMove("vertex " + std::to_string(m.to) + " already occupied");
            if (m.kind == MoveKind::Slide && !g.has_edge(m.from, m.to))
                throw IllegalMove("slide along non-edge " + std::to_string(m.from) + " " + std::to_string(m.to));
            next = set_insert(set_erase(state, m.from), m.to);
            break;
        }
        case MoveKind::Add:
            if (rule.kind != RuleKind::TAR) throw IllegalMove("add outside TAR");
            require_vertex(g, m.to);
            if (contains(state, m.to)) throw IllegalMove("vertex " + std::to_string(m.to) + " already occupied");
            next = set_insert(state, m.to);
            break;
        case MoveKind::Remove:
            if (rule.kind != RuleKind::TAR) throw IllegalMove("remove outside TAR");
            require_vertex(g, m.from);
            if (!contains(state, m.from)) throw IllegalMove("no token on " + std::to_string(m.from));
            next = set_erase(state, m.from);
            if (static_cast<int>(next.size()) < rule.threshold) throw IllegalMove("size drops below TAR threshold");
            break;
    }
    if (!colorable(next, c)) throw IllegalMove("successor is not " + std::to_string(c) + "-colorable");
    return next;
}

VertexSet apply_move(const Graph& g, int c, const Rule& rule, const VertexSet& state, const Move& m) {
    ColorabilityChecker colorable(g);
    return apply_move(colorable, g, c, rule, state, m);
}

ValidationResult validate_sequence(const ReconfigInstance& inst, const MoveSequence& seq) {
    ColorabilityChecker colorable(inst.graph);
    VertexSet state = inst.source;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            state = apply_move(colorable, inst.graph, inst.c, inst.rule, state, seq[i]);
        } catch (const IllegalMove& e) {
            return {false, i, e.what()};
        }
    }
    if (state != inst.target) return {false, seq.size(), "final state differs from target"};
    return {};
}

std::vector<VertexSet> trace_states(const VertexSet& source, const MoveSequence& seq) {
    std::vector<VertexSet> out{source};
    out.reserve(seq.size() + 1);
    for (const Move& m : seq) {
        VertexSet s = out.back();
        if (m.from >= 0) s = set_erase(std::move(s), m.from);
        if (m.to >= 0) s = set_insert(std::move(s), m.to);
        out.push_back(std::move(s));
    }
    return out;
}

MoveSequence reverse_sequence(const MoveSequence& seq) {
    MoveSequence out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        switch (it->kind) {
            case MoveKind::Slide: out.push_back(Move::slide(it->to, it->from)); break;
            case MoveKind::Jump: out.push_back(Move::jump(it->to, it->from)); break;
            case MoveKind::Add: out.push_back(Move::remove(it->to)); break;
            case MoveKind::Remove: out.push_back(Move::add(it->from)); break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

NclInstance::NclInstance(int n, std::vector<NclEdge> edges, Orientation start, Orientation goal)
    : n_(n), edges_(std::move(edges)), start_(std::move(start)), goal_(std::move(goal)) {
    if (n < 0) throw MalformedNcl("negative vertex count");
    incident_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& ed = edges_[e];
        if (ed.u < 0 || ed.v < 0 || ed.u >= n || ed.v >= n)
            throw MalformedNcl("edge " + std::to_string(e) + " endpoint out of range");
        if (ed.u == ed.v) throw MalformedNcl("edge " + std::to_string(e) + " is a self-loop");
        incident_[static_cast<std::size_t>(ed.u)].push_back(static_cast<int>(e));
        incident_[static_cast<std::size_t>(ed.v)].push_back(static_cast<int>(e));
    }
    types_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        int red = 0, blue = 0;
        for (int e : incident(v)) (edge(e).color == NclColor::Red ? red : blue)++;
        if (red == 2 && blue == 1)
            types_[static_cast<std::size_t>(v)] = NclVertexType::And;
        else if (red == 0 && blue == 3)
            types_[static_cast<std::size_t>(v)] = NclVertexType::Or;
        else if (red == 0 && blue == 2)
            types_[static_cast<std::size_t>(v)] = NclVertexType::Copy;
        else
            throw MalformedNcl("vertex " + std::to_string(v) + " is neither AND, OR nor COPY (" + std::to_string(red) +
                               " red, " + std::to_string(blue) + " blue)");
    }
    for (const Orientation* d : {&start_, &goal_}) {
        if (d->size() != edges_.size()) throw MalformedNcl("orientation length differs from edge count");
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if ((*d)[e] != edges_[e].u && (*d)[e] != edges_[e].v)
                throw MalformedNcl("orientation head of edge " + std::to_string(e) + " is not an endpoint");
    }
    if (!orientation_valid(*this, start_)) throw MalformedNcl("start orientation is invalid");
    if (!orientation_valid(*this, goal_)) throw MalformedNcl("goal orientation is invalid");
}

bool orientation_valid(const NclInstance& ncl, const Orientation& d) {
    if (d.size() != static_cast<std::size_t>(ncl.num_edges())) return false;
    std::vector<int> in(static_cast<std::size_t>(ncl.num_vertices()), 0);
    for (int e = 0; e < ncl.num_edges(); ++e) {
        const auto& ed = ncl.edge(e);
        Vertex h = d[static_cast<std::size_t>(e)];
        if (h != ed.u && h != ed.v) return false;
        in[static_cast<std::size_t>(h)] += ed.weight();
    }
    return std::all_of(in.begin(), in.end(), [](int w) { return w >= 2; });
}

ValidationResult ncl_validate_sequence(const NclInstance& ncl, const std::vector<Orientation>& seq) {
    if (seq.empty()) return {false, 0, "empty orientation sequence"};
    if (seq.front() != ncl.start()) return {false, 0, "sequence does not start at D"};
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!orientation_valid(ncl, seq[i])) return {false, i, "invalid orientation"};
        if (i > 0) {
            std::size_t diff = 0;
            for (std::size_t e = 0; e < seq[i].size(); ++e) diff += seq[i][e] != seq[i - 1][e];
            if (diff != 1) return {false, i, "consecutive orientations differ on " + std::to_string(diff) + " edges"};
        }
    }
    if (seq.back() != ncl.goal()) return {false, seq.size(), "sequence does not end at D'"};
    return {};
}

std::vector<Orientation> apply_flips(const NclInstance& ncl, const std::vector<Flip>& flips) {
    std::vector<Orientation> out{ncl.start()};
    for (const Flip& f : flips) {
        if (f.edge < 0 || f.edge >= ncl.num_edges()) throw PreconditionError("flip of unknown edge " + std::to_string(f.edge));
        const auto& ed = ncl.edge(f.edge);
        if (f.new_head != ed.u && f.new_head != ed.v)
            throw PreconditionError("flip head " + std::to_string(f.new_head) + " is not an endpoint of edge " +
                                    std::to_string(f.edge));
        Orientation d = out.back();
        d[static_cast<std::size_t>(f.edge)] = f.new_head;
        out.push_back(std::move(d));
    }
    return out;
}

// ---------------------------------------------------------------------------

bool is_dominating_set(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> dom(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : s) {
        dom[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) dom[static_cast<std::size_t>(w)] = 1;
    }
    return std::all_of(dom.begin(), dom.end(), [](char d) { return d != 0; });
}

void check_ds_instance(const DsInstance& ds) {
    const int n = ds.graph.num_vertices();
    if (!is_canonical_set(ds.source, n) || !is_canonical_set(ds.target, n))
        throw PreconditionError("source/target must be sorted duplicate-free vertex lists within range");
    if (static_cast<int>(ds.source.size()) > ds.k || static_cast<int>(ds.target.size()) > ds.k)
        throw PreconditionError("source/target larger than k");
    if (ds.rule == DsRuleKind::TJ && ds.source.size() != ds.target.size())
        throw PreconditionError("TJ source and target must have equal size");
    if (!is_dominating_set(ds.graph, ds.source)) throw PreconditionError("source is not dominating");
    if (!is_dominating_set(ds.graph, ds.target)) throw PreconditionError("target is not dominating");
}

VertexSet apply_ds_move(const DsInstance& ds, const VertexSet& state, const Move& m) {
    const Graph& g = ds.graph;
    VertexSet next;
    switch (m.kind) {
        case MoveKind::Slide:
        case MoveKind::Jump:
            if (ds.rule != DsRuleKind::TJ) throw IllegalMove(std::string(kind_name(m.kind)) + " under TAR");
            require_vertex(g, m.from);
            require_vertex(g, m.to);
            if (!contains(state, m.from)) throw IllegalMove("no token on " + std::to_string(m.from));
            if (contains(state, m.to)) throw IllegalMove("vertex " + std::to_string(m.to) + " already occupied");
            if (m.kind == MoveKind::Slide && !g.has_edge(m.from, m.to)) throw IllegalMove("slide along non-edge");
            next = set_insert(set_erase(state, m.from), m.to);
            break;
        case MoveKind::Add:
            if (ds.rule != DsRuleKind::TAR) throw IllegalMove("add outside TAR");
            require_vertex(g, m.to);
            if (contains(state, m.to)) throw IllegalMove("vertex " + std::to_string(m.to) + " already occupied");
            next = set_insert(state, m.to);
            if (static_cast<int>(next.size()) > ds.k) throw IllegalMove("size exceeds k");
            break;
        case MoveKind::Remove:
            if (ds.rule != DsRuleKind::TAR) throw IllegalMove("remove outside TAR");
            require_vertex(g, m.from);
            if (!contains(state, m.from)) throw IllegalMove("no token on " + std::to_string(m.from));
            next = set_erase(state, m.from);
            break;
    }
    if (!is_dominating_set(g, next)) throw IllegalMove("successor is not dominating");
    return next;
}

ValidationResult validate_ds_sequence(const DsInstance& ds, const MoveSequence& seq) {
    VertexSet state = ds.source;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            state = apply_ds_move(ds, state, seq[i]);
        } catch (const IllegalMove& e) {
            return {false, i, e.what()};
        }
    }
    if (state != ds.target) return {false, seq.size(), "final state differs from target"};
    return {};
}

}  // namespace reconf
