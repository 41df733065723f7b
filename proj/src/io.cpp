#include "reconf/io.hpp"

#include "reconf/errors.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

namespace reconf {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#') continue;
        Line l{number, {}};
        std::istringstream ws(text);
        for (std::string w; ws >> w;) l.words.push_back(w);
        lines.push_back(std::move(l));
    }
    return lines;
}

[[noreturn]] void fail(const Line& l, const std::string& what) {
    throw ParseError("line " + std::to_string(l.number) + ": " + what);
}

int to_int(const Line& l, const std::string& w) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(w, &used);
    } catch (const std::exception&) {
        fail(l, "expected an integer, got '" + w + "'");
    }
    if (used != w.size()) fail(l, "expected an integer, got '" + w + "'");
    return v;
}

void expect_arity(const Line& l, std::size_t n) {
    if (l.words.size() != n)
        fail(l, "'" + l.words[0] + "' expects " + std::to_string(n - 1) + " argument(s), got " +
                    std::to_string(l.words.size() - 1));
}

std::vector<int> ints_after_key(const Line& l) {
    std::vector<int> out;
    for (std::size_t i = 1; i < l.words.size(); ++i) out.push_back(to_int(l, l.words[i]));
    return out;
}

VertexSet read_set(const Line& l) {
    VertexSet s = ints_after_key(l);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(l, "repeated vertex in set");
    return s;
}

/// Collects `p graph n m` and `e u v` lines into a graph.
struct GraphBlock {
    std::optional<int> n;
    int m = 0;
    int header_line = 0;
    std::vector<Edge> edges;

    bool take(const Line& l) {
        const std::string& key = l.words[0];
        if (key == "p" && l.words.size() >= 2 && l.words[1] == "graph") {
            expect_arity(l, 4);
            if (n) fail(l, "second graph header");
            n = to_int(l, l.words[2]);
            m = to_int(l, l.words[3]);
            if (*n < 0 || m < 0) fail(l, "negative graph size");
            header_line = l.number;
            return true;
        }
        if (key == "e") {
            expect_arity(l, 3);
            const int u = to_int(l, l.words[1]);
            const int v = to_int(l, l.words[2]);
            if (u >= v) fail(l, "edge endpoints must satisfy u < v");
            edges.emplace_back(u, v);
            return true;
        }
        return false;
    }

    Graph build() const {
        if (!n) throw ParseError("missing 'p graph <n> <m>' header");
        if (static_cast<int>(edges.size()) != m)
            throw ParseError("line " + std::to_string(header_line) + ": header announces " + std::to_string(m) +
                             " edges, found " + std::to_string(edges.size()));
        try {
            return Graph(*n, edges);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
};

void write_graph_block(std::ostream& out, const Graph& g) {
    out << "p graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

void write_set(std::ostream& out, const char* key, const VertexSet& s) {
    out << key;
    for (Vertex v : s) out << ' ' << v;
    out << '\n';
}

void require_header(const std::vector<Line>& lines, const std::string& kind) {
    if (lines.empty() || lines[0].words[0] != "p" || lines[0].words.size() < 2 || lines[0].words[1] != kind)
        throw ParseError("expected a 'p " + kind + "' header");
}

template <class Parse>
auto load(const std::filesystem::path& path, Parse&& parse) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return parse(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace

Graph parse_graph(std::istream& in) {
    const auto lines = tokenize(in);
    require_header(lines, "graph");
    GraphBlock block;
    for (const Line& l : lines)
        if (!block.take(l)) fail(l, "unknown key '" + l.words[0] + "'");
    return block.build();
}

void write_graph(std::ostream& out, const Graph& g) { write_graph_block(out, g); }

ReconfigInstance parse_instance(std::istream& in, const std::filesystem::path& base_dir) {
    const auto lines = tokenize(in);
    require_header(lines, "inst");
    GraphBlock block;
    std::optional<Graph> external;
    std::optional<int> c;
    std::optional<Rule> rule;
    std::optional<VertexSet> s, t;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const std::string& key = l.words[0];
        if (block.take(l)) continue;
        if (key == "g") {
            expect_arity(l, 2);
            if (external) fail(l, "second graph reference");
            external = load_graph(base_dir / l.words[1]);
        } else if (key == "c") {
            expect_arity(l, 2);
            c = to_int(l, l.words[1]);
            if (*c < 1) fail(l, "c must be at least 1");
        } else if (key == "rule") {
            if (l.words.size() < 2) fail(l, "missing rule name");
            const std::string& name = l.words[1];
            if (name == "ts" || name == "tj") {
                expect_arity(l, 2);
                rule = name == "ts" ? Rule::ts() : Rule::tj();
            } else if (name == "tar") {
                expect_arity(l, 3);
                rule = Rule::tar(to_int(l, l.words[2]));
                if (rule->threshold < 0) fail(l, "TAR threshold must be non-negative");
            } else {
                fail(l, "unknown rule '" + name + "'");
            }
        } else if (key == "s") {
            s = read_set(l);
        } else if (key == "t") {
            t = read_set(l);
        } else {
            fail(l, "unknown key '" + key + "'");
        }
    }
    if (external && block.n) throw ParseError("both 'g' and an inline graph given");
    if (!c) throw ParseError("missing 'c'");
    if (!rule) throw ParseError("missing 'rule'");
    if (!s || !t) throw ParseError("missing 's' or 't'");
    ReconfigInstance inst{external ? *external : block.build(), *c, *rule, *s, *t};
    for (const VertexSet* x : {&inst.source, &inst.target})
        if (!is_canonical_set(*x, inst.graph.num_vertices())) throw ParseError("set vertex out of range");
    return inst;
}

void write_instance(std::ostream& out, const ReconfigInstance& inst) {
    out << "p inst\n";
    write_graph_block(out, inst.graph);
    out << "c " << inst.c << '\n';
    switch (inst.rule.kind) {
        case RuleKind::TS: out << "rule ts\n"; break;
        case RuleKind::TJ: out << "rule tj\n"; break;
        case RuleKind::TAR: out << "rule tar " << inst.rule.threshold << '\n'; break;
    }
    write_set(out, "s", inst.source);
    write_set(out, "t", inst.target);
}

NclInstance parse_ncl(std::istream& in) {
    const auto lines = tokenize(in);
    require_header(lines, "ncl");
    expect_arity(lines[0], 4);
    const int n = to_int(lines[0], lines[0].words[2]);
    const int m = to_int(lines[0], lines[0].words[3]);
    std::vector<NclEdge> edges;
    std::optional<Orientation> d0, d1;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const std::string& key = l.words[0];
        if (key == "e") {
            expect_arity(l, 4);
            NclEdge e{to_int(l, l.words[1]), to_int(l, l.words[2]), NclColor::Red};
            if (l.words[3] == "b")
                e.color = NclColor::Blue;
            else if (l.words[3] != "r")
                fail(l, "edge color must be r or b");
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) fail(l, "bad edge endpoints");
            edges.push_back(e);
        } else if (key == "d0" || key == "d1") {
            auto& d = key == "d0" ? d0 : d1;
            if (d) fail(l, "repeated " + key);
            d = ints_after_key(l);
            if (static_cast<int>(d->size()) != m) fail(l, key + " must list one head per edge");
        } else {
            fail(l, "unknown key '" + key + "'");
        }
    }
    if (static_cast<int>(edges.size()) != m) throw ParseError("header announces " + std::to_string(m) + " edges");
    if (!d0 || !d1) throw ParseError("missing d0 or d1");
    for (int e = 0; e < m; ++e)
        for (const Orientation* d : {&*d0, &*d1}) {
            const Vertex h = (*d)[static_cast<std::size_t>(e)];
            if (h != edges[static_cast<std::size_t>(e)].u && h != edges[static_cast<std::size_t>(e)].v)
                throw ParseError("head of edge " + std::to_string(e) + " is not an endpoint");
        }
    return NclInstance(n, std::move(edges), std::move(*d0), std::move(*d1));
}

void write_ncl(std::ostream& out, const NclInstance& ncl) {
    out << "p ncl " << ncl.num_vertices() << ' ' << ncl.num_edges() << '\n';
    for (const auto& e : ncl.edges()) out << "e " << e.u << ' ' << e.v << ' ' << (e.color == NclColor::Blue ? 'b' : 'r') << '\n';
    write_set(out, "d0", ncl.start());
    write_set(out, "d1", ncl.goal());
}

DsInstance parse_ds(std::istream& in) {
    const auto lines = tokenize(in);
    require_header(lines, "ds");
    GraphBlock block;
    std::optional<int> k;
    std::optional<DsRuleKind> rule;
    std::optional<VertexSet> s, t;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const std::string& key = l.words[0];
        if (block.take(l)) continue;
        if (key == "k") {
            expect_arity(l, 2);
            k = to_int(l, l.words[1]);
        } else if (key == "rule") {
            expect_arity(l, 2);
            if (l.words[1] == "tj")
                rule = DsRuleKind::TJ;
            else if (l.words[1] == "tar")
                rule = DsRuleKind::TAR;
            else
                fail(l, "rule must be tj or tar");
        } else if (key == "s") {
            s = read_set(l);
        } else if (key == "t") {
            t = read_set(l);
        } else {
            fail(l, "unknown key '" + key + "'");
        }
    }
    if (!k || !rule || !s || !t) throw ParseError("ds file needs k, rule, s and t");
    DsInstance ds{block.build(), *k, *rule, *s, *t};
    for (const VertexSet* x : {&ds.source, &ds.target})
        if (!is_canonical_set(*x, ds.graph.num_vertices())) throw ParseError("set vertex out of range");
    return ds;
}

void write_ds(std::ostream& out, const DsInstance& ds) {
    out << "p ds\n";
    write_graph_block(out, ds.graph);
    out << "k " << ds.k << '\n';
    out << "rule " << (ds.rule == DsRuleKind::TJ ? "tj" : "tar") << '\n';
    write_set(out, "s", ds.source);
    write_set(out, "t", ds.target);
}

MoveSequence parse_certificate(std::istream& in) {
    MoveSequence seq;
    for (const Line& l : tokenize(in)) {
        const std::string& key = l.words[0];
        if (key == "sl" || key == "jp") {
            expect_arity(l, 3);
            const int u = to_int(l, l.words[1]), v = to_int(l, l.words[2]);
            seq.push_back(key == "sl" ? Move::slide(u, v) : Move::jump(u, v));
        } else if (key == "add" || key == "rm") {
            expect_arity(l, 2);
            const int v = to_int(l, l.words[1]);
            seq.push_back(key == "add" ? Move::add(v) : Move::remove(v));
        } else {
            fail(l, "unknown move '" + key + "'");
        }
    }
    return seq;
}

void write_certificate(std::ostream& out, const MoveSequence& seq) {
    for (const Move& m : seq) {
        switch (m.kind) {
            case MoveKind::Slide: out << "sl " << m.from << ' ' << m.to << '\n'; break;
            case MoveKind::Jump: out << "jp " << m.from << ' ' << m.to << '\n'; break;
            case MoveKind::Add: out << "add " << m.to << '\n'; break;
            case MoveKind::Remove: out << "rm " << m.from << '\n'; break;
        }
    }
}

std::vector<Flip> parse_ncl_certificate(std::istream& in) {
    std::vector<Flip> flips;
    for (const Line& l : tokenize(in)) {
        if (l.words[0] != "flip") fail(l, "expected 'flip <edge> <new-head>'");
        expect_arity(l, 3);
        flips.push_back({to_int(l, l.words[1]), to_int(l, l.words[2])});
    }
    return flips;
}

void write_ncl_certificate(std::ostream& out, const std::vector<Flip>& flips) {
    for (const Flip& f : flips) out << "flip " << f.edge << ' ' << f.new_head << '\n';
}

void write_map(std::ostream& out, const std::vector<std::string>& labels) {
    for (std::size_t v = 0; v < labels.size(); ++v) out << "# map " << v << ' ' << labels[v] << '\n';
}

std::vector<std::string> parse_map(std::istream& in) {
    std::vector<std::string> labels;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (text.rfind("# map ", 0) != 0) continue;
        std::istringstream ws(text.substr(6));
        std::size_t v = 0;
        if (!(ws >> v) || v != labels.size())
            throw ParseError("line " + std::to_string(number) + ": map entries must be numbered consecutively");
        std::string label;
        std::getline(ws >> std::ws, label);
        labels.push_back(label);
    }
    return labels;
}

std::string file_kind(const std::filesystem::path& path) {
    return load(path, [](std::istream& in) {
        const auto lines = tokenize(in);
        if (lines.empty() || lines[0].words[0] != "p" || lines[0].words.size() < 2) throw ParseError("missing 'p' header");
        return lines[0].words[1];
    });
}

Graph load_graph(const std::filesystem::path& path) { return load(path, [](std::istream& in) { return parse_graph(in); }); }

ReconfigInstance load_instance(const std::filesystem::path& path) {
    return load(path, [&](std::istream& in) { return parse_instance(in, path.parent_path()); });
}

NclInstance load_ncl(const std::filesystem::path& path) { return load(path, [](std::istream& in) { return parse_ncl(in); }); }
DsInstance load_ds(const std::filesystem::path& path) { return load(path, [](std::istream& in) { return parse_ds(in); }); }

MoveSequence load_certificate(const std::filesystem::path& path) {
    return load(path, [](std::istream& in) { return parse_certificate(in); });
}

std::vector<Flip> load_ncl_certificate(const std::filesystem::path& path) {
    return load(path, [](std::istream& in) { return parse_ncl_certificate(in); });
}

void save_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << text;
}

}  // namespace reconf
