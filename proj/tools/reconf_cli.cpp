#include "reconf/errors.hpp"
#include "reconf/generate.hpp"
#include "reconf/io.hpp"
#include "reconf/oracle.hpp"
#include "reconf/reductions.hpp"
#include "reconf/split_solver.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

using namespace reconf;
namespace fs = std::filesystem;

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kResource = 3 };

// Reports move to stderr when stdout carries a file.
std::ostream* report_out = &std::cout;

void report(const std::string& key, const std::string& value) { *report_out << key << ": " << value << '\n'; }
void report(const std::string& key, std::size_t value) { report(key, std::to_string(value)); }

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        save_text(path, text);
}

std::vector<std::string> load_map(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_map(in);
}

/// Selector pairs read from `sel <edge> <head>` labels.
std::vector<std::pair<Vertex, Vertex>> selector_pairs_from_map(const std::vector<std::string>& labels) {
    std::map<int, std::vector<Vertex>> by_edge;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        std::istringstream in(labels[v]);
        std::string tag;
        int edge = 0;
        if (in >> tag >> edge && tag == "sel") by_edge[edge].push_back(static_cast<Vertex>(v));
    }
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& [e, vs] : by_edge) {
        if (vs.size() != 2) throw ParseError("map lists " + std::to_string(vs.size()) + " selectors for edge " + std::to_string(e));
        out.emplace_back(vs[0], vs[1]);
    }
    if (out.empty()) throw ParseError("map has no selector labels");
    return out;
}

std::string with_suffix(const std::string& path, const std::string& suffix) { return path + suffix; }

void write_result(const ValidationResult& r) {
    report("valid", r.valid ? "yes" : "no");
    if (!r.valid) {
        report("failure_index", r.failure_index);
        std::cerr << r.reason << '\n';
    }
}

// ---------------------------------------------------------------------------

struct SolveArgs {
    std::string instance, cert;
    int jobs = 1;
};

int cmd_solve(const SolveArgs& a) {
    const ReconfigInstance inst = load_instance(a.instance);
    const SolveResult r = solve(inst, {a.jobs});
    report("answer", r.reachable ? "yes" : "no");
    if (r.reachable) report("length", r.witness->size());
    report("components", r.stats.components);
    report("rigid_states", r.stats.rigid_states);
    report("candidate_pairs", r.stats.candidate_pairs);
    report("max_candidates", r.stats.max_candidates_per_enumeration);
    if (r.reachable && !a.cert.empty()) save_text(a.cert, to_text(*r.witness, write_certificate));
    return r.reachable ? kYes : kNo;
}

struct OracleArgs {
    std::string file, cert, filter, map;
    std::size_t max_states = 5'000'000;
};

int cmd_oracle(const OracleArgs& a) {
    const std::string kind = file_kind(a.file);
    if (!a.filter.empty() && kind != "inst") throw PreconditionError("--filter applies to instance files only");
    if (kind == "ncl") {
        const NclInstance ncl = load_ncl(a.file);
        NclOracleOptions opt;
        opt.max_states = a.max_states;
        const NclOracleResult r = ncl_oracle(ncl, opt);
        report("answer", r.reachable ? "reachable" : "unreachable");
        if (r.reachable) report("length", r.witness->size());
        report("states", r.states_explored);
        if (r.reachable && !a.cert.empty()) save_text(a.cert, to_text(*r.witness, write_ncl_certificate));
        return r.reachable ? kYes : kNo;
    }
    OracleResult r;
    if (kind == "ds") {
        r = ds_oracle(load_ds(a.file), {a.max_states});
    } else if (kind == "inst") {
        const ReconfigInstance inst = load_instance(a.file);
        StateFilter filter;
        if (a.filter == "no-both-selectors") {
            const std::string map = a.map.empty() ? with_suffix(a.file, ".map") : a.map;
            filter = no_both_filter(selector_pairs_from_map(load_map(map)));
        } else if (!a.filter.empty()) {
            throw PreconditionError("unknown filter " + a.filter);
        }
        r = reconfig_oracle(inst, filter, {a.max_states});
    } else {
        throw ParseError("oracle expects an inst, ncl or ds file, got '" + kind + "'");
    }
    report("answer", r.reachable ? "reachable" : "unreachable");
    if (r.reachable) report("length", r.witness->size());
    report("states", r.states_explored);
    if (r.reachable && !a.cert.empty()) save_text(a.cert, to_text(*r.witness, write_certificate));
    return r.reachable ? kYes : kNo;
}

struct VerifyArgs {
    std::string file, cert;
};

int cmd_verify(const VerifyArgs& a) {
    const std::string kind = file_kind(a.file);
    ValidationResult r;
    if (kind == "ncl") {
        const NclInstance ncl = load_ncl(a.file);
        r = ncl_validate_sequence(ncl, apply_flips(ncl, load_ncl_certificate(a.cert)));
    } else if (kind == "ds") {
        r = validate_ds_sequence(load_ds(a.file), load_certificate(a.cert));
    } else if (kind == "inst") {
        r = validate_sequence(load_instance(a.file), load_certificate(a.cert));
    } else {
        throw ParseError("verify expects an inst, ncl or ds file, got '" + kind + "'");
    }
    write_result(r);
    return r.valid ? kYes : kNo;
}

struct ReduceArgs {
    std::string kind, input, out, map, stage = "gf", lift, project, cert_out, rule = "ts";
    int c = 2;
};

int cmd_reduce(const ReduceArgs& a) {
    const bool transform_only = !a.lift.empty() || !a.project.empty();
    if ((a.out.empty() || a.out == "-") && !transform_only) report_out = &std::cerr;
    const std::string map = a.map.empty() && !a.out.empty() && a.out != "-" ? with_suffix(a.out, ".map") : a.map;
    auto save_map = [&](const std::vector<std::string>& labels) {
        if (!map.empty()) save_text(map, to_text(labels, write_map));
    };
    if (a.kind == "ncl-to-split") {
        const NclInstance raw = load_ncl(a.input);
        const NclInstance ncl = is_normalized(raw) ? raw : ncl_normalize(raw);
        report("subdivided", static_cast<std::size_t>(ncl.num_vertices() - raw.num_vertices()));
        const GbConstruction gb = build_gb(ncl);
        report("m", static_cast<std::size_t>(gb.gadget.m));
        if (!a.lift.empty() && !a.project.empty()) throw PreconditionError("--lift and --project are exclusive");
        if ((!a.lift.empty() || !a.project.empty()) && a.cert_out.empty())
            throw PreconditionError("--lift and --project need --cert-out");

        if (a.stage == "gb") {
            if (!a.lift.empty() || !a.project.empty()) throw PreconditionError("--lift and --project need --stage gf");
            const ReconfigInstance inst{gb.gadget.graph, 1, Rule::ts(), gb.source, gb.target};
            report("vertices", static_cast<std::size_t>(inst.graph.num_vertices()));
            report("edges", inst.graph.num_edges());
            emit(to_text(inst, write_instance), a.out);
            save_map(gb.gadget.labels());
            return kYes;
        }
        if (a.stage != "gf") throw PreconditionError("--stage must be gb or gf");
        const AmplifiedGraph amp = build_gf(gb.gadget, gb.source, gb.target);
        report("copies", static_cast<std::size_t>(amp.copies));
        report("vertices", static_cast<std::size_t>(amp.graph.num_vertices()));
        report("edges", amp.graph.num_edges());
        if (!a.lift.empty()) {
            const MoveSequence lifted = lift_sequence(gb.gadget, load_certificate(a.lift), amp);
            report("lifted_length", lifted.size());
            save_text(a.cert_out, to_text(lifted, write_certificate));
        }
        if (!a.project.empty()) {
            const auto trace = project_sequence(gb.gadget, load_certificate(a.project), amp);
            const MoveSequence cert = main_trace_to_certificate(gb.gadget, trace);
            report("projected_length", cert.size());
            save_text(a.cert_out, to_text(cert, write_certificate));
        }
        if (!a.out.empty() || !transform_only) {
            emit(to_text(ReconfigInstance{amp.graph, 1, Rule::ts(), amp.source, amp.target}, write_instance), a.out);
            save_map(amp.labels(gb.gadget));
        }
        return kYes;
    }
    if (a.kind == "split-to-chordal") {
        const ChordalReduction r = split_to_chordal(load_instance(a.input), a.c);
        report("vertices", static_cast<std::size_t>(r.instance.graph.num_vertices()));
        report("edges", r.instance.graph.num_edges());
        emit(to_text(r.instance, write_instance), a.out);
        save_map(r.labels);
        return kYes;
    }
    if (a.kind == "dsr-to-split") {
        const std::map<std::string, RuleKind> rules{{"ts", RuleKind::TS}, {"tj", RuleKind::TJ}, {"tar", RuleKind::TAR}};
        const auto it = rules.find(a.rule);
        if (it == rules.end()) throw PreconditionError("--rule must be ts, tj or tar");
        const DsSplitReduction r = dsr_to_split(load_ds(a.input), it->second);
        report("vertices", static_cast<std::size_t>(r.instance.graph.num_vertices()));
        report("edges", r.instance.graph.num_edges());
        emit(to_text(r.instance, write_instance), a.out);
        save_map(r.labels);
        return kYes;
    }
    throw PreconditionError("unknown reduction " + a.kind);
}

struct GenArgs {
    std::string kind, out, rule = "tj";
    std::uint64_t seed = 1;
    int n = 10, clique = 4, c = 2, tokens = 3, ands = 2, ors = 2, copies = 2, k = 3, size = 3;
    double density = -1;
};

int cmd_gen(const GenArgs& a) {
    std::string text;
    if (a.kind == "split") {
        text = to_text(generate_split(a.seed, a.n, a.clique, a.c, a.tokens, a.density < 0 ? 0.5 : a.density), write_instance);
    } else if (a.kind == "ncl") {
        text = to_text(generate_ncl(a.seed, a.ands, a.ors, a.copies), write_ncl);
    } else if (a.kind == "ds") {
        if (a.rule != "tj" && a.rule != "tar") throw PreconditionError("--rule must be tj or tar");
        const DsRuleKind rule = a.rule == "tj" ? DsRuleKind::TJ : DsRuleKind::TAR;
        text = to_text(generate_ds(a.seed, a.n, a.k, a.size, rule, a.density < 0 ? 0.4 : a.density), write_ds);
    } else {
        throw PreconditionError("unknown generator " + a.kind);
    }
    emit(text, a.out);
    return kYes;
}

struct InspectArgs {
    std::string file, map;
    bool dot = false;
};

void write_dot(const Graph& g, const std::vector<std::string>& labels) {
    std::cout << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::cout << "  " << v;
        if (static_cast<std::size_t>(v) < labels.size()) {
            const bool gate = labels[static_cast<std::size_t>(v)].find("gate") != std::string::npos;
            std::cout << " [label=\"" << v << ": " << labels[static_cast<std::size_t>(v)] << '"'
                      << (gate ? ", shape=box" : "") << ']';
        }
        std::cout << ";\n";
    }
    for (auto [u, v] : g.edges()) std::cout << "  " << u << " -- " << v << ";\n";
    std::cout << "}\n";
}

int cmd_inspect(const InspectArgs& a) {
    if (a.dot) report_out = &std::cerr;
    const std::string kind = file_kind(a.file);
    report("kind", kind);
    if (kind == "ncl") {
        const NclInstance ncl = load_ncl(a.file);
        report("vertices", static_cast<std::size_t>(ncl.num_vertices()));
        report("edges", static_cast<std::size_t>(ncl.num_edges()));
        report("normalized", is_normalized(ncl) ? "yes" : "no");
        return kYes;
    }
    Graph g;
    if (kind == "graph") {
        g = load_graph(a.file);
    } else if (kind == "inst") {
        const ReconfigInstance inst = load_instance(a.file);
        g = inst.graph;
        report("c", static_cast<std::size_t>(inst.c));
        report("tokens", inst.source.size());
    } else if (kind == "ds") {
        const DsInstance ds = load_ds(a.file);
        g = ds.graph;
        report("k", static_cast<std::size_t>(ds.k));
    } else {
        throw ParseError("unknown file kind '" + kind + "'");
    }
    if (a.dot) {
        std::vector<std::string> labels;
        const std::string map = a.map.empty() ? with_suffix(a.file, ".map") : a.map;
        if (!a.map.empty() || fs::exists(map)) labels = load_map(map);
        write_dot(g, labels);
        return kYes;
    }
    report("vertices", static_cast<std::size_t>(g.num_vertices()));
    report("edges", g.num_edges());
    const auto split = split_partition(g);
    report("split", split ? "yes" : "no");
    if (split) report("clique_side", split->clique.size());
    const auto order = elimination_order(g);
    report("chordal", order ? "yes" : "no");
    if (order) report("clique_number", static_cast<std::size_t>(clique_number_chordal(g, *order)));
    report("components", connected_components(g).size());
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colorable-set reconfiguration tools"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Decide a TS instance on a split graph (c >= 2)");
    solve_cmd->add_option("instance", solve_args.instance)->required();
    solve_cmd->add_option("--cert", solve_args.cert, "Write the witness here");
    solve_cmd->add_option("--jobs", solve_args.jobs)->check(CLI::PositiveNumber);

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "Breadth-first search on an inst, ncl or ds file");
    oracle_cmd->add_option("file", oracle_args.file)->required();
    oracle_cmd->add_option("--cert", oracle_args.cert);
    oracle_cmd->add_option("--max-states", oracle_args.max_states);
    oracle_cmd->add_option("--filter", oracle_args.filter)->check(CLI::IsMember({"no-both-selectors"}));
    oracle_cmd->add_option("--map", oracle_args.map, "Sidecar map (default <file>.map)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
    verify_cmd->add_option("file", verify_args.file)->required();
    verify_cmd->add_option("cert", verify_args.cert)->required();

    ReduceArgs reduce_args;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduced instance");
    reduce_cmd->add_option("kind", reduce_args.kind)
        ->required()
        ->check(CLI::IsMember({"ncl-to-split", "split-to-chordal", "dsr-to-split"}));
    reduce_cmd->add_option("input", reduce_args.input)->required();
    reduce_cmd->add_option("--out", reduce_args.out, "Output instance (default stdout)");
    reduce_cmd->add_option("--map", reduce_args.map, "Sidecar map (default <out>.map)");
    reduce_cmd->add_option("--stage", reduce_args.stage)->check(CLI::IsMember({"gb", "gf"}));
    reduce_cmd->add_option("--lift", reduce_args.lift, "G_b certificate to lift to G_f");
    reduce_cmd->add_option("--project", reduce_args.project, "G_f certificate to project to G_b");
    reduce_cmd->add_option("--cert-out", reduce_args.cert_out);
    reduce_cmd->add_option("--c", reduce_args.c);
    reduce_cmd->add_option("--rule", reduce_args.rule)->check(CLI::IsMember({"ts", "tj", "tar"}));

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
    gen_cmd->add_option("kind", gen_args.kind)->required()->check(CLI::IsMember({"split", "ncl", "ds"}));
    gen_cmd->add_option("--seed", gen_args.seed);
    gen_cmd->add_option("--n", gen_args.n);
    gen_cmd->add_option("--clique", gen_args.clique);
    gen_cmd->add_option("--c", gen_args.c);
    gen_cmd->add_option("--tokens", gen_args.tokens);
    gen_cmd->add_option("--density", gen_args.density);
    gen_cmd->add_option("--and", gen_args.ands);
    gen_cmd->add_option("--or", gen_args.ors);
    gen_cmd->add_option("--copy", gen_args.copies);
    gen_cmd->add_option("--k", gen_args.k);
    gen_cmd->add_option("--size", gen_args.size);
    gen_cmd->add_option("--rule", gen_args.rule)->check(CLI::IsMember({"tj", "tar"}));
    gen_cmd->add_option("--out", gen_args.out);

    InspectArgs inspect_args;
    auto* inspect_cmd = app.add_subcommand("inspect", "Summarize a file");
    inspect_cmd->add_option("file", inspect_args.file)->required();
    inspect_cmd->add_flag("--dot", inspect_args.dot, "Print the graph in DOT format");
    inspect_cmd->add_option("--map", inspect_args.map);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kYes : kUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve_args);
        if (*oracle_cmd) return cmd_oracle(oracle_args);
        if (*verify_cmd) return cmd_verify(verify_args);
        if (*reduce_cmd) return cmd_reduce(reduce_args);
        if (*gen_cmd) return cmd_gen(gen_args);
        if (*inspect_cmd) return cmd_inspect(inspect_args);
    } catch (const ResourceLimit& e) {
        std::cerr << e.what() << '\n';
        return kResource;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
