#include "helpers.hpp"
#include "oracles.hpp"

#include "reconf/errors.hpp"
#include "reconf/model.hpp"
#include "reconf/oracle.hpp"

#include <doctest.h>

using namespace reconf;

TEST_CASE("apply_move examples") {
    Graph p3 = path(3);
    CHECK(apply_move(p3, 1, Rule::ts(), {0}, Move::slide(0, 1)) == VertexSet{1});
    CHECK_THROWS_AS(apply_move(p3, 1, Rule::ts(), {0, 2}, Move::slide(0, 1)), IllegalMove);
    CHECK(apply_move(star3(), 2, Rule::ts(), {1, 2}, Move::slide(1, 0)) == VertexSet{0, 2});
}

TEST_CASE("apply_move rule restrictions") {
    Graph p3 = path(3);
    CHECK_THROWS_AS(apply_move(p3, 1, Rule::ts(), {0}, Move::jump(0, 2)), IllegalMove);
    CHECK(apply_move(p3, 1, Rule::tj(), {0}, Move::jump(0, 2)) == VertexSet{2});
    CHECK(apply_move(p3, 1, Rule::tj(), {0}, Move::slide(0, 1)) == VertexSet{1});
    CHECK_THROWS_AS(apply_move(p3, 1, Rule::ts(), {0}, Move::slide(0, 2)), IllegalMove);
    CHECK_THROWS_AS(apply_move(p3, 1, Rule::ts(), {0}, Move::slide(1, 2)), IllegalMove);
    CHECK_THROWS_AS(apply_move(p3, 1, Rule::ts(), {0}, Move::add(2)), IllegalMove);
    CHECK_THROWS_AS(apply_move(p3, 1, Rule::tar(1), {0}, Move::slide(0, 1)), IllegalMove);
    CHECK(apply_move(p3, 1, Rule::tar(1), {0}, Move::add(2)) == VertexSet{0, 2});
    CHECK_THROWS_AS(apply_move(p3, 1, Rule::tar(1), {0}, Move::remove(0)), IllegalMove);
    CHECK(apply_move(p3, 1, Rule::tar(0), {0}, Move::remove(0)).empty());
    CHECK_THROWS_AS(apply_move(p3, 1, Rule::tar(0), {0}, Move::add(1)), IllegalMove);
}

TEST_CASE("validate_sequence examples") {
    ReconfigInstance same{path(3), 1, Rule::ts(), {0}, {0}};
    CHECK(validate_sequence(same, {}));

    ReconfigInstance p3{path(3), 1, Rule::ts(), {0}, {2}};
    CHECK(validate_sequence(p3, {Move::slide(0, 1), Move::slide(1, 2)}));

    auto short_seq = validate_sequence(p3, {Move::slide(0, 1)});
    CHECK_FALSE(short_seq);
    CHECK(short_seq.failure_index == 1);

    auto bad = validate_sequence(p3, {Move::slide(0, 2), Move::slide(1, 2)});
    CHECK_FALSE(bad);
    CHECK(bad.failure_index == 0);
}

TEST_CASE("check_instance preconditions") {
    CHECK_THROWS_AS(check_instance({path(3), 1, Rule::ts(), {0, 1}, {0, 2}}), PreconditionError);
    CHECK_THROWS_AS(check_instance({path(3), 1, Rule::ts(), {0}, {0, 2}}), PreconditionError);
    CHECK_THROWS_AS(check_instance({path(3), 1, Rule::tar(2), {0}, {0, 2}}), PreconditionError);
    CHECK_NOTHROW(check_instance({path(3), 1, Rule::tar(1), {0}, {0, 2}}));
    CHECK_THROWS_AS(check_instance({path(3), 1, Rule::ts(), {2, 0}, {0, 2}}), PreconditionError);
    CHECK_THROWS_AS(check_instance({path(3), 0, Rule::ts(), {0}, {2}}), PreconditionError);
}

TEST_CASE("reversed witnesses validate on swapped instances") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int round = 0; round < 200; ++round) {
        Graph g = brute::random_split(rng, 7, 3, 0.5);
        for (Rule rule : {Rule::ts(), Rule::tj()}) {
            ReconfigInstance inst{g, 2, rule, brute::random_subset(rng, 7, 3), brute::random_subset(rng, 7, 3)};
            if (!chromatic_leq(g, inst.source, 2) || !chromatic_leq(g, inst.target, 2)) continue;
            auto r = reconfig_oracle(inst);
            if (!r.reachable) continue;
            ReconfigInstance back{g, 2, rule, inst.target, inst.source};
            CHECK(validate_sequence(back, reverse_sequence(*r.witness)));
            // Every accepted TS move is along an edge.
            if (rule.kind == RuleKind::TS)
                for (const Move& m : *r.witness) CHECK(g.has_edge(m.from, m.to));
            ++checked;
        }
    }
    CHECK(checked > 50);
}

namespace {

// Three COPY vertices in a blue triangle.
NclInstance triangle_ncl() {
    std::vector<NclEdge> e{{0, 1, NclColor::Blue}, {1, 2, NclColor::Blue}, {0, 2, NclColor::Blue}};
    return NclInstance(3, e, {1, 2, 0}, {0, 1, 2});
}

}  // namespace

TEST_CASE("NCL instance validation and orientation checks") {
    NclInstance tri = triangle_ncl();
    CHECK(tri.type(0) == NclVertexType::Copy);
    CHECK(orientation_valid(tri, {1, 2, 0}));
    // Vertex 0 receives nothing.
    CHECK_FALSE(orientation_valid(tri, {1, 2, 2}));

    // A vertex with one red and one blue edge is none of the three types.
    std::vector<NclEdge> bad{{0, 1, NclColor::Red}, {0, 1, NclColor::Blue}};
    CHECK_THROWS_AS(NclInstance(2, bad, {0, 1}, {0, 1}), MalformedNcl);

    // Head not an endpoint.
    std::vector<NclEdge> e{{0, 1, NclColor::Blue}, {1, 2, NclColor::Blue}, {0, 2, NclColor::Blue}};
    CHECK_THROWS_AS(NclInstance(3, e, {2, 2, 0}, {0, 1, 2}), MalformedNcl);
}

TEST_CASE("AND and OR local validity") {
    // AND vertices 0, 1, 2 joined by red edges; OR vertices 3, 4, 5.
    std::vector<NclEdge> e{{0, 1, NclColor::Red},  {0, 2, NclColor::Red},  {0, 3, NclColor::Blue},
                           {1, 2, NclColor::Red},  {1, 4, NclColor::Blue}, {2, 5, NclColor::Blue},
                           {3, 4, NclColor::Blue}, {3, 5, NclColor::Blue}, {4, 5, NclColor::Blue}};
    const Orientation d{0, 0, 3, 1, 1, 2, 4, 5, 5};
    NclInstance ncl(6, e, d, d);
    CHECK(ncl.type(0) == NclVertexType::And);
    CHECK(ncl.type(3) == NclVertexType::Or);
    CHECK(orientation_valid(ncl, d));

    // AND vertex 0 with a single red edge incoming.
    Orientation one_red = d;
    one_red[1] = 2;
    CHECK_FALSE(orientation_valid(ncl, one_red));

    // OR vertex 3 receives exactly one blue edge in d, which suffices.
    int into_3 = 0;
    for (int i = 0; i < ncl.num_edges(); ++i)
        if (d[static_cast<std::size_t>(i)] == 3) ++into_3;
    CHECK(into_3 == 1);
}

TEST_CASE("ncl_validate_sequence") {
    NclInstance tri = triangle_ncl();
    NclInstance same(3, tri.edges(), tri.start(), tri.start());
    CHECK(ncl_validate_sequence(same, {tri.start()}));

    // Flipping two edges in one step is rejected.
    Orientation two = tri.start();
    two[0] = 0;
    two[1] = 1;
    CHECK_FALSE(ncl_validate_sequence(tri, {tri.start(), two}));

    // A step producing in-weight 0 at vertex 1.
    Orientation starve = tri.start();
    starve[0] = 0;
    CHECK_FALSE(ncl_validate_sequence(tri, {tri.start(), starve}));

    auto trace = apply_flips(tri, {});
    CHECK(trace.size() == 1);
}

TEST_CASE("dominating sets") {
    CHECK(is_dominating_set(path(4), VertexSet{0, 1, 2, 3}));
    CHECK(is_dominating_set(star3(), VertexSet{0}));
    CHECK_FALSE(is_dominating_set(path(4), VertexSet{0}));

    DsInstance ds{path(4), 2, DsRuleKind::TJ, {0, 2}, {1, 3}};
    CHECK_FALSE(validate_ds_sequence(ds, {Move::jump(0, 3), Move::jump(2, 1)}));
    CHECK(validate_ds_sequence(ds, {Move::jump(2, 3), Move::jump(0, 1)}));

    DsInstance tar{path(4), 2, DsRuleKind::TAR, {1, 2}, {1, 3}};
    CHECK_FALSE(validate_ds_sequence(tar, {Move::add(3), Move::remove(2)}));  // size 3 > k
    CHECK_FALSE(validate_ds_sequence(tar, {Move::remove(2), Move::add(3)}));  // {1} is not dominating
}

TEST_CASE("set helpers") {
    CHECK(is_canonical_set(VertexSet{0, 2}, 3));
    CHECK_FALSE(is_canonical_set(VertexSet{2, 0}, 3));
    CHECK_FALSE(is_canonical_set(VertexSet{0, 0}, 3));
    CHECK_FALSE(is_canonical_set(VertexSet{3}, 3));
    CHECK(set_insert({0, 2}, 1) == VertexSet{0, 1, 2});
    CHECK(set_erase({0, 1, 2}, 1) == VertexSet{0, 2});
}
