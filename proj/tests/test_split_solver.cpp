#include "helpers.hpp"
#include "oracles.hpp"

#include "reconf/errors.hpp"
#include "reconf/oracle.hpp"
#include "reconf/split_solver.hpp"

#include <doctest.h>

#include <array>

using namespace reconf;

namespace {

// K = {0,1}, I = {2,3}, edges 0-2 and 1-3.
Graph ladder() { return make_graph(4, {{0, 1}, {0, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("reachable_small examples") {
    ReconfigInstance same{star3(), 2, Rule::ts(), {1, 2}, {1, 2}};
    CHECK(reachable_small(make_split_view(same, *split_partition(same.graph))).empty());

    ReconfigInstance star{star3(), 2, Rule::ts(), {1, 2}, {2, 3}};
    auto seq = reachable_small(make_split_view(star, *split_partition(star.graph)));
    CHECK(seq == MoveSequence{Move::slide(1, 0), Move::slide(0, 3)});

    ReconfigInstance lad{ladder(), 2, Rule::ts(), {0, 2}, {1, 3}};
    REQUIRE(reconfig_oracle(lad).reachable);
    CHECK(validate_sequence(lad, reachable_small(make_split_view(lad, *split_partition(lad.graph)))));
}

TEST_CASE("reachable_small preconditions") {
    ReconfigInstance c1{star3(), 1, Rule::ts(), {1, 2}, {2, 3}};
    CHECK_THROWS_AS(reachable_small(make_split_view(c1, *split_partition(c1.graph))), PreconditionError);

    // |S_K| = c.
    ReconfigInstance full{ladder(), 2, Rule::ts(), {0, 1}, {2, 3}};
    CHECK_THROWS_AS(reachable_small(make_split_view(full, *split_partition(full.graph))), PreconditionError);

    // Isolated vertex 4 has no clique neighbour.
    ReconfigInstance iso{make_graph(5, {{0, 1}, {0, 2}, {1, 3}}), 2, Rule::ts(), {2}, {3}};
    CHECK_THROWS_AS(reachable_small(make_split_view(iso, *split_partition(iso.graph))), PreconditionError);
}

TEST_CASE("reachable_small always succeeds on random instances") {
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int round = 0; round < 600; ++round) {
        const int c = std::array{2, 3, 5}[round % 3];
        const int n = 6 + static_cast<int>(rng() % 10);
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        Graph g = brute::random_split(rng, n, k, 0.4);
        auto p = split_partition(g);
        REQUIRE(p);
        bool ok = connected_components(g).size() == 1;
        if (!ok) continue;
        const int size = 1 + static_cast<int>(rng() % std::min(n - 1, 5));
        ReconfigInstance inst{g, c, Rule::ts(), brute::random_subset(rng, n, size), brute::random_subset(rng, n, size)};
        auto view = make_split_view(inst, *p);
        if (static_cast<int>(view.source_clique.size()) > c - 1 || static_cast<int>(view.target_clique.size()) > c - 1)
            continue;
        auto seq = reachable_small(view);
        REQUIRE(validate_sequence(inst, seq));
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("rigid_reach examples") {
    // Triangle {0,1,2} with pendant 3 on 0.
    Graph g = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    ReconfigInstance same{g, 2, Rule::ts(), {0, 1}, {0, 1}};
    auto view = make_split_view(same, *split_partition(g));
    REQUIRE(rigid_reach(view));
    CHECK(rigid_reach(view)->empty());

    ReconfigInstance one{g, 2, Rule::ts(), {0, 1}, {1, 2}};
    auto r = rigid_reach(make_split_view(one, *split_partition(g)));
    REQUIRE(r);
    CHECK(*r == MoveSequence{Move::slide(0, 2)});

    ReconfigInstance moved{g, 2, Rule::ts(), {0, 1}, {1, 3}};
    CHECK_THROWS_AS(rigid_reach(make_split_view(moved, *split_partition(g))), PreconditionError);
}

TEST_CASE("rigid_reach reports absence when every intermediate overloads colors") {
    // K = {0,1,2,3}; I-vertices 4..7 see {0,2}, {0,3}, {1,2}, {1,3}. With all
    // of I occupied and c = 2, the only legal clique pairs are {0,1} and
    // {2,3}, which share no vertex.
    Graph g = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                             {0, 4}, {2, 4}, {0, 5}, {3, 5}, {1, 6}, {2, 6}, {1, 7}, {3, 7}});
    ReconfigInstance inst{g, 2, Rule::ts(), {0, 1, 4, 5, 6, 7}, {2, 3, 4, 5, 6, 7}};
    auto view = make_split_view(inst, *split_partition(g));
    CHECK(view.partition.clique == VertexSet{0, 1, 2, 3});
    CHECK_FALSE(rigid_reach(view));
    CHECK(solve(inst).reachable == reconfig_oracle(inst).reachable);
}

TEST_CASE("rigid witnesses only move clique tokens") {
    std::mt19937_64 rng(8);
    int found = 0;
    for (int round = 0; round < 400; ++round) {
        Graph g = brute::random_split(rng, 9, 5, 0.5);
        auto p = *split_partition(g);
        const int c = 2 + static_cast<int>(rng() % 2);
        VertexSet indep = brute::random_subset(rng, static_cast<int>(p.independent.size()), 1);
        VertexSet s, t;
        for (Vertex i : indep) s.push_back(p.independent[static_cast<std::size_t>(i)]);
        t = s;
        for (Vertex i : brute::random_subset(rng, static_cast<int>(p.clique.size()), c)) s.push_back(p.clique[static_cast<std::size_t>(i)]);
        for (Vertex i : brute::random_subset(rng, static_cast<int>(p.clique.size()), c)) t.push_back(p.clique[static_cast<std::size_t>(i)]);
        std::sort(s.begin(), s.end());
        std::sort(t.begin(), t.end());
        ReconfigInstance inst{g, c, Rule::ts(), s, t};
        if (!chromatic_leq(g, s, c) || !chromatic_leq(g, t, c)) continue;
        auto view = make_split_view(inst, p);
        auto r = rigid_reach(view);
        if (!r) continue;
        ++found;
        CHECK(validate_sequence(inst, *r));
        for (const Move& m : *r) {
            CHECK(contains(p.clique, m.from));
            CHECK(contains(p.clique, m.to));
        }
    }
    CHECK(found > 50);
}

TEST_CASE("solve examples") {
    ReconfigInstance lad{ladder(), 2, Rule::ts(), {0, 1, 2}, {0, 2, 3}};
    auto r = solve(lad);
    REQUIRE(r.reachable);
    CHECK(validate_sequence(lad, *r.witness));
    auto oracle = reconfig_oracle(lad);
    CHECK(oracle.reachable);
    CHECK(oracle.witness->size() == 1);

    ReconfigInstance star{star3(), 2, Rule::ts(), {1, 2}, {2, 3}};
    auto s = solve(star);
    REQUIRE(s.reachable);
    CHECK(s.witness->size() == 2);

    ReconfigInstance same{star3(), 2, Rule::ts(), {1, 2}, {1, 2}};
    CHECK(solve(same).witness->empty());
}

TEST_CASE("solve guards") {
    CHECK_THROWS_AS(solve({star3(), 1, Rule::ts(), {1, 2}, {2, 3}}), UnsupportedColorBound);
    CHECK_THROWS_AS(solve({star3(), 2, Rule::tj(), {1, 2}, {2, 3}}), RuleMismatch);
    CHECK_THROWS_AS(solve({make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 2, Rule::ts(), {0}, {1}}), NotSplit);
    CHECK_THROWS_AS(solve({complete(3), 2, Rule::ts(), {0, 1, 2}, {0, 1, 2}}), PreconditionError);
    try {
        solve({star3(), 1, Rule::ts(), {1, 2}, {2, 3}});
    } catch (const UnsupportedColorBound& e) {
        CHECK(std::string(e.what()).find("PSPACE-complete") != std::string::npos);
    }
}

TEST_CASE("isolated_token_check") {
    // Edge 0-1 plus isolated 2 and 3.
    Graph g = make_graph(4, {{0, 1}});
    SplitPartition p = *split_partition(g);

    auto keep = isolated_token_check({g, 2, Rule::ts(), {0, 2}, {1, 2}}, p);
    CHECK(keep.feasible);
    CHECK(keep.original_ids == std::vector<Vertex>{0, 1});
    CHECK(keep.reduced.source == VertexSet{0});
    CHECK(keep.reduced.target == VertexSet{1});

    auto no = isolated_token_check({g, 2, Rule::ts(), {0, 2}, {0, 3}}, p);
    CHECK_FALSE(no.feasible);
    CHECK_FALSE(solve({g, 2, Rule::ts(), {0, 2}, {0, 3}}).reachable);

    auto id = isolated_token_check({ladder(), 2, Rule::ts(), {0}, {1}}, *split_partition(ladder()));
    CHECK(id.reduced.graph == ladder());
    CHECK(id.original_ids == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("solve matches the oracle on random split graphs, including disconnected ones") {
    std::mt19937_64 rng(21);
    int yes = 0, no = 0;
    for (int round = 0; round < 3000; ++round) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        Graph g = brute::random_split(rng, n, k, round % 2 ? 0.3 : 0.6);
        const int c = 2 + static_cast<int>(rng() % 2);
        const int size = 1 + static_cast<int>(rng() % std::min(n - 1, 4));
        ReconfigInstance inst{g, c, Rule::ts(), brute::random_subset(rng, n, size), brute::random_subset(rng, n, size)};
        if (!chromatic_leq(g, inst.source, c) || !chromatic_leq(g, inst.target, c)) continue;
        auto got = solve(inst);
        const bool want = reconfig_oracle(inst).reachable;
        REQUIRE(got.reachable == want);
        if (want) {
            REQUIRE(validate_sequence(inst, *got.witness));
            ++yes;
        } else {
            ++no;
        }
    }
    CHECK(yes > 200);
    CHECK(no > 50);
}

TEST_CASE("parallel bridge scan returns the same witness") {
    std::mt19937_64 rng(44);
    int compared = 0;
    for (int round = 0; round < 300; ++round) {
        const int n = 10 + static_cast<int>(rng() % 6);
        Graph g = brute::random_split(rng, n, 5, 0.4);
        ReconfigInstance inst{g, 2, Rule::ts(), brute::random_subset(rng, n, 3), brute::random_subset(rng, n, 3)};
        if (!chromatic_leq(g, inst.source, 2) || !chromatic_leq(g, inst.target, 2)) continue;
        auto one = solve(inst, {1});
        auto four = solve(inst, {4});
        REQUIRE(one.reachable == four.reachable);
        if (four.reachable) CHECK(validate_sequence(inst, *four.witness));
        auto again = solve(inst, {4});
        CHECK(again.witness == four.witness);
        ++compared;
    }
    CHECK(compared > 50);
}
