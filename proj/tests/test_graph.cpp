#include "helpers.hpp"
#include "oracles.hpp"

#include "reconf/errors.hpp"
#include "reconf/graph.hpp"

#include <doctest.h>

using namespace reconf;

TEST_CASE("graph construction normalizes and rejects bad edges") {
    Graph g = make_graph(3, {{2, 1}, {0, 1}});
    CHECK(g.num_edges() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{1, 2});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK_THROWS_AS(make_graph(3, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), PreconditionError);
}

TEST_CASE("split_partition examples") {
    auto tri = split_partition(make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
    REQUIRE(tri);
    CHECK(tri->clique == VertexSet{0, 1, 2});
    CHECK(tri->independent == VertexSet{3});

    CHECK_FALSE(split_partition(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));

    // Maximum clique side, lexicographically smallest: {0,1} beats {0}.
    auto star = split_partition(star3());
    REQUIRE(star);
    CHECK(star->clique == VertexSet{0, 1});
    CHECK(star->independent == VertexSet{2, 3});
    CHECK(is_split_partition(star3(), {{0}, {1, 2, 3}}));
}

TEST_CASE("split recognition agrees with brute force and with chordal/co-chordal on n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : brute::all_graphs(n)) {
            const bool split = brute::is_split(g);
            auto p = split_partition(g);
            REQUIRE(split == p.has_value());
            if (p) {
                CHECK(is_split_partition(g, *p));
                CHECK(static_cast<int>(p->clique.size()) == brute::max_clique(g));
            }
            const bool chordal = elimination_order(g).has_value();
            CHECK(chordal == brute::is_chordal(g));
            CHECK(split == (chordal && elimination_order(g.complement()).has_value()));
        }
}

TEST_CASE("elimination orders and clique numbers") {
    auto tri = elimination_order(complete(3));
    REQUIRE(tri);
    CHECK(is_perfect_elimination_order(complete(3), {{2, 0, 1}}));
    CHECK_FALSE(elimination_order(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));

    CHECK(clique_number_chordal(Graph(5), *elimination_order(Graph(5))) == 1);
    CHECK(clique_number_chordal(complete(4), *elimination_order(complete(4))) == 4);
    Graph pend = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(clique_number_chordal(pend, *elimination_order(pend)) == 3);

    Graph p4 = path(4);
    CHECK_THROWS_AS(clique_number_chordal(p4, {{1, 0, 2, 3}}), PreconditionError);
}

TEST_CASE("clique number matches brute force on chordal graphs, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : brute::all_graphs(n)) {
            auto ord = elimination_order(g);
            if (!ord) continue;
            CHECK(is_perfect_elimination_order(g, *ord));
            CHECK(clique_number_chordal(g, *ord) == brute::max_clique(g));
        }
}

TEST_CASE("chromatic_leq examples") {
    CHECK(chromatic_leq(complete(4), VertexSet{0, 1, 2}, 3));
    CHECK_FALSE(chromatic_leq(complete(3), VertexSet{0, 1, 2}, 2));
    CHECK(chromatic_leq(star3(), VertexSet{0, 2}, 2));
    CHECK_FALSE(chromatic_leq(star3(), VertexSet{0, 2}, 1));
    // C5 is not 2-colorable and not chordal.
    Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK_FALSE(chromatic_leq(c5, VertexSet{0, 1, 2, 3, 4}, 2));
    CHECK(chromatic_leq(c5, VertexSet{0, 1, 2, 3, 4}, 3));
}

TEST_CASE("chromatic_leq and the cached checker agree with backtracking, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : brute::all_graphs(n)) {
            ColorabilityChecker checker(g);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1u) s.push_back(v);
                for (int c = 1; c <= 3; ++c) {
                    const bool want = brute::colorable(g, s, c);
                    REQUIRE(chromatic_leq(g, s, c) == want);
                    REQUIRE(checker(s, c) == want);
                    REQUIRE(colorable_exhaustive(g, s, c) == want);
                }
            }
        }
}

TEST_CASE("connected components") {
    CHECK(connected_components(path(3)) == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(connected_components(make_graph(4, {{0, 1}, {2, 3}})) == std::vector<VertexSet>{{0, 1}, {2, 3}});
    CHECK(connected_components(Graph(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
}

TEST_CASE("induced subgraph and complement") {
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph h = g.induced(VertexSet{1, 2, 3});
    CHECK(h.num_vertices() == 3);
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.complement().num_edges() == 3);
    CHECK(g.complement().complement() == g);
    CHECK(is_independent(g, VertexSet{0, 2}));
    CHECK(is_clique(g, VertexSet{1, 2}));
}
