#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "critposets/census.hpp"
#include "critposets/digraph.hpp"
#include "critposets/families.hpp"
#include "critposets/io.hpp"

using namespace critposets;

TEST_CASE("construction rejects loops and bad endpoints") {
    CHECK_THROWS_AS(Digraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), std::out_of_range);
    CHECK_THROWS_AS(VertexSet(4).add(4), std::out_of_range);
}

TEST_CASE("complement basics") {
    CHECK(complement(empty_graph(3)) == complete_graph(3));

    // the bull is self-complementary
    Graph bull = h_split(CompositionParams{1, 1});
    Graph cb = complement(bull);
    CHECK(cb.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 3}, {1, 4}, {2, 3}});
    CHECK(is_isomorphic(bull, cb));
}

TEST_CASE("complement and dual are involutions") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 10; ++n) {
        Graph g = random_graph(rng, n, 0.4);
        CHECK(complement(complement(g)) == g);
        Digraph d = random_digraph(rng, n, 0.4);
        CHECK(dual(dual(d)) == d);
    }
}

TEST_CASE("dual reverses arcs") {
    Poset o3 = total_order(3);
    CHECK(o3.digraph().arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(dual(o3).digraph().arcs() == std::vector<Arc>{{1, 0}, {2, 0}, {2, 1}});

    Poset r = r_split(1, 1);
    CHECK(is_isomorphic(dual(r).digraph(), r.digraph()));
}

TEST_CASE("induced subdigraph relabels ascending") {
    Digraph q4(4, {{0, 1}, {0, 3}, {2, 3}});
    CHECK(induced(q4, VertexSet::all(4)) == q4);
    CHECK(induced(q4, VertexSet::of(4, {0, 1, 3})) == Digraph(3, {{0, 1}, {0, 2}}));
    CHECK_THROWS_AS(induced(q4, VertexSet::all(5)), std::invalid_argument);

    Graph h = h_split(CompositionParams{1, 1, 1});
    CHECK(is_isomorphic(induced(h, VertexSet::of(7, {1, 2, 3, 4, 5, 6})), hammer_graphs().g1));
}

TEST_CASE("translate shifts labels") {
    Digraph q2(2, {{0, 1}});
    CHECK(translate(q2, 0) == q2.arcs());
    CHECK(translate(q2, 1) == std::vector<Arc>{{1, 2}});
    Graph g2p(2, {{0, 1}});
    CHECK(translate(g2p, 3) == std::vector<Edge>{{3, 4}});
}

TEST_CASE("is_transitive") {
    CHECK_FALSE(is_transitive(Digraph(3, {{0, 1}, {1, 2}})));
    CHECK(is_transitive(Digraph(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(is_transitive(Digraph(6, {{0, 1}, {0, 3}, {2, 3}, {5, 4}, {5, 1}, {5, 3}, {1, 3}})));
    // a two-cycle is not transitive (it would need a loop)
    CHECK_FALSE(is_transitive(Digraph(2, {{0, 1}, {1, 0}})));
}

TEST_CASE("poset construction rejects exactly the non-transitive digraphs") {
    CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Digraph d = random_digraph(rng, 2 + int(i % 6), 0.3);
        if (is_transitive(d)) {
            CHECK(is_transitive(Poset(d).digraph()));
        } else {
            CHECK_THROWS_AS(Poset(d), std::invalid_argument);
        }
    }
}

TEST_CASE("comparability graph") {
    CHECK(comparability_graph(q2n(2)) == Graph(4, {{0, 1}, {0, 3}, {2, 3}}));
    for (int n = 2; n <= 5; ++n) CHECK(comparability_graph(total_order(n)) == complete_graph(n));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Digraph d = random_digraph(rng, 2 + int(i % 8), 0.4);
        CHECK(comparability_graph(dual(d)) == comparability_graph(d));
    }
}

TEST_CASE("named small objects") {
    CHECK(oriented_p4().digraph().arcs() == std::vector<Arc>{{0, 1}, {2, 1}, {2, 3}});
    CHECK(path_p4().edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(cycle_c5().edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(complete_graph(3).edge_count() == 3);
    CHECK(empty_graph(4).edge_count() == 0);
    CHECK_THROWS_AS(total_order(0), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    Digraph d = q_composite(CompositionParams{1, 1, 1}).digraph();
    std::string text = to_edge_list(d);
    auto back = parse_edge_list(text);
    CHECK(std::get<Digraph>(back) == d);
    CHECK(to_edge_list(back) == text);  // emit . parse = identity on normalized text

    Graph g = h_split(CompositionParams{2, 1});
    CHECK(std::get<Graph>(parse_edge_list(to_edge_list(g))) == g);
}

TEST_CASE("edge list accepts comments and blank lines") {
    auto v = parse_edge_list("# a comment\n\ndigraph n=3\n0 1\n# another\n1 2\n");
    CHECK(std::get<Digraph>(v) == Digraph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("edge list rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n"), ParseError);             // no header
    CHECK_THROWS_AS(parse_edge_list("tournament n=3\n"), ParseError);  // bad kind
    CHECK_THROWS_AS(parse_edge_list("graph n=x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("graph n=3\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("graph n=3\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("graph n=3\n0 3\n"), ParseError);  // out of range
    CHECK_THROWS_AS(parse_edge_list("digraph n=3\n1 1\n"), ParseError);
}

TEST_CASE("dot export") {
    CHECK(to_dot(Digraph(2, {{1, 0}})) == "digraph D {\n  0;\n  1;\n  1 -> 0;\n}\n");
    CHECK(to_dot(Graph(2, {{0, 1}})) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
}
