#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcpoly/graph.hpp"

#include <random>
#include <set>

using namespace pcpoly;

namespace {

// Independent graph6 reader: expand every data byte into six bits first,
// then walk the upper triangle column by column.
std::set<std::pair<int, int>> oracle_graph6_edges(const std::string& s, int& n) {
    n = s[0] - 63;
    std::string bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        int v = s[i] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back(((v >> b) & 1) ? '1' : '0');
    }
    std::set<std::pair<int, int>> e;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits.at(k++) == '1') e.insert({i, j});
    return e;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("named families") {
    Graph k3 = parse_graph("K3", GraphFormat::named);
    CHECK(k3.n == 3);
    CHECK(k3.num_edges() == 3);
    CHECK(parse_graph("Kbar4", GraphFormat::named).num_edges() == 0);
    Graph k23 = parse_graph("K{2,3}", GraphFormat::named);
    CHECK(k23.n == 5);
    CHECK(k23.num_edges() == 6);
    CHECK(parse_graph("K2,3", GraphFormat::named) == k23);
    CHECK(parse_graph("P4", GraphFormat::named).num_edges() == 3);
    CHECK(parse_graph("C5", GraphFormat::named).num_edges() == 5);
    Graph s = parse_graph("star4", GraphFormat::named);
    CHECK(s.n == 5);
    CHECK(s.degree(0) == 4);
    CHECK_THROWS_AS(parse_graph("Q7", GraphFormat::named), GraphError);
    CHECK_THROWS_AS(parse_graph("K65", GraphFormat::named), GraphError);
}

TEST_CASE("threshold vector decoding") {
    Graph t = parse_graph("thr101", GraphFormat::named);
    CHECK(t.n == 4);
    // vertex 1 dominating {0}; vertex 2 isolated; vertex 3 dominating {0,1,2}
    CHECK(t.has_edge(0, 1));
    CHECK(!t.has_edge(0, 2));
    CHECK(!t.has_edge(1, 2));
    CHECK(t.has_edge(3, 0));
    CHECK(t.has_edge(3, 1));
    CHECK(t.has_edge(3, 2));
    CHECK(t.num_edges() == 4);
}

TEST_CASE("graph6 decoding matches an independent reader") {
    for (std::string s : {"D?{", "DQc", "Dhc", "E?~o", "FCZbg", "Bw", "A_", "@"}) {
        int n = 0;
        auto expected = oracle_graph6_edges(s, n);
        Graph g = parse_graph(s, GraphFormat::graph6);
        CHECK(g.n == n);
        std::set<std::pair<int, int>> got;
        for (auto e : g.edges()) got.insert(e);
        CHECK(got == expected);
    }
    Graph d = parse_graph("D?{", GraphFormat::graph6);
    CHECK(d.degree(4) == 4);
    CHECK(d.num_edges() == 4);
    CHECK_THROWS_AS(parse_graph("D?", GraphFormat::graph6), GraphError);
}

TEST_CASE("graph6 round trip for every graph up to 5 vertices and samples up to 7") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << edge_slots(n)); ++m) {
            Graph g = graph_from_edge_mask(n, m);
            REQUIRE(parse_graph(to_graph6(g), GraphFormat::graph6) == g);
        }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        int n = 6 + i % 2;
        Graph g = graph_from_edge_mask(n, rng() & ((std::uint64_t{1} << edge_slots(n)) - 1));
        REQUIRE(parse_graph(to_graph6(g), GraphFormat::graph6) == g);
    }
    Graph big = complete_graph(64);
    CHECK(parse_graph(to_graph6(big), GraphFormat::graph6) == big);
}

TEST_CASE("edge list format") {
    Graph g = parse_graph("4; 0 1; 2 3; 1 2", GraphFormat::edge_list);
    CHECK(g.num_edges() == 3);
    CHECK(to_edge_list(g) == "4; 0 1; 1 2; 2 3");
    CHECK_THROWS_AS(parse_graph("3; 0 0", GraphFormat::edge_list), GraphError);
    CHECK_THROWS_AS(parse_graph("3; 0 1; 1 0", GraphFormat::edge_list), GraphError);
    CHECK_THROWS_AS(parse_graph("3; 0 5", GraphFormat::edge_list), GraphError);
    CHECK_THROWS_AS(parse_graph("65", GraphFormat::edge_list), GraphError);
    CHECK_THROWS_AS(parse_graph("3; 0 x", GraphFormat::edge_list), GraphError);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(3)) == empty_graph(3));
    Graph c5 = cycle_graph(5);
    Graph cc = complement(c5);
    CHECK(cc.num_edges() == 5);
    for (int v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
    CHECK(is_connected(cc));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng, 1 + i % 12, 0.4);
        Graph h = complement(g);
        h.validate();
        CHECK(complement(h) == g);
        CHECK(g.num_edges() + h.num_edges() == g.n * (g.n - 1) / 2);
    }
}

TEST_CASE("induced subgraphs") {
    CHECK(induced_subgraph(complete_graph(4), std::vector<int>{0, 1, 2}) == complete_graph(3));
    CHECK(induced_subgraph(cycle_graph(5), std::vector<int>{0, 1, 2}) == path_graph(3));
    Graph p = petersen_graph();
    CHECK(induced_subgraph(p, p.all()) == p);
    CHECK_THROWS_AS(induced_subgraph(p, Mask{0}), GraphError);
}

TEST_CASE("line graphs") {
    CHECK(line_graph(path_graph(3)) == complete_graph(2));
    CHECK(line_graph(complete_graph(3)) == complete_graph(3));
    CHECK(line_graph(star_graph(4)) == complete_graph(4));
    CHECK_THROWS_AS(line_graph(complete_graph(13)), GraphError);
    Graph lp = line_graph(petersen_graph());
    CHECK(lp.n == 15);
    for (int v = 0; v < 15; ++v) CHECK(lp.degree(v) == 4);
}

TEST_CASE("join and union") {
    Graph u = graph_join_union(complete_graph(2), complete_graph(2), Combine::disjoint_union);
    CHECK(u.n == 4);
    CHECK(u.num_edges() == 2);
    CHECK(graph_join_union(empty_graph(2), empty_graph(3), Combine::join) == complete_multipartite({2, 3}));
    Graph st = graph_join_union(empty_graph(1), empty_graph(4), Combine::join);
    CHECK(st == star_graph(4));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        Graph a = random_graph(rng, 1 + i % 7, 0.5), b = random_graph(rng, 1 + i % 5, 0.5);
        Graph j = graph_join_union(a, b, Combine::join);
        j.validate();
        CHECK(j.num_edges() == a.num_edges() + b.num_edges() + a.n * b.n);
    }
    CHECK_THROWS_AS(graph_join_union(complete_graph(40), complete_graph(30), Combine::join), GraphError);
}

TEST_CASE("structural predicates") {
    CHECK(is_forest(path_graph(6)));
    CHECK(!is_forest(cycle_graph(4)));
    CHECK(is_complete_multipartite(complete_multipartite({1, 2, 3})));
    CHECK(!is_complete_multipartite(path_graph(4)));
    CHECK(is_equal_multipartite(complete_multipartite({2, 2, 2})));
    CHECK(!is_equal_multipartite(complete_multipartite({2, 3})));
    CHECK(is_equal_multipartite(complete_graph(4)));
    CHECK(is_equal_multipartite(empty_graph(4)));
    CHECK(!is_claw_free(star_graph(3)));
    CHECK(is_claw_free(cycle_graph(6)));
    CHECK(is_triangle_free(cycle_graph(5)));
}

TEST_CASE("vertex order") {
    VertexOrder o = VertexOrder::standard(3);
    CHECK(o.greater(0, 1));
    CHECK(!o.greater(2, 1));
    VertexOrder r = VertexOrder::from_perm({2, 0, 1});
    CHECK(r.greater(2, 0));
    CHECK_THROWS_AS(VertexOrder::from_perm({0, 0, 1}), GraphError);
}
