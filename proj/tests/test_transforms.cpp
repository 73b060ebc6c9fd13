#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "pcpoly/clique.hpp"
#include "pcpoly/transforms.hpp"

#include <map>
#include <set>

using namespace pcpoly;

namespace {

std::uint64_t total_cliques(const Graph& g) {
    std::uint64_t s = 0;
    for (auto c : oracle::subset_clique_counts(g)) s += c;
    return s;
}

Order compare_beta(const Graph& a, const Graph& b) {
    IntPoly pa = pc_polynomial(clique_profile(a)), pb = pc_polynomial(clique_profile(b));
    return compare_roots(pa, dominant_real_root(pa), pb, dominant_real_root(pb));
}

std::string ones(int k) { return std::string(k, '1'); }

// Threshold check by forbidden induced subgraphs 2K2, P4, C4.
bool threshold_by_forbidden(const Graph& g) {
    for (Mask s = 0; s < (Mask{1} << g.n); ++s) {
        if (popcount(s) != 4) continue;
        Graph h = induced_subgraph(g, s);
        int e = h.num_edges();
        std::vector<int> deg;
        for (int v = 0; v < 4; ++v) deg.push_back(h.degree(v));
        std::sort(deg.begin(), deg.end());
        if (e == 2 && deg == std::vector<int>{1, 1, 1, 1}) return false;
        if (e == 3 && deg == std::vector<int>{1, 1, 2, 2}) return false;
        if (e == 4 && deg == std::vector<int>{2, 2, 2, 2}) return false;
    }
    return true;
}

Graph swap_labels(const Graph& g, int a, int b) {
    Graph h(g.n);
    auto f = [&](int z) { return z == a ? b : (z == b ? a : z); };
    for (auto [x, y] : g.edges()) h.add_edge(f(x), f(y));
    return h;
}

bool complement_connected(const Graph& g) { return is_connected(complement(g)); }

} // namespace

TEST_CASE("Kelmans transformation examples") {
    Graph p4 = path_graph(4);
    Graph k = kelmans(p4, 1, 2);
    CHECK(k.num_edges() == 3);
    CHECK(k.degree(1) == 3);
    CHECK(is_forest(k));
    // N(v) inside N[u]: nothing moves
    Graph g = complete_graph(4);
    g.remove_edge(2, 3);
    CHECK(kelmans(g, 0, 3) == g);
    CHECK_THROWS_AS(kelmans(p4, 1, 1), GraphError);
    CHECK(!is_nontrivial_kelmans(empty_graph(5), 0, 3));
    CHECK(!is_nontrivial_kelmans(cycle_graph(4), 0, 2));
    CHECK(is_nontrivial_kelmans(cycle_graph(5), 0, 2));
}

TEST_CASE("Kelmans never lowers clique counts") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        Graph g = oracle::random_graph(rng, 2 + i % 11, 0.5);
        int u = static_cast<int>(rng() % g.n), v = static_cast<int>(rng() % g.n);
        if (u == v) v = (v + 1) % g.n;
        Graph h = kelmans(g, u, v);
        h.validate();
        REQUIRE(h.num_edges() == g.num_edges());
        auto a = clique_profile(g), b = clique_profile(h);
        for (int j = 0; j <= std::max(a.omega(), b.omega()); ++j) REQUIRE(b[j] >= a[j]);
    }
}

TEST_CASE("nontriviality test agrees with total clique counts for n <= 6") {
    for (int n = 2; n <= 6; ++n)
        oracle::for_each_graph(n, [&](const Graph& g) {
            std::uint64_t before = total_cliques(g);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    Graph h = kelmans(g, u, v);
                    REQUIRE(is_nontrivial_kelmans(g, u, v) == (total_cliques(h) > before));
                    // exact with the roles of u and v exchanged; same order only up to relabelling
                    REQUIRE(complement(h) == kelmans(complement(g), v, u));
                    REQUIRE(complement(h) == swap_labels(kelmans(complement(g), u, v), u, v));
                }
        });
}

TEST_CASE("nontrivial Kelmans strictly raises beta when the complement is connected (n <= 6)") {
    std::set<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> done;
    int strict = 0;
    for (int n = 2; n <= 6; ++n)
        oracle::for_each_graph(n, [&](const Graph& g) {
            if (!complement_connected(g)) return;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v || !is_nontrivial_kelmans(g, u, v)) continue;
                    Graph h = kelmans(g, u, v);
                    if (!done.insert({clique_profile(g).counts, clique_profile(h).counts}).second) continue;
                    REQUIRE(compare_beta(h, g) == Order::greater);
                    ++strict;
                }
        });
    CHECK(strict > 0);
}

TEST_CASE("moving a triangle edge to a pair without common neighbours lowers beta (n <= 6)") {
    std::set<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> done;
    int moves = 0;
    for (int n = 4; n <= 6; ++n)
        oracle::for_each_graph(n, [&](const Graph& g) {
            if (!complement_connected(g)) return;
            for (auto [x, y] : g.edges()) {
                if (!(g.adj[x] & g.adj[y])) continue;  // not in a triangle
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b) {
                        if (g.has_edge(a, b) || (g.adj[a] & g.adj[b])) continue;
                        Graph h = g;
                        h.remove_edge(x, y);
                        h.add_edge(a, b);
                        if (!done.insert({clique_profile(g).counts, clique_profile(h).counts}).second) continue;
                        REQUIRE(compare_beta(h, g) == Order::less);
                        ++moves;
                    }
            }
        });
    CHECK(moves > 0);
}

TEST_CASE("threshold recognition: peeling, degrees and forbidden subgraphs agree") {
    for (int n = 1; n <= 6; ++n)
        oracle::for_each_graph(n, [&](const Graph& g) {
            auto t = threshold_vector(g);
            bool by_deg = is_threshold_by_degrees(g);
            REQUIRE(t.has_value() == by_deg);
            REQUIRE(by_deg == threshold_by_forbidden(g));
            if (t) {
                // decoding the vector reproduces g under the recorded relabelling
                Graph d = threshold_from_bits(t->bits);
                REQUIRE(d.n == n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) REQUIRE(d.has_edge(i, j) == g.has_edge(t->order[i], t->order[j]));
            }
        });
}

TEST_CASE("reduction to a threshold graph") {
    Graph thr = threshold_from_bits("10110");
    CHECK(reduce_to_threshold(thr).steps.empty());
    auto c4 = reduce_to_threshold(cycle_graph(4));
    CHECK(c4.result.num_edges() == 4);
    CHECK(is_threshold(c4.result));
    for (int n = 1; n <= 6; ++n)
        oracle::for_each_graph(n, [&](const Graph& g) {
            auto r = reduce_to_threshold(g);
            Graph cur = g;
            for (auto s : r.steps) {
                Graph next = kelmans(cur, s.u, s.v);
                REQUIRE(next.num_edges() == cur.num_edges());
                Order o = compare_beta(next, cur);
                REQUIRE((o == Order::greater || o == Order::equal));
                cur = next;
            }
            REQUIRE(cur == r.result);
            REQUIRE(is_threshold_by_degrees(cur));
        });
}

TEST_CASE("isolating transformation") {
    // thr(1^(d-e), 0, 1^(e-1), 0, 1, 0...) has C(d+1,2) + e + 1 edges and lands on
    // the maximal construction for that count, thr(1^(d-e-1), 0, 1^(e+1), 0...)
    for (int d = 3; d <= 6; ++d)
        for (int e = 2; e < d; ++e)
            for (int tail = 0; tail <= 2; ++tail) {
                std::string hb = ones(d - e) + "0" + ones(e - 1) + "01" + std::string(tail, '0');
                std::string gb = ones(d - e - 1) + "0" + ones(e + 1) + "0" + std::string(tail, '0');
                Graph h = threshold_from_bits(hb);
                int s = d + 1;  // rightmost zero followed by a one, as a vertex index
                Mask part1 = low_mask(s + 2);
                Graph out = isolating(h, s, part1);
                CHECK(out.num_edges() == h.num_edges());
                CHECK(h.num_edges() == (d + 1) * d / 2 + e + 1);
                auto tv = threshold_vector(out);
                REQUIRE(tv.has_value());
                CHECK(tv->bits == gb);
                CHECK(compare_beta(out, h) == Order::greater);
            }
    // precondition errors
    Graph p = path_graph(4);
    CHECK_THROWS_AS(isolating(p, 1, p.all()), GraphError);                // degree 2 inside
    CHECK_THROWS_AS(isolating(path_graph(3), 0, low_mask(3)), GraphError);  // P3 minus an end is K2
    Graph mixed = path_graph(4);
    CHECK_THROWS_AS(isolating(mixed, 0, low_mask(3)), GraphError);  // vertex 3 sees only part of part1

    // random valid inputs
    std::mt19937_64 rng(23);
    int applied = 0;
    while (applied < 200) {
        int n1 = 3 + static_cast<int>(rng() % 4), n2 = static_cast<int>(rng() % 4);
        Graph g1 = oracle::random_graph(rng, n1, 0.5);
        // make vertex 0 hang off exactly one vertex of part1
        for (int v = 1; v < n1; ++v) g1.remove_edge(0, v);
        g1.add_edge(0, 1 + static_cast<int>(rng() % (n1 - 1)));
        Graph g2 = oracle::random_graph(rng, n2, 0.5);
        Graph g = graph_join_union(g1, g2, Combine::disjoint_union);
        for (int v = n1; v < n1 + n2; ++v)
            if (rng() & 1)
                for (int u = 0; u < n1; ++u) g.add_edge(u, v);
        Graph rest = induced_subgraph(g1, low_mask(n1) & ~Mask{1});
        if (rest.num_edges() == (n1 - 1) * (n1 - 2) / 2) continue;
        Graph out = isolating(g, 0, low_mask(n1));
        out.validate();
        REQUIRE(out.num_edges() == g.num_edges());
        Order o = compare_beta(out, g);
        REQUIRE((o == Order::greater || o == Order::equal));
        ++applied;
    }
}
