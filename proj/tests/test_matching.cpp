#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "pcpoly/clique.hpp"
#include "pcpoly/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace pcpoly;

namespace {

IntPoly P(std::vector<long> c) {
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(v);
}

IntPoly shift_up(const IntPoly& p) { return IntPoly::monomial(Int(1), 1) * p; }

// matchings by scanning edge subsets
std::vector<Int> brute_matchings(const Graph& g) {
    auto e = g.edges();
    std::vector<Int> m(g.n / 2 + 1, Int(0));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << e.size()); ++s) {
        Mask used = 0;
        bool ok = true;
        for (std::size_t i = 0; i < e.size() && ok; ++i)
            if ((s >> i) & 1) {
                Mask b = bit(e[i].first) | bit(e[i].second);
                ok = !(used & b);
                used |= b;
            }
        if (ok) m[__builtin_popcountll(s)] += 1;
    }
    while (m.size() > 1 && m.back() == 0) m.pop_back();
    return m;
}

// set partitions into cliques by restricted growth strings
std::vector<Int> brute_adjoint(const Graph& g) {
    std::vector<Int> a(g.n + 1, Int(0));
    std::vector<int> label(g.n, 0);
    std::function<void(int, int)> go = [&](int v, int blocks) {
        if (v == g.n) {
            for (int i = 0; i < g.n; ++i)
                for (int j = i + 1; j < g.n; ++j)
                    if (label[i] == label[j] && !g.has_edge(i, j)) return;
            a[blocks] += 1;
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[v] = b;
            go(v + 1, std::max(blocks, b + 1));
        }
    };
    go(0, 0);
    return a;
}

// the polynomial whose largest root is t^2: sum (-1)^k m_k y^(nu-k)
IntPoly squared_form(const IntPoly& M) {
    int nu = M.degree();
    std::vector<Int> c(nu + 1);
    for (int k = 0; k <= nu; ++k) c[nu - k] = (k % 2) ? Int(-M.c[k]) : M.c[k];
    return IntPoly(c);
}

Int fact(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binom(int n, int k) { return fact(n) / (fact(k) * fact(n - k)); }

} // namespace

TEST_CASE("matching polynomial examples") {
    CHECK(matching_polynomials(complete_graph(4)).mu == P({3, 0, -6, 0, 1}));
    CHECK(matching_polynomials(cycle_graph(4)).mu == P({2, 0, -4, 0, 1}));
    CHECK(matching_polynomials(complete_multipartite({2, 2})).mu == P({2, 0, -4, 0, 1}));
    MatchingPair k2 = matching_polynomials(complete_graph(2));
    CHECK(k2.M == P({1, 1}));
    CHECK(t_largest(complete_graph(2)).contains(Rat(1)));
    CHECK_THROWS_AS(t_largest(empty_graph(3)), GraphError);

    std::mt19937_64 rng(8);
    for (int t = 0; t < 60; ++t) {
        Graph g = oracle::random_graph(rng, 1 + t % 6, 0.5);
        MatchingPair mp = matching_polynomials(g);
        CHECK(mp.M == IntPoly(brute_matchings(g)));
        // mu(x) = x^n M(-1/x^2)
        for (int k = 0; k <= mp.M.degree(); ++k) {
            Int c = mp.mu.c[g.n - 2 * k];
            CHECK(c == ((k % 2) ? Int(-mp.M.c[k]) : mp.M.c[k]));
        }
        CHECK(mp.M.c[0] == 1);
        if (mp.M.degree() >= 1) CHECK(mp.M.c[1] == g.num_edges());
    }
}

TEST_CASE("classical orthogonal polynomial identities") {
    // He_(n+1) = x He_n - n He_(n-1)
    IntPoly he0 = P({1}), he1 = P({0, 1});
    // 2 T_n(x/2): C_(n+1) = x C_n - C_(n-1), C_0 = 2
    IntPoly c0 = P({2}), c1 = P({0, 1});
    // U_n(x/2): same recurrence, S_0 = 1
    IntPoly s0 = P({1}), s1 = P({0, 1});
    for (int n = 1; n <= 6; ++n) {
        CHECK(matching_polynomials(complete_graph(n)).mu == he1);
        CHECK(matching_polynomials(path_graph(n)).mu == s1);
        if (n >= 3) CHECK(matching_polynomials(cycle_graph(n)).mu == c1);
        IntPoly he2 = shift_up(he1) - Int(n) * he0, c2 = shift_up(c1) - c0, s2 = shift_up(s1) - s0;
        he0 = he1, he1 = he2, c0 = c1, c1 = c2, s0 = s1, s1 = s2;
    }
    // K_(n,n): (-1)^n n! L_n(x^2)
    for (int n = 1; n <= 3; ++n) {
        std::vector<Int> c(2 * n + 1, Int(0));
        for (int k = 0; k <= n; ++k) {
            Int v = binom(n, k) * fact(n) / fact(k);
            c[2 * k] = ((n - k) % 2) ? Int(-v) : v;
        }
        CHECK(matching_polynomials(complete_multipartite({n, n})).mu == IntPoly(c));
    }
}

TEST_CASE("real roots and the degree sandwich, all graphs n <= 7") {
    std::set<std::vector<Int>> mus;
    std::map<std::tuple<std::vector<Int>, int, int, int>, bool> sandwich;
    for (int n = 1; n <= 7; ++n)
        oracle::for_each_graph(n, [&](const Graph& g) {
            MatchingPair mp = matching_polynomials(g);
            mus.insert(mp.mu.c);
            int delta = g.max_degree();
            if (delta >= 1) sandwich.emplace(std::make_tuple(mp.M.c, delta, g.num_edges(), n), true);
        });
    int nonreal = 0;
    for (auto& c : mus) nonreal += count_nonreal_roots(IntPoly(c)) != 0;
    CHECK(nonreal == 0);
    MESSAGE(mus.size() << " distinct matching polynomials, all real-rooted");

    for (auto& [key, unused] : sandwich) {
        auto& [mc, delta, k, n] = key;
        IntPoly sq = squared_form(IntPoly(mc));
        RootEnclosure t2 = dominant_real_root(sq);
        Order lower = compare_root_rational(sq, t2, Rat(delta));
        CHECK((lower == Order::greater || lower == Order::equal));
        if (delta > 1) {
            Order upper = compare_root_rational(sq, t2, Rat(4 * (delta - 1)));
            CHECK((upper == Order::less || upper == Order::equal));
        }
        Order avg = compare_root_rational(sq, t2, Rat(4 * k, n) - 1);
        CHECK((avg == Order::greater || avg == Order::equal));
    }
}

TEST_CASE("claw-free graphs have real-rooted independence polynomials") {
    std::set<std::vector<unsigned long>> seen;
    for (int n = 1; n <= 7; ++n)
        oracle::for_each_graph(n, [&](const Graph& g) {
            if (!is_claw_free(g)) return;
            CliqueProfile p = clique_profile(complement(g));
            if (seen.insert(p.counts).second) CHECK(count_nonreal_roots(clique_polynomial(p)) == 0);
        });
    MESSAGE(seen.size() << " distinct independence polynomials of claw-free graphs");
}

TEST_CASE("adjoint polynomial") {
    CHECK(adjoint_polynomial(complete_graph(3)) == P({0, 1, -3, 1}));
    CHECK(clique_partition_counts(complete_graph(3)) == std::vector<Int>{0, 1, 3, 1});
    for (int n = 1; n <= 5; ++n) CHECK(adjoint_polynomial(empty_graph(n)) == IntPoly::monomial(Int(1), n));

    // the rule taken literally (k in {i, j} or j = l and ik missing) loses the
    // case where one edge ends at the other's lower endpoint; P3 shows it
    Graph p3 = path_graph(3);
    Graph h = hat_graph(p3);
    CHECK(h.n == 2);
    CHECK(h.has_edge(0, 1));

    long graphs = 0;
    for (int n = 1; n <= 6; ++n)
        oracle::for_each_graph(n, [&](const Graph& g) {
            ++graphs;
            std::vector<Int> a = brute_adjoint(g);
            CHECK(clique_partition_counts(g) == a);
            IntPoly hpoly = adjoint_polynomial(g);  // throws if the identity fails
            for (int k = 0; k <= n; ++k) {
                Int c = k < (int)hpoly.c.size() ? hpoly.c[k] : Int(0);
                CHECK(c == (((n - k) % 2) ? Int(-a[k]) : a[k]));
            }
            // spanning subgraph of the line graph: adjacent vertices share an endpoint
            Graph hg = hat_graph(g);
            auto e = g.edges();
            for (auto [x, y] : hg.edges()) {
                bool share = e[x].first == e[y].first || e[x].first == e[y].second || e[x].second == e[y].first ||
                             e[x].second == e[y].second;
                CHECK(share);
            }
        });
    MESSAGE(graphs << " graphs checked");
}

TEST_CASE("adjoint root: dominance and gamma <= t^2, n <= 6") {
    std::map<std::pair<std::vector<Int>, std::vector<Int>>, bool> seen;
    for (int n = 2; n <= 6; ++n)
        oracle::for_each_graph(n, [&](const Graph& g) {
            if (g.num_edges() == 0) return;
            seen.emplace(std::make_pair(adjoint_polynomial(g).c, matching_polynomials(g).M.c), true);
        });
    int dominant = 0;
    for (auto& [key, unused] : seen) {
        IntPoly h(key.first), sq = squared_form(IntPoly(key.second));
        RootEnclosure gamma = dominant_real_root(h), t2 = dominant_real_root(sq);
        Order o = compare_roots(h, gamma, sq, t2);
        CHECK((o == Order::less || o == Order::equal));
        // strip the x^low factor and compare moduli numerically
        std::vector<Int> c(h.c.begin(), h.c.end());
        while (!c.empty() && c.front() == 0) c.erase(c.begin());
        // repeated factors come from disconnected graphs; compare distinct roots
        IntPoly core = squarefree_part(IntPoly(c));
        if (core.degree() >= 1) {
            auto roots = oracle::numeric_roots(core);
            std::sort(roots.begin(), roots.end(), [](auto x, auto y) { return std::abs(x) > std::abs(y); });
            CHECK(std::abs(roots[0].imag()) < 1e-9L);
            CHECK(std::abs((long double)gamma.approx() - roots[0].real()) < 1e-9L);
            if (roots.size() > 1) CHECK(std::abs(roots[1]) < std::abs(roots[0]) * (1 - 1e-9L));
            ++dominant;
        }
    }
    MESSAGE(seen.size() << " distinct (h, M) pairs; dominance checked on " << dominant);
}
