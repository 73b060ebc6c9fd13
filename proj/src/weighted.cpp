#include "pcpoly/weighted.hpp"
#include "pcpoly/clique.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pcpoly {

WeightedGraph WeightedGraph::from_graph(const Graph& g, std::vector<Rat> alpha, std::vector<Rat> d) {
    WeightedGraph w;
    w.n = g.n;
    w.adj.assign(g.n, std::vector<char>(g.n, 0));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) w.adj[i][j] = g.has_edge(i, j);
    w.alpha = std::move(alpha);
    w.d = std::move(d);
    w.validate();
    return w;
}

WeightedGraph WeightedGraph::unit(const Graph& g) {
    return from_graph(g, std::vector<Rat>(g.n, Rat(1)), std::vector<Rat>(g.n, Rat(1)));
}

void WeightedGraph::validate() const {
    if (static_cast<int>(adj.size()) != n || static_cast<int>(alpha.size()) != n || static_cast<int>(d.size()) != n)
        throw GraphError("weighted graph: size mismatch");
    for (int i = 0; i < n; ++i) {
        if (alpha[i] <= 0 || d[i] <= 0) throw GraphError("weighted graph: weights must be positive");
        if (adj[i][i]) throw GraphError("weighted graph: loop");
        for (int j = 0; j < n; ++j)
            if (adj[i][j] != adj[j][i]) throw GraphError("weighted graph: asymmetric adjacency");
    }
}

FractionalPoly weighted_dependence(const WeightedGraph& g) {
    g.validate();
    FractionalPoly out;
    Int L = 1;
    for (auto& x : g.d) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den_mpz_t());
    out.L = L.get_si();
    std::vector<long> e(g.n);
    for (int v = 0; v < g.n; ++v) e[v] = Rat(g.d[v] * out.L).get_num().get_si();

    std::map<long, Rat> acc;
    acc[0] = 1;
    std::function<void(const std::vector<int>&, int, const Rat&, long)> grow =
        [&](const std::vector<int>& cand, int size, const Rat& w, long deg) {
            for (std::size_t i = 0; i < cand.size(); ++i) {
                int v = cand[i];
                Rat w2 = w * g.alpha[v];
                long deg2 = deg + e[v];
                acc[deg2] += (size % 2 == 0) ? Rat(-w2) : w2;
                std::vector<int> next;
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    if (g.adj[v][cand[j]]) next.push_back(cand[j]);
                grow(next, size + 1, w2, deg2);
            }
        };
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    grow(all, 0, Rat(1), 0);

    std::vector<Rat> c(acc.rbegin()->first + 1, Rat(0));
    for (auto& [k, v] : acc) c[k] = v;
    out.poly = RatPoly(c);
    return out;
}

RatPoly det_identity_minus_xm(const RatMatrix& m) {
    int n = static_cast<int>(m.size());
    std::vector<Rat> xs, ys;
    for (int t = 0; t <= n; ++t) {
        RatMatrix a(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = (i == j ? Rat(1) : Rat(0)) - Rat(t) * m[i][j];
        Rat det = 1;
        for (int col = 0; col < n; ++col) {
            int piv = col;
            while (piv < n && a[piv][col] == 0) ++piv;
            if (piv == n) {
                det = 0;
                break;
            }
            if (piv != col) {
                std::swap(a[piv], a[col]);
                det = -det;
            }
            det *= a[col][col];
            for (int r = col + 1; r < n; ++r) {
                Rat f = a[r][col] / a[col][col];
                for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            }
        }
        xs.push_back(t);
        ys.push_back(det);
    }
    // Lagrange interpolation
    RatPoly out(std::vector<Rat>{Rat(0)});
    for (int i = 0; i <= n; ++i) {
        RatPoly basis(std::vector<Rat>{Rat(1)});
        Rat denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            basis = basis * RatPoly(std::vector<Rat>{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        out = out + Rat(ys[i] / denom) * basis;
    }
    return out;
}

WeightedGraph matrix_to_weighted_graph(const RatMatrix& m) {
    int n = static_cast<int>(m.size());
    if (n == 0 || n > 8) throw GraphError("matrix order must be between 1 and 8");
    for (auto& row : m) {
        if (static_cast<int>(row.size()) != n) throw GraphError("matrix must be square");
        for (auto& x : row)
            if (x < 0) throw GraphError("matrix entries must be nonnegative");
    }
    struct Cycle {
        unsigned support;
        Rat weight;
        int length;
    };
    std::vector<Cycle> cycles;
    // cycles rooted at their smallest vertex
    std::function<void(int, int, unsigned, const Rat&)> walk = [&](int start, int v, unsigned used, const Rat& w) {
        for (int u = start; u < n; ++u) {
            if (m[v][u] == 0) continue;
            if (u == start) {
                cycles.push_back({used, w * m[v][u], popcount(used)});
            } else if (!((used >> u) & 1)) {
                walk(start, u, used | (1u << u), w * m[v][u]);
            }
        }
    };
    for (int s = 0; s < n; ++s) walk(s, s, 1u << s, Rat(1));

    WeightedGraph g;
    g.n = static_cast<int>(cycles.size());
    g.adj.assign(g.n, std::vector<char>(g.n, 0));
    for (int i = 0; i < g.n; ++i) {
        g.alpha.push_back(cycles[i].weight);
        g.d.push_back(cycles[i].length);
        for (int j = 0; j < g.n; ++j)
            if (i != j && !(cycles[i].support & cycles[j].support)) g.adj[i][j] = 1;
    }
    RatPoly lhs = g.n ? weighted_dependence(g).poly : RatPoly(std::vector<Rat>{Rat(1)});
    if (!(lhs == det_identity_minus_xm(m))) throw std::logic_error("D_w of the cycle graph differs from det(E - xM)");
    return g;
}

RootEnclosure mcmullen_growth(const WeightedGraph& g, const Rat& width) {
    FractionalPoly fp = weighted_dependence(g);
    IntPoly f = squarefree_part(clear_denominators(fp.poly));
    std::optional<RootEnclosure> best;
    for (auto& r : isolate_real_roots(f, width))
        if (r.hi > 0 && (!best || r.lo < best->lo)) best = r;
    if (!best) throw PolyError("weighted dependence polynomial has no positive root");
    RootEnclosure s = *best;
    auto lam = [&](const Rat& x) {
        Rat p = 1;
        for (long i = 0; i < fp.L; ++i) p *= x;
        return Rat(1 / p);
    };
    while (s.lo <= 0) refine(f, s, s.width() / 4);
    RootEnclosure out{lam(s.hi), lam(s.lo), s.multiplicity};
    while (out.hi - out.lo > width) {
        refine(f, s, s.width() / 4);
        out = {lam(s.hi), lam(s.lo), s.multiplicity};
    }
    return out;
}

RootEnclosure lll_threshold(const Graph& g, const Rat& width) {
    RootEnclosure b = beta(complement(g), width);
    return {1 / b.hi, 1 / b.lo, 1};
}

RatPoly lll_polynomial(const Graph& g, const std::vector<Rat>& probs) {
    if (static_cast<int>(probs.size()) != g.n) throw GraphError("one probability per vertex");
    for (auto& p : probs)
        if (p < 0 || p >= 1) throw GraphError("probabilities must lie in [0, 1)");
    // zero-probability events never occur; drop them
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (probs[v] > 0) keep.push_back(v);
    if (keep.empty()) return RatPoly(std::vector<Rat>{Rat(1)});
    Graph h = complement(induced_subgraph(g, keep));
    std::vector<Rat> alpha;
    for (int v : keep) alpha.push_back(probs[v]);
    return weighted_dependence(WeightedGraph::from_graph(h, alpha, std::vector<Rat>(keep.size(), Rat(1)))).poly;
}

LLLResult lll_check(const Graph& g, const std::vector<Rat>& probs) {
    RatPoly poly = lll_polynomial(g, probs);
    LLLResult out;
    if (poly.degree() > 0) {
        IntPoly f = squarefree_part(clear_denominators(poly));
        bool one_is_root = sign_at(f, Rat(1)) == 0;
        for (auto& r : isolate_real_roots(f, default_width())) {
            RootEnclosure e = r;
            for (;;) {
                if (e.hi < 0 || e.lo > 1) break;
                if (e.lo >= 0 && e.hi <= 1) {
                    out.witness = e;
                    break;
                }
                if (one_is_root && e.contains(Rat(1))) {
                    out.witness = RootEnclosure{Rat(1), Rat(1), e.multiplicity};
                    break;
                }
                refine(f, e, e.width() / 4);
            }
            if (out.witness || e.lo > 1) break;
        }
    }
    if (!out.witness) {
        out.feasible = true;
        out.bound = eval(poly, Rat(1));
    }
    return out;
}

} // namespace pcpoly
