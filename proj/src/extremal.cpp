#include "pcpoly/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>

namespace pcpoly {

namespace {

long pairs(long x) { return x * (x - 1) / 2; }

void check_range(int n, long k) {
    if (n < 1 || n > kMaxVertices) throw GraphError("vertex count out of range");
    if (k < 0 || k > pairs(n)) throw GraphError("edge count must lie in [0, C(n,2)]");
}

IntPoly x_minus_one() { return IntPoly::from_descending({1, -1}); }

// Triangle-free graph on the block [first, first+m) with e <= m^2/4 edges,
// drawn inside the complete bipartite graph between its two halves.
void fill_triangle_free(Graph& g, int first, int m, long e) {
    int a = (m + 1) / 2;
    for (int i = 0; i < a && e > 0; ++i)
        for (int j = a; j < m && e > 0; ++j, --e) g.add_edge(first + i, first + j);
    if (e > 0) throw GraphError("too many edges for a triangle-free block");
}

Surd triangle_free_beta(long m, long e) { return Surd{Rat(m), Rat(m * m - 4 * e), Rat(2)}; }

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal check failed: ") + what);
}

} // namespace

std::string BetaValue::to_string(int digits) const {
    if (closed) return closed->to_string() + " ~ " + decimal_string(root.midpoint(), digits);
    return "[" + decimal_string(root.lo, digits) + ", " + decimal_string(root.hi, digits) + "]";
}

BetaValue beta_value_of(const Surd& s) {
    BetaValue v;
    v.closed = s;
    v.poly = s.quadratic();
    v.root = enclose(s, default_width());
    return v;
}

BetaValue beta_value_of(const IntPoly& p, const Rat& width) {
    BetaValue v;
    v.poly = p;
    v.root = dominant_real_root(p, width);
    if (p.degree() == 1) {
        v.closed = Surd{Rat(-p.c[0], p.c[1]), Rat(0), Rat(1)};
        v.closed->a.canonicalize();
    } else if (p.degree() == 2) {
        Rat a(p.c[2]), b(p.c[1]), c(p.c[0]);
        v.closed = Surd{-b, b * b - 4 * a * c, 2 * a};
    }
    return v;
}

IntPoly max_construction_polynomial(int n, long k) {
    check_range(n, k);
    long d = 1;
    while (pairs(d + 1) <= k) ++d;
    long e = k - pairs(d);
    IntPoly p = power(x_minus_one(), static_cast<int>(d));
    p = p - IntPoly::monomial(Int(n - d - 1), static_cast<int>(d - 1));
    p = p - IntPoly::monomial(Int(1), static_cast<int>(d - e - 1)) * power(x_minus_one(), static_cast<int>(e));
    return p;
}

ExtremalResult max_beta_graph(int n, long k) {
    check_range(n, k);
    long d = 1;
    while (pairs(d + 1) <= k) ++d;
    long e = k - pairs(d);
    Graph g(n);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) g.add_edge(i, j);
    for (int i = 0; i < e; ++i) g.add_edge(static_cast<int>(d), i);
    IntPoly pc = pc_polynomial(clique_profile(g));
    require(pc == max_construction_polynomial(n, k), "symbolic PC of the max construction");
    ExtremalResult r;
    r.graph = g;
    r.predicted_beta = beta_value_of(pc);
    r.bound_kind = BoundKind::max;
    return r;
}

int clique_bound_index(int n, long k) {
    check_range(n, k);
    if (k == 0) return 1;
    long w = 2;
    while (2 * k * w > static_cast<long>(n) * n * (w - 1)) ++w;
    return static_cast<int>(w);
}

std::optional<Surd> min_beta_formula(int n, long k) {
    check_range(n, k);
    long nn = static_cast<long>(n) * n;
    if (4 * k <= nn) return triangle_free_beta(n, k);
    long w = clique_bound_index(n, k);
    long l = n / (w - 1), p = n - l * (w - 1), q = w - 1 - p;
    if (k < pairs(w - 1) * l * l + p * l * (w - 1)) {
        if (p == 0) return std::nullopt;
        long base = pairs(p) * (l + 1) * (l + 1) + pairs(q) * l * l + p * q * l * (l + 1);
        long e = (k - base) / p;
        if (k < base || 4 * e > (l + 1) * (l + 1)) return std::nullopt;
        return triangle_free_beta(l + 1, e);
    }
    auto full = [&](long n1) { return (w - 1) * n1 * n - pairs(w) * n1 * n1; };
    for (long n1 = (n + w - 1) / w; n1 * (w - 1) <= n; ++n1) {
        if (full(n1) > k) continue;
        long e = (k - full(n1)) / (w - 1);
        if (4 * e > n1 * n1) return std::nullopt;
        return triangle_free_beta(n1, e);
    }
    return std::nullopt;
}

ExtremalResult min_beta_graph(int n, long k) {
    check_range(n, k);
    long nn = static_cast<long>(n) * n;
    std::vector<int> best_parts;
    std::vector<long> best_edges;
    std::optional<Surd> best;

    if (4 * k <= nn) {
        best_parts = {n};
        best_edges = {k};
        best = triangle_free_beta(n, k);
    } else {
        // complete multipartite skeleton, the rest spread over triangle-free
        // blocks so that the largest block beta is as small as possible
        std::vector<int> parts;
        std::function<void(int, int)> rec = [&](int left, int maxpart) {
            if (left == 0) {
                long inside_cap = 0, skeleton = pairs(n);
                for (int m : parts) {
                    skeleton -= pairs(m);
                    inside_cap += static_cast<long>(m) * m / 4;
                }
                long extra = k - skeleton;
                if (extra < 0 || extra > inside_cap) return;
                std::vector<long> e(parts.size(), 0);
                auto approx = [&](std::size_t i) {
                    double m = parts[i];
                    return (m + std::sqrt(m * m - 4.0 * e[i])) / 2;
                };
                std::priority_queue<std::pair<double, std::size_t>> pq;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    if (parts[i] >= 2) pq.push({approx(i), i});
                for (long t = 0; t < extra; ++t) {
                    auto [v, i] = pq.top();
                    pq.pop();
                    ++e[i];
                    if (e[i] < static_cast<long>(parts[i]) * parts[i] / 4) pq.push({approx(i), i});
                }
                Surd worst = triangle_free_beta(parts[0], e[0]);
                for (std::size_t i = 1; i < parts.size(); ++i) {
                    Surd s = triangle_free_beta(parts[i], e[i]);
                    if (compare(s, worst) > 0) worst = s;
                }
                if (!best || compare(worst, *best) < 0) {
                    best = worst;
                    best_parts = parts;
                    best_edges = e;
                }
                return;
            }
            for (int m = std::min(left, maxpart); m >= 1; --m) {
                parts.push_back(m);
                rec(left - m, m);
                parts.pop_back();
            }
        };
        rec(n, n);
        // the edge cap always admits the all-singletons partition (K_n)
        require(best.has_value(), "a feasible partition exists");
    }

    Graph g(n);
    std::vector<int> start;
    int at = 0;
    for (std::size_t i = 0; i < best_parts.size(); ++i) {
        start.push_back(at);
        fill_triangle_free(g, at, best_parts[i], best_edges[i]);
        at += best_parts[i];
    }
    for (std::size_t i = 0; i < best_parts.size(); ++i)
        for (std::size_t j = i + 1; j < best_parts.size(); ++j)
            for (int u = 0; u < best_parts[i]; ++u)
                for (int v = 0; v < best_parts[j]; ++v) g.add_edge(start[i] + u, start[j] + v);
    require(g.num_edges() == k, "edge count of the min construction");
    IntPoly pc = pc_polynomial(clique_profile(g));
    RootEnclosure dom = dominant_real_root(pc);
    require(equals_root(*best, pc, dom), "closed form is the dominant root of the min construction");

    ExtremalResult r;
    r.graph = g;
    r.predicted_beta = beta_value_of(*best);
    r.predicted_beta.root = dom;
    r.predicted_beta.poly = pc;
    r.bound_kind = BoundKind::min;
    int w = clique_bound_index(n, k);
    bool turan = w >= 2 && n % w == 0 && 2 * k * w == nn * (w - 1);
    r.conditional = 4 * k > nn && !turan;
    r.formula = min_beta_formula(n, k);
    return r;
}

BetaBounds beta_bounds(int n, long k) {
    check_range(n, k);
    BetaBounds b;
    b.w = clique_bound_index(n, k);
    Rat rn(n), rk(k);
    b.fisher_lower = rn - 2 * rk / rn;
    b.samuelson_upper = rn - rk / rn;
    b.sqrt_upper = Surd{Rat(0), rn * rn - Rat(3, 2) * rk, Rat(1)};
    if (k == 0) {
        b.fisher_nonis_lower = Surd{rn, Rat(0), Rat(1)};
        b.window_lower = b.fisher_nonis_lower;
        b.window_upper = Surd{rn + 1, Rat(0), Rat(1)};
    } else {
        Rat disc = rn * rn - 2 * rk * b.w / Rat(b.w - 1);
        b.fisher_nonis_lower = Surd{rn, disc, Rat(b.w)};
        b.window_lower = b.fisher_nonis_lower;
        b.window_upper = Surd{rn + b.w, disc, Rat(b.w)};
    }
    b.alpha_upper_estimate = n - 0.9408008 * static_cast<double>(k) / n;
    return b;
}

// ------------------------------------------------------------ planar

PlanarExtremes planar_extremes(int n, long k) {
    check_range(n, k);
    PlanarExtremes r;
    auto finish = [&](const Surd& lm, const Surd& lp) {
        IntPoly pm = pc_polynomial(clique_profile(r.g_minus)), pp = pc_polynomial(clique_profile(r.g_plus));
        r.lambda_minus = beta_value_of(lm);
        r.lambda_plus = beta_value_of(lp);
        require(equals_root(lm, pm, dominant_real_root(pm)), "lambda_minus is the dominant root of PC(G-)");
        require(equals_root(lp, pp, dominant_real_root(pp)), "lambda_plus is the dominant root of PC(G+)");
    };

    // Case 1: too few edges for a triangle
    if (n < 3 || k <= 2) {
        Graph g(n);
        for (int i = 0; i < k; ++i) g.add_edge(i, i + 1);
        r.g_minus = r.g_plus = g;
        Surd s = triangle_free_beta(n, k);
        finish(s, s);
        return r;
    }
    // Case 2: the planar class has a single graph up to isomorphism
    struct Special {
        int n;
        long k;
        std::vector<int> parts;
        long beta;
    };
    static const Special specials[] = {{3, 3, {1, 1, 1}, 1}, {4, 6, {1, 1, 1, 1}, 1}, {4, 5, {1, 1, 2}, 2}, {5, 9, {1, 1, 1, 2}, 2}};
    for (auto& s : specials)
        if (s.n == n && s.k == k) {
            r.g_minus = r.g_plus = complete_multipartite(s.parts);
            Surd b{Rat(s.beta), Rat(0), Rat(1)};
            finish(b, b);
            return r;
        }
    if (n < 4 || k > 3L * n - 6) throw GraphError("(n, k) lies outside the planar case table");

    // minimum: inside K_{2,n-2}, then a path or cycle in the big part
    Graph gm(n);
    Surd lm;
    if (k <= 2L * n - 4) {
        for (long i = 0; i < k; ++i) gm.add_edge(static_cast<int>(i % 2), 2 + static_cast<int>(i / 2));
        lm = triangle_free_beta(n, k);
    } else {
        for (int j = 2; j < n; ++j) {
            gm.add_edge(0, j);
            gm.add_edge(1, j);
        }
        if (k < 3L * n - 6) {
            long inner = k - 2L * n + 4;
            for (int j = 0; j < inner; ++j) gm.add_edge(2 + j, 3 + j);
            lm = Surd{Rat(n - 2), Rat(static_cast<long>(n) * n + 4L * n - 4 * k - 12), Rat(2)};
            IntPoly want = IntPoly::from_descending({1, -n, k, -2 * inner});
            require(pc_polynomial(clique_profile(gm)) == want, "cubic PC of the path construction");
        } else {
            for (int j = 2; j < n; ++j) gm.add_edge(j, j + 1 < n ? j + 1 : 2);
            lm = Surd{Rat(n - 2), Rat(static_cast<long>(n) * n - 8L * n + 12), Rat(2)};
        }
    }
    require(gm.num_edges() == k, "edge count of G-");

    // maximum: triangle, then each new vertex placed in a face and joined
    // to the face corners one edge at a time
    Graph gp(n);
    gp.add_edge(0, 1);
    gp.add_edge(0, 2);
    gp.add_edge(1, 2);
    long left = k - 3;
    for (int v = 3; left > 0; ++v) {
        int face[3] = {0, 1, v == 3 ? 2 : v - 1};
        for (int c = 0; c < 3 && left > 0; ++c, --left) gp.add_edge(v, face[c]);
    }
    IntPoly want;
    if (k < 6)
        want = IntPoly::from_descending({1, -n, k, -(1 + (k - 3) / 2)});
    else
        want = IntPoly::from_descending({1, -n, k, -(1 + (k - 3) / 3 + 2 * (k - 3) / 3), k / 3 - 1});
    require(pc_polynomial(clique_profile(gp)) == want, "PC of the triangulation construction");

    r.g_minus = gm;
    r.g_plus = gp;
    IntPoly pm = pc_polynomial(clique_profile(gm));
    require(equals_root(lm, pm, dominant_real_root(pm)), "lambda_minus is the dominant root of PC(G-)");
    r.lambda_minus = beta_value_of(lm);
    r.lambda_plus = beta_value_of(want);
    if (k == 3L * n - 6) {
        Surd top{Rat(n - 3), Rat(0), Rat(1)};
        require(equals_root(top, want, r.lambda_plus.root), "lambda_plus = n - 3 on triangulations");
        r.lambda_plus.closed = top;
    }
    return r;
}

NordhausGaddum nordhaus_gaddum(const Graph& g, const Rat& width) {
    NordhausGaddum r;
    r.beta_g = beta(g, width);
    r.beta_complement = beta(complement(g), width);
    r.sum = {r.beta_g.lo + r.beta_complement.lo, r.beta_g.hi + r.beta_complement.hi};
    r.product = {r.beta_g.lo * r.beta_complement.lo, r.beta_g.hi * r.beta_complement.hi};
    return r;
}

} // namespace pcpoly
