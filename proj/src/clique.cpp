#include "pcpoly/clique.hpp"

#include <algorithm>

namespace pcpoly {

namespace {

void count_cliques(const Graph& g, Mask cand, int depth, std::vector<std::uint64_t>& cnt) {
    if (static_cast<int>(cnt.size()) < depth + 2) cnt.resize(depth + 2, 0);
    cnt[depth + 1] += popcount(cand);
    while (cand) {
        int v = lowest(cand);
        cand &= cand - 1;
        Mask next = cand & g.adj[v];
        if (next) count_cliques(g, next, depth + 1, cnt);
    }
}

IntPoly from_counts(const CliqueProfile& p, bool alternate, bool descending) {
    int w = p.omega();
    std::vector<Int> v(w + 1);
    for (int k = 0; k <= w; ++k) {
        Int c(static_cast<unsigned long>(p.counts[k]));
        if (alternate && (k & 1)) c = -c;
        v[descending ? w - k : k] = c;
    }
    return IntPoly(std::move(v));
}

} // namespace

CliqueProfile clique_profile(const Graph& g) {
    CliqueProfile p;
    p.counts = {1};
    if (g.n > 0) count_cliques(g, g.all(), 0, p.counts);
    while (p.counts.size() > 1 && p.counts.back() == 0) p.counts.pop_back();
    return p;
}

IntPoly pc_polynomial(const CliqueProfile& p) { return from_counts(p, true, true); }
IntPoly dependence_polynomial(const CliqueProfile& p) { return from_counts(p, true, false); }
IntPoly clique_polynomial(const CliqueProfile& p) { return from_counts(p, false, false); }

IntPoly clique_type_polynomial(const Graph& g, PolyKind kind) {
    switch (kind) {
    case PolyKind::pc: return pc_polynomial(clique_profile(g));
    case PolyKind::dependence: return dependence_polynomial(clique_profile(g));
    case PolyKind::clique: return clique_polynomial(clique_profile(g));
    case PolyKind::independence: return clique_polynomial(clique_profile(complement(g)));
    }
    throw PolyError("unknown polynomial kind");
}

RootEnclosure beta_of_profile(const CliqueProfile& p, const Rat& width) {
    if (p.omega() == 0) throw PolyError("beta of the graph with no vertices");
    return dominant_real_root(pc_polynomial(p), width);
}

RootEnclosure beta(const Graph& g, const Rat& width) { return beta_of_profile(clique_profile(g), width); }

Rat occupancy_fraction(const Graph& g, const Rat& x) {
    if (x < 0) throw PolyError("occupancy fraction needs x >= 0");
    IntPoly ind = clique_polynomial(clique_profile(complement(g)));
    Rat r = x * eval(derivative(ind), x) / (Rat(g.n) * eval(ind, x));
    r.canonicalize();
    return r;
}

int decycling_number(const Graph& g) {
    if (g.n > 20) throw GraphError("decycling brute force is capped at n <= 20");
    // forest on the kept vertices iff edges == vertices - components
    auto forest_on = [&](Mask keep) {
        int edges2 = 0, comps = 0;
        for (Mask m = keep; m; m &= m - 1) edges2 += popcount(g.adj[lowest(m)] & keep);
        Mask left = keep;
        while (left) {
            ++comps;
            Mask seen = Mask{1} << lowest(left), frontier = seen;
            while (frontier) {
                Mask nb = 0;
                for (Mask m = frontier; m; m &= m - 1) nb |= g.adj[lowest(m)];
                frontier = nb & keep & ~seen;
                seen |= frontier;
            }
            left &= ~seen;
        }
        return edges2 / 2 == popcount(keep) - comps;
    };
    for (int k = 0; k <= g.n; ++k) {
        if (k == 0) {
            if (forest_on(g.all())) return 0;
            continue;
        }
        // Gosper's hack over k-subsets
        Mask s = (Mask{1} << k) - 1, limit = Mask{1} << g.n;
        while (s < limit) {
            if (forest_on(g.all() & ~s)) return k;
            Mask c = s & -s, r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return g.n;
}

AlternatingCount independence_at_minus_one(const Graph& g) {
    IntPoly ind = clique_polynomial(clique_profile(complement(g)));
    return {eval(ind, Int(-1)), decycling_number(g)};
}

namespace {

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} E, c_{n-k} = -tr(A M_k)/k.
// Every division by k is exact, so T only needs to be an integer ring.
template <class T>
std::vector<T> faddeev(const Graph& g, T (*divk)(const T&, int)) {
    int n = g.n;
    std::vector<T> c(n + 1, T(0));
    c[n] = 1;
    std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0))), am = m;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = am[i][j];
            m[i][i] += c[n - k + 1];
        }
        T tr = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                T s = 0;
                for (Mask r = g.adj[i]; r; r &= r - 1) s += m[lowest(r)][j];
                am[i][j] = s;
                if (i == j) tr += s;
            }
        c[n - k] = -divk(tr, k);
    }
    return c;
}

__int128 div_small(const __int128& a, int k) { return a / k; }

Int div_big(const Int& a, int k) {
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
    return q;
}

Int from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Int r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += Int(static_cast<unsigned long>(u & ~std::uint64_t{0}));
    return neg ? Int(-r) : r;
}

} // namespace

IntPoly characteristic_polynomial(const Graph& g) {
    // intermediate entries stay below 16! * 15^16 < 2^127 for n <= 16
    if (g.n <= 16) {
        auto c = faddeev<__int128>(g, div_small);
        std::vector<Int> v;
        v.reserve(c.size());
        for (auto x : c) v.push_back(from_i128(x));
        return IntPoly(std::move(v));
    }
    return IntPoly(faddeev<Int>(g, div_big));
}

RootEnclosure spectral_radius(const Graph& g, const Rat& width) {
    if (g.n == 0) throw GraphError("spectral radius of the graph with no vertices");
    return dominant_real_root(characteristic_polynomial(g), width);
}

bool moon_moser_holds(const CliqueProfile& p, int n) {
    // c_{s+1} >= s^2/(s^2-1) c_s (c_s/c_{s-1} - n/s^2) for s >= 2, c_{s-1} != 0
    for (int s = 2; s <= p.omega() + 1; ++s) {
        if (p[s - 1] == 0) continue;
        Rat cs(Int(static_cast<unsigned long>(p[s]))), cs1(Int(static_cast<unsigned long>(p[s - 1])));
        Rat next(Int(static_cast<unsigned long>(p[s + 1])));
        Rat s2(s * s);
        Rat rhs = s2 / (s2 - 1) * cs * (cs / cs1 - Rat(n) / s2);
        if (next < rhs) return false;
    }
    return true;
}

bool fisher_chain_holds(const CliqueProfile& p) {
    int w = p.omega();
    auto binom = [](int a, int b) {
        Int r;
        mpz_bin_uiui(r.get_mpz_t(), a, b);
        return r;
    };
    // (a_j)^(1/j) >= (a_{j+1})^(1/(j+1))  <=>  a_j^(j+1) >= a_{j+1}^j
    for (int j = 1; j < w; ++j) {
        Rat a(Int(static_cast<unsigned long>(p[j])), binom(w, j));
        Rat b(Int(static_cast<unsigned long>(p[j + 1])), binom(w, j + 1));
        a.canonicalize();
        b.canonicalize();
        Rat lhs = 1, rhs = 1;
        for (int t = 0; t < j + 1; ++t) lhs *= a;
        for (int t = 0; t < j; ++t) rhs *= b;
        if (lhs < rhs) return false;
    }
    return true;
}

int clique_bound_compare(const CliqueProfile& p, int n, const Rat& x) {
    int w = p.omega();
    Rat lhs = eval(clique_polynomial(p), x);
    Rat base = 1 + Rat(n) * x / w, rhs = 1;
    for (int i = 0; i < w; ++i) rhs *= base;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

IntPoly nikiforov_polynomial(const CliqueProfile& p) {
    int w = p.omega();
    std::vector<Int> v(w + 1, Int(0));
    v[w] = -1;
    for (int i = 2; i <= w; ++i) v[w - i] += Int(static_cast<unsigned long>(p[i])) * (i - 1);
    return IntPoly(std::move(v));
}

} // namespace pcpoly
