#include "pcpoly/matching.hpp"
#include "pcpoly/clique.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace pcpoly {

namespace {

// coefficients m_k of the matching generating polynomial of g[s]
std::vector<Int> matching_counts(const Graph& g, Mask s, std::unordered_map<Mask, std::vector<Int>>& memo) {
    if (s == 0) return {Int(1)};
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    int v = lowest(s);
    Mask rest = s & ~bit(v);
    std::vector<Int> out = matching_counts(g, rest, memo);
    for (Mask nb = g.adj[v] & rest; nb; nb &= nb - 1) {
        auto sub = matching_counts(g, rest & ~bit(lowest(nb)), memo);
        if (out.size() < sub.size() + 1) out.resize(sub.size() + 1, Int(0));
        for (std::size_t k = 0; k < sub.size(); ++k) out[k + 1] += sub[k];
    }
    memo.emplace(s, out);
    return out;
}

} // namespace

MatchingPair matching_polynomials(const Graph& g) {
    std::unordered_map<Mask, std::vector<Int>> memo;
    std::vector<Int> m = matching_counts(g, g.all(), memo);
    MatchingPair out;
    out.M = IntPoly(m);
    std::vector<Int> mu(g.n + 1, Int(0));
    for (std::size_t k = 0; k < m.size(); ++k) mu[g.n - 2 * k] = (k % 2) ? Int(-m[k]) : m[k];
    out.mu = IntPoly(mu);
    if (g.num_edges() <= kMaxVertices && g.num_edges() > 0) {
        IntPoly via_line = clique_polynomial(clique_profile(complement(line_graph(g))));
        if (via_line != out.M) throw std::logic_error("matching polynomial differs from I(L(G), x)");
    }
    return out;
}

RootEnclosure t_largest(const Graph& g, const Rat& width) {
    if (g.num_edges() == 0) throw GraphError("t(G) needs at least one edge");
    MatchingPair mp = matching_polynomials(g);
    RootEnclosure t = dominant_real_root(mp.mu, width);
    if (g.num_edges() <= kMaxVertices) {
        RootEnclosure b = beta(complement(line_graph(g)), width);
        Rat lo2 = t.lo > 0 ? Rat(t.lo * t.lo) : Rat(0), hi2 = t.hi * t.hi;
        if (hi2 < b.lo || b.hi < lo2) throw std::logic_error("t^2 differs from beta of the complement of L(G)");
    }
    return t;
}

std::vector<Int> clique_partition_counts(const Graph& g) {
    std::vector<Int> a(g.n + 1, Int(0));
    // the block holding the lowest unassigned vertex, then recurse
    std::function<void(Mask, int)> go = [&](Mask left, int blocks) {
        if (left == 0) {
            a[blocks] += 1;
            return;
        }
        int v = lowest(left);
        Mask cand = g.adj[v] & left;
        // every clique through v inside left
        std::function<void(Mask, Mask)> extend = [&](Mask clique, Mask options) {
            go(left & ~clique, blocks + 1);
            for (Mask o = options; o; o &= o - 1) {
                int u = lowest(o);
                Mask later = o & ~bit(u) & g.adj[u];
                // only vertices after u to avoid repeats
                later &= ~low_mask(u + 1);
                extend(clique | bit(u), later);
            }
        };
        extend(bit(v), cand);
    };
    go(g.all(), 0);
    return a;
}

Graph hat_graph(const Graph& g) {
    auto e = g.edges();
    if (e.size() > static_cast<std::size_t>(kMaxVertices)) throw GraphError("too many edges for the auxiliary graph");
    Graph h(static_cast<int>(e.size()));
    for (std::size_t x = 0; x < e.size(); ++x)
        for (std::size_t y = 0; y < e.size(); ++y) {
            if (x == y) continue;
            auto [i, j] = e[x];
            auto [k, l] = e[y];
            if (j < l) continue;  // handled by the swapped pair
            bool adj = i == k || i == l || (j == l && !g.has_edge(i, k));
            if (adj) h.add_edge(static_cast<int>(x), static_cast<int>(y));
        }
    return h;
}

IntPoly adjoint_polynomial(const Graph& g) {
    std::vector<Int> a = clique_partition_counts(g);
    std::vector<Int> h(g.n + 1, Int(0));
    for (int k = 0; k <= g.n; ++k) h[k] = ((g.n - k) % 2) ? Int(-a[k]) : a[k];
    // independent sets of size n-k in the auxiliary graph <-> partitions into k cliques
    CliqueProfile ind = clique_profile(complement(hat_graph(g)));
    for (int k = 0; k <= g.n; ++k) {
        int j = g.n - k;
        Int ij = j < static_cast<int>(ind.counts.size()) ? Int(ind.counts[j]) : Int(0);
        if (ij != a[k]) throw std::logic_error("adjoint polynomial differs from the auxiliary-graph identity");
    }
    return IntPoly(h);
}

RootEnclosure adjoint_root(const Graph& g, const Rat& width) {
    if (g.n == 0) throw GraphError("empty graph");
    return dominant_real_root(adjoint_polynomial(g), width);
}

} // namespace pcpoly
