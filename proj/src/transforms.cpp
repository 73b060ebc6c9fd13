#include "pcpoly/transforms.hpp"

#include <algorithm>
#include <functional>

namespace pcpoly {

namespace {

void check_pair(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) throw GraphError("vertex out of range");
    if (u == v) throw GraphError("Kelmans transformation needs u != v");
}

} // namespace

Graph kelmans(const Graph& g, int u, int v) {
    check_pair(g, u, v);
    Mask moved = g.adj[v] & ~g.adj[u] & ~bit(u);
    Graph h = g;
    for (Mask m = moved; m; m &= m - 1) {
        int x = lowest(m);
        h.remove_edge(v, x);
        h.add_edge(u, x);
    }
    return h;
}

bool is_nontrivial_kelmans(const Graph& g, int u, int v) {
    check_pair(g, u, v);
    Mask a = g.adj[u] & ~g.adj[v] & ~bit(v), c = g.adj[v] & ~g.adj[u] & ~bit(u);
    for (Mask m = a; m; m &= m - 1)
        if (g.adj[lowest(m)] & c) return true;
    return false;
}

Graph isolating(const Graph& g, int u, Mask part1) {
    if (u < 0 || u >= g.n) throw GraphError("vertex out of range");
    part1 &= g.all();
    if (!((part1 >> u) & 1)) throw GraphError("isolating: u is not in part1");
    Mask part2 = g.all() & ~part1;
    for (Mask m = part2; m; m &= m - 1) {
        Mask seen = g.adj[lowest(m)] & part1;
        if (seen != 0 && seen != part1) throw GraphError("isolating: a part2 vertex is adjacent to only some of part1");
    }
    Mask inner = g.adj[u] & part1;
    if (popcount(inner) != 1) throw GraphError("isolating: u must have exactly one neighbour inside part1");
    Mask rest = part1 & ~bit(u);
    bool complete = true;
    for (Mask m = rest; m; m &= m - 1)
        if ((g.adj[lowest(m)] & rest) != (rest & ~bit(lowest(m)))) complete = false;
    if (complete) throw GraphError("isolating: part1 without u is complete");
    int w = lowest(inner);
    Graph h = g;
    h.remove_edge(u, w);
    // first preference: a vertex t in part1 not adjacent to w
    Mask free_t = rest & ~g.adj[w] & ~bit(w);
    if (free_t) {
        h.add_edge(w, lowest(free_t));
        return h;
    }
    // otherwise the smallest non-adjacent pair avoiding u and w
    Mask others = rest & ~bit(w);
    for (Mask m = others; m; m &= m - 1) {
        int a = lowest(m);
        Mask miss = others & ~g.adj[a] & ~low_mask(a + 1);
        if (miss) {
            h.add_edge(a, lowest(miss));
            return h;
        }
    }
    throw GraphError("isolating: no edge to add");  // unreachable given the checks above
}

std::optional<ThresholdVector> threshold_vector(const Graph& g) {
    if (g.n == 0) return ThresholdVector{};
    Mask left = g.all();
    std::vector<int> removed;
    std::string rbits;
    while (popcount(left) > 1) {
        int pick = -1;
        char kind = 0;
        for (Mask m = left; m; m &= m - 1) {
            int v = lowest(m);
            Mask nb = g.adj[v] & left;
            if (nb == 0) {
                pick = v;
                kind = '0';
                break;
            }
            if (nb == (left & ~bit(v))) {
                pick = v;
                kind = '1';
                break;
            }
        }
        if (pick < 0) return std::nullopt;
        removed.push_back(pick);
        rbits.push_back(kind);
        left &= ~bit(pick);
    }
    ThresholdVector t;
    t.order.push_back(lowest(left));
    for (std::size_t i = removed.size(); i-- > 0;) {
        t.order.push_back(removed[i]);
        t.bits.push_back(rbits[i]);
    }
    return t;
}

bool is_threshold(const Graph& g) { return threshold_vector(g).has_value(); }

bool is_threshold_by_degrees(const Graph& g) {
    // d_1 >= ... >= d_n; threshold iff the Erdos-Gallai inequalities are
    // tight for every k <= m, m = max{i : d_i >= i - 1}
    std::vector<int> d(g.n);
    for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    int m = 0;
    for (int i = 1; i <= g.n; ++i)
        if (d[i - 1] >= i - 1) m = i;
    for (int k = 1; k <= m; ++k) {
        long lhs = 0, rhs = static_cast<long>(k) * (k - 1);
        for (int i = 0; i < k; ++i) lhs += d[i];
        for (int i = k; i < g.n; ++i) rhs += std::min(k, d[i]);
        if (lhs != rhs) return false;
    }
    return true;
}

ThresholdReduction reduce_to_threshold(const Graph& g) {
    ThresholdReduction out;
    Graph cur = g;
    auto square_sum = [](const Graph& h) {
        long s = 0;
        for (int v = 0; v < h.n; ++v) s += static_cast<long>(h.degree(v)) * h.degree(v);
        return s;
    };
    for (;;) {
        // pairs where each of u, v has a private neighbour; such a move raises
        // the sum of squared degrees, so the loop terminates
        int best = 0, bu = -1, bv = -1;
        for (int u = 0; u < cur.n; ++u)
            for (int v = 0; v < cur.n; ++v) {
                if (u == v) continue;
                int moved = popcount(cur.adj[v] & ~cur.adj[u] & ~bit(u));
                int kept = popcount(cur.adj[u] & ~cur.adj[v] & ~bit(v));
                if (moved > 0 && kept > 0 && moved > best) {
                    best = moved;
                    bu = u;
                    bv = v;
                }
            }
        if (bu < 0) break;
        long before = square_sum(cur);
        cur = kelmans(cur, bu, bv);
        if (square_sum(cur) <= before) throw GraphError("threshold reduction failed to make progress");
        out.steps.push_back({bu, bv});
    }
    auto t = threshold_vector(cur);
    if (!t) throw GraphError("threshold reduction ended on a non-threshold graph");
    out.vector = *t;
    out.result = cur;
    return out;
}

} // namespace pcpoly
