#include "pcpoly/extremal.hpp"

#include <algorithm>
#include <vector>

namespace pcpoly {

namespace {

// Does the edge set `es` form a subdivision of K5 (branch degree 4) or K3,3
// (branch degree 3)?
bool is_subdivision(int n, const std::vector<std::pair<int, int>>& es, int branch_degree) {
    std::vector<Mask> adj(n, 0);
    for (auto [u, v] : es) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    std::vector<int> branch;
    for (int v = 0; v < n; ++v) {
        int d = popcount(adj[v]);
        if (d == 0 || d == 2) continue;
        if (d != branch_degree) return false;
        branch.push_back(v);
    }
    int want = branch_degree == 4 ? 5 : 6;
    if (static_cast<int>(branch.size()) != want) return false;
    // follow each branch path to its far end
    std::vector<int> index(n, -1);
    for (int i = 0; i < want; ++i) index[branch[i]] = i;
    std::vector<Mask> reduced(want, 0);
    Mask visited_inner = 0;
    for (int i = 0; i < want; ++i) {
        int b = branch[i];
        for (Mask m = adj[b]; m; m &= m - 1) {
            int prev = b, cur = lowest(m);
            while (index[cur] < 0) {
                visited_inner |= bit(cur);
                Mask nxt = adj[cur] & ~bit(prev);
                prev = cur;
                cur = lowest(nxt);
            }
            int j = index[cur];
            if (j == i || ((reduced[i] >> j) & 1)) return false;  // loop or parallel path
            reduced[i] |= bit(j);
        }
    }
    // every degree-2 vertex must lie on a branch path
    for (int v = 0; v < n; ++v)
        if (popcount(adj[v]) == 2 && !((visited_inner >> v) & 1)) return false;
    if (branch_degree == 4) return true;
    // 3-regular simple on six vertices: K3,3 iff bipartite
    std::vector<int> side(want, -1);
    side[0] = 0;
    for (int round = 0; round < want; ++round)
        for (int i = 0; i < want; ++i)
            if (side[i] >= 0)
                for (Mask m = reduced[i]; m; m &= m - 1) {
                    int j = lowest(m);
                    if (side[j] < 0) side[j] = 1 - side[i];
                    else if (side[j] == side[i]) return false;
                }
    return true;
}

} // namespace

bool is_planar(const Graph& g) {
    if (g.n > 8) throw GraphError("brute-force planarity is limited to n <= 8");
    int m = g.num_edges();
    if (g.n <= 4 || m < 9) return true;
    if (m > 3 * g.n - 6) return false;
    auto es = g.edges();
    // a subdivision of H with s subdivision vertices has e(H) + s edges
    struct Target {
        int edges, vertices, degree;
    };
    for (Target t : {Target{9, 6, 3}, Target{10, 5, 4}})
        for (int size = t.edges; size <= std::min(m, t.edges + g.n - t.vertices); ++size) {
            std::uint64_t sel = (std::uint64_t{1} << size) - 1, limit = std::uint64_t{1} << m;
            while (sel < limit) {
                std::vector<std::pair<int, int>> sub;
                for (std::uint64_t s = sel; s; s &= s - 1) sub.push_back(es[__builtin_ctzll(s)]);
                if (is_subdivision(g.n, sub, t.degree)) return false;
                std::uint64_t c = sel & -sel, r = sel + c;
                sel = (((r ^ sel) >> 2) / c) | r;
            }
        }
    return true;
}

} // namespace pcpoly
