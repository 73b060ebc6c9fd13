#include "pcpoly/monoid.hpp"

#include "pcpoly/clique.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace pcpoly {

Word parse_word(const std::string& letters) {
    Word w;
    for (char ch : letters) {
        if (ch < 'a' || ch > 'z') throw GraphError("word letters must be a..z");
        w.push_back(ch - 'a');
    }
    return w;
}

std::string word_string(const Word& w) {
    std::string s;
    for (int x : w) s.push_back(static_cast<char>('a' + x));
    return s;
}

bool is_normal_form(const Word& w, const Graph& g, const VertexOrder& order) {
    for (int x : w)
        if (x < 0 || x >= g.n) throw GraphError("word letter outside the vertex set");
    // for each position j, scan left while letters commute with w[j]
    for (std::size_t j = 1; j < w.size(); ++j) {
        int b = w[j];
        for (std::size_t i = j; i-- > 0;) {
            int t = w[i];
            if (!g.has_edge(t, b)) break;
            if (order.greater(b, t)) return false;
        }
    }
    return true;
}

namespace {

void dfs_count(const Graph& g, const VertexOrder& order, Word& w, int len, Int& total) {
    if (static_cast<int>(w.size()) == len) {
        ++total;
        return;
    }
    for (int b = 0; b < g.n; ++b) {
        bool bad = false;
        for (std::size_t i = w.size(); i-- > 0;) {
            int t = w[i];
            if (!g.has_edge(t, b)) break;
            if (order.greater(b, t)) {
                bad = true;
                break;
            }
        }
        if (bad) continue;
        w.push_back(b);
        dfs_count(g, order, w, len, total);
        w.pop_back();
    }
}

} // namespace

Int count_normal_forms(const Graph& g, const VertexOrder& order, int len, CountMode mode) {
    if (len < 0) throw GraphError("negative word length");
    if (static_cast<int>(order.rank.size()) != g.n) throw GraphError("order size does not match the graph");
    if (mode == CountMode::direct) {
        if (len > kDirectMaxLength) throw GraphError("direct enumeration is limited to length 16");
        Int total = 0;
        Word w;
        dfs_count(g, order, w, len, total);
        return total;
    }
    // state: letters that may not be appended next
    std::unordered_map<Mask, Int> cur{{0, Int(1)}};
    for (int step = 0; step < len; ++step) {
        std::unordered_map<Mask, Int> next;
        for (const auto& [s, cnt] : cur)
            for (int c = 0; c < g.n; ++c) {
                if ((s >> c) & 1) continue;
                Mask t = 0;
                for (Mask m = g.adj[c]; m; m &= m - 1) {
                    int b = lowest(m);
                    if (order.greater(b, c) || ((s >> b) & 1)) t |= bit(b);
                }
                next[t] += cnt;
            }
        cur = std::move(next);
    }
    Int total = 0;
    for (const auto& kv : cur) total += kv.second;
    return total;
}

std::vector<Int> m_sequence(const Graph& g, int upto) {
    if (upto < 0) throw GraphError("negative sequence length");
    auto prof = clique_profile(g);
    std::vector<Int> m(upto + 1, Int(0));
    m[0] = 1;
    for (int t = 1; t <= upto; ++t)
        for (int k = 1; k <= prof.omega() && k <= t; ++k) {
            Int term = Int(static_cast<unsigned long>(prof[k])) * m[t - k];
            if (k & 1) m[t] += term;
            else m[t] -= term;
        }
    return m;
}

std::vector<Int> pc_power_sums(const Graph& g, int upto) {
    auto prof = clique_profile(g);
    auto e = [&](int k) { return Int(static_cast<unsigned long>(prof[k])); };
    std::vector<Int> p(upto + 1, Int(0));
    for (int j = 1; j <= upto; ++j) {
        Int s = 0;
        for (int i = 1; i < j; ++i) {
            if (i > prof.omega()) break;
            Int term = e(i) * p[j - i];
            if (i & 1) s += term;
            else s -= term;
        }
        Int last = e(j) * j;
        if (j & 1) s += last;
        else s -= last;
        p[j] = s;
    }
    return {p.begin() + 1, p.end()};
}

namespace {

int moebius(int n) {
    int r = 1;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            r = -r;
        }
    return n > 1 ? -r : r;
}

} // namespace

LieDims lie_dimensions(const Graph& g, int upto) {
    if (upto < 1) throw GraphError("lie dimensions need upto >= 1");
    auto p = pc_power_sums(g, upto);
    LieDims out;
    for (int n = 1; n <= upto; ++n) {
        Int s = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) s += moebius(d) * p[n / d - 1];
        if (s % n != 0) throw PolyError("Moebius sum not divisible: internal inconsistency");
        Int q = s / n;
        if (q < 0) throw PolyError("negative Lie dimension: internal inconsistency");
        out.dims.push_back(q);
    }
    return out;
}

bool is_monotonic(const Word& w) {
    // default order: smaller index is the greater letter
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) return false;
    return true;
}

int neighbour_pair_count(const Word& w) {
    std::set<std::pair<int, int>> pairs;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] != w[i]) pairs.insert(std::minmax(w[i - 1], w[i]));
    return static_cast<int>(pairs.size());
}

int unequal_neighbour_positions(const Word& w) {
    int t = 0;
    for (std::size_t i = 1; i < w.size(); ++i) t += w[i - 1] != w[i];
    return t;
}

IntPoly word_weight_polynomial(const Word& w) {
    int len = static_cast<int>(w.size());
    if (len > 64) throw GraphError("word too long");
    if (len == 0) return IntPoly::constant(1);
    // copies: position j becomes vertex j; copy rank = (letter, occurrence)
    std::map<int, int> seen;
    std::vector<std::pair<int, int>> key(len);
    for (int j = 0; j < len; ++j) key[j] = {w[j], seen[w[j]]++};
    std::vector<int> perm(len);
    for (int j = 0; j < len; ++j) perm[j] = j;
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return key[a] < key[b]; });
    VertexOrder order = VertexOrder::from_perm(perm);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            if (w[i] != w[j]) pairs.emplace_back(i, j);
    int m = static_cast<int>(pairs.size());
    if (m > kWordWeightMaxPairs) throw GraphError("word weight enumeration is limited to 24 letter-copy pairs");
    Word wp(len);
    for (int j = 0; j < len; ++j) wp[j] = j;
    std::vector<Int> by_edges(m + 1, Int(0));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        Graph g(len);
        for (int k = 0; k < m; ++k)
            if ((s >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
        if (is_normal_form(wp, g, order)) ++by_edges[popcount(s)];
    }
    // sum_e N_e p^e (1-p)^(m-e)
    IntPoly total, q = IntPoly::from_descending({-1, 1});
    for (int e = 0; e <= m; ++e)
        if (by_edges[e] != 0) total = total + by_edges[e] * (IntPoly::monomial(Int(1), e) * power(q, m - e));
    return total;
}

Rat word_weight(const Word& w, const Rat& p) {
    if (p < 0 || p > 1) throw PolyError("edge probability must lie in [0, 1]");
    return eval(word_weight_polynomial(w), p);
}

} // namespace pcpoly
