#include "pcpoly/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pcpoly {

Graph::Graph(int vertices) : n(vertices) {
    if (vertices < 0 || vertices > kMaxVertices)
        throw GraphError("vertex count must be in 0..64, got " + std::to_string(vertices));
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("vertex out of range in edge " + std::to_string(u) + " " + std::to_string(v));
    adj[u] |= bit(v);
    adj[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
}

int Graph::max_degree() const {
    int d = 0;
    for (int i = 0; i < n; ++i) d = std::max(d, degree(i));
    return d;
}

int Graph::num_edges() const {
    int s = 0;
    for (int i = 0; i < n; ++i) s += popcount(adj[i]);
    return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (Mask m = adj[u] & ~low_mask(u + 1); m; m &= m - 1) out.emplace_back(u, lowest(m));
    return out;
}

void Graph::validate() const {
    for (int i = 0; i < n; ++i) {
        if (adj[i] & bit(i)) throw GraphError("self-loop at vertex " + std::to_string(i));
        if (adj[i] & ~all()) throw GraphError("edge to a vertex outside 0..n-1");
        for (Mask m = adj[i]; m; m &= m - 1)
            if (!has_edge(lowest(m), i)) throw GraphError("adjacency is not symmetric");
    }
    for (int i = n; i < kMaxVertices; ++i)
        if (adj[i]) throw GraphError("row beyond n is nonempty");
}

bool Graph::operator==(const Graph& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
        if (adj[i] != o.adj[i]) return false;
    return true;
}

VertexOrder VertexOrder::standard(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return from_perm(std::move(p));
}

VertexOrder VertexOrder::from_perm(std::vector<int> perm) {
    VertexOrder o;
    o.rank.assign(perm.size(), -1);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        int v = perm[i];
        if (v < 0 || v >= static_cast<int>(perm.size()) || o.rank[v] != -1)
            throw GraphError("vertex order is not a permutation");
        o.rank[v] = static_cast<int>(i);
    }
    o.perm = std::move(perm);
    return o;
}

// ---------------------------------------------------------------- families

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.adj[i] = g.all() & ~bit(i);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    if (leaves + 1 > kMaxVertices) throw GraphError("star too large");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int q : parts) {
        if (q <= 0) throw GraphError("multipartite part sizes must be positive");
        n += q;
    }
    if (n > kMaxVertices) throw GraphError("multipartite graph exceeds 64 vertices");
    Graph g(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int j = 0; j < parts[p]; ++j) part_of[v++] = static_cast<int>(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) g.add_edge(i, j);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph threshold_from_bits(const std::string& bits) {
    Graph g(static_cast<int>(bits.size()) + 1);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        int v = static_cast<int>(i) + 1;
        if (bits[i] == '1')
            for (int u = 0; u < v; ++u) g.add_edge(u, v);
        else if (bits[i] != '0')
            throw GraphError("threshold vector must be a 0/1 string");
    }
    return g;
}

// ---------------------------------------------------------------- parsing

namespace {

int parse_count(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw GraphError("malformed " + what + ": '" + s + "'");
    if (s.size() > 4) throw GraphError(what + " too large");
    return std::stoi(s);
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Graph parse_named(const std::string& raw) {
    std::string s = strip(raw);
    auto starts = [&](const char* p) { return s.rfind(p, 0) == 0; };
    auto check_n = [](int n) {
        if (n > kMaxVertices) throw GraphError("n > 64");
        return n;
    };
    if (starts("Kbar")) return empty_graph(check_n(parse_count(s.substr(4), "Kbar size")));
    if (starts("thr")) {
        std::string bits = s.substr(3);
        if (bits.size() + 1 > kMaxVertices) throw GraphError("n > 64");
        return threshold_from_bits(bits);
    }
    if (starts("star")) return star_graph(check_n(parse_count(s.substr(4), "star size")));
    if (s == "Petersen" || s == "petersen") return petersen_graph();
    if (starts("P")) return path_graph(check_n(parse_count(s.substr(1), "path size")));
    if (starts("C")) return cycle_graph(check_n(parse_count(s.substr(1), "cycle size")));
    if (starts("K")) {
        std::string body = s.substr(1);
        if (!body.empty() && body.front() == '_') body.erase(0, 1);
        if (!body.empty() && body.front() == '{') {
            if (body.back() != '}') throw GraphError("unbalanced braces in '" + s + "'");
            body = body.substr(1, body.size() - 2);
        }
        std::vector<int> parts;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(parse_count(strip(tok), "part size"));
        if (parts.empty()) throw GraphError("empty complete graph spec");
        if (parts.size() == 1) return complete_graph(check_n(parts[0]));
        return complete_multipartite(parts);
    }
    throw GraphError("unknown named graph '" + s + "'");
}

Graph parse_edge_list(const std::string& text) {
    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        tok = strip(tok);
        if (!tok.empty()) fields.push_back(tok);
    }
    if (fields.empty()) throw GraphError("empty edge list");
    int n = parse_count(fields[0], "vertex count");
    if (n > kMaxVertices) throw GraphError("n > 64");
    Graph g(n);
    for (std::size_t i = 1; i < fields.size(); ++i) {
        std::stringstream es(fields[i]);
        std::string a, b, extra;
        if (!(es >> a >> b) || (es >> extra)) throw GraphError("malformed edge '" + fields[i] + "'");
        int u = parse_count(a, "vertex"), v = parse_count(b, "vertex");
        if (u >= n || v >= n) throw GraphError("vertex out of range in edge '" + fields[i] + "'");
        if (u == v) throw GraphError("self-loop in edge '" + fields[i] + "'");
        if (g.has_edge(u, v)) throw GraphError("duplicate edge '" + fields[i] + "'");
        g.add_edge(u, v);
    }
    return g;
}

Graph parse_graph6(const std::string& raw) {
    std::string s = strip(raw);
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw GraphError("empty graph6 string");
    for (unsigned char c : s)
        if (c < 63 || c > 126) throw GraphError("invalid graph6 character");
    std::size_t pos = 0;
    long n = 0;
    if (s[0] != 126) {
        n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() < 4 || s[1] == 126) throw GraphError("graph6 size field not supported");
        n = ((s[1] - 63L) << 12) | ((s[2] - 63L) << 6) | (s[3] - 63L);
        pos = 4;
    }
    if (n > kMaxVertices) throw GraphError("n > 64");
    Graph g(static_cast<int>(n));
    std::size_t slots = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t need = (slots + 5) / 6;
    if (s.size() - pos != need) throw GraphError("graph6 length does not match n");
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = s[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    for (; k < need * 6; ++k) {
        int byte = s[pos + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) throw GraphError("nonzero graph6 padding");
    }
    return g;
}

} // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
    case GraphFormat::graph6: return parse_graph6(text);
    case GraphFormat::edge_list: return parse_edge_list(text);
    case GraphFormat::named: return parse_named(text);
    }
    throw GraphError("unknown format");
}

Graph parse_graph_auto(const std::string& text) {
    if (text.find(';') != std::string::npos) return parse_edge_list(text);
    try {
        return parse_named(text);
    } catch (const GraphError&) {
    }
    return parse_graph6(text);
}

std::string to_graph6(const Graph& g) {
    std::string out;
    if (g.n < 63) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n);
    for (auto [u, v] : g.edges()) out += "; " + std::to_string(u) + " " + std::to_string(v);
    return out;
}

// ---------------------------------------------------------------- operations

Graph complement(const Graph& g) {
    Graph h(g.n);
    for (int i = 0; i < g.n; ++i) h.adj[i] = ~g.adj[i] & g.all() & ~bit(i);
    return h;
}

Graph induced_subgraph(const Graph& g, Mask s) {
    s &= g.all();
    if (!s) throw GraphError("induced subgraph on empty vertex set");
    std::vector<int> verts;
    for (Mask m = s; m; m &= m - 1) verts.push_back(lowest(m));
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    Mask m = 0;
    for (int v : s) {
        if (v < 0 || v >= g.n) throw GraphError("vertex out of range");
        m |= bit(v);
    }
    return induced_subgraph(g, m);
}

Graph delete_vertex(const Graph& g, int v) {
    if (g.n == 1) return Graph(0);
    return induced_subgraph(g, g.all() & ~bit(v));
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    if (es.size() > static_cast<std::size_t>(kMaxVertices)) throw GraphError("line graph needs |E| <= 64");
    Graph h(static_cast<int>(es.size()));
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            auto [u1, v1] = es[a];
            auto [u2, v2] = es[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) h.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return h;
}

Graph graph_join_union(const Graph& a, const Graph& b, Combine kind) {
    if (a.n + b.n > kMaxVertices) throw GraphError("combined graph exceeds 64 vertices");
    Graph h(a.n + b.n);
    for (int i = 0; i < a.n; ++i) h.adj[i] = a.adj[i];
    for (int i = 0; i < b.n; ++i) h.adj[a.n + i] = b.adj[i] << a.n;
    if (kind == Combine::join) {
        Mask left = a.all(), right = b.all() << a.n;
        for (int i = 0; i < a.n; ++i) h.adj[i] |= right;
        for (int i = 0; i < b.n; ++i) h.adj[a.n + i] |= left;
    }
    return h;
}

int edge_slots(int n) { return n * (n - 1) / 2; }

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1) {
                g.adj[i] |= bit(j);
                g.adj[j] |= bit(i);
            }
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    Mask seen = 1, frontier = 1;
    while (frontier) {
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= g.adj[lowest(m)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.all();
}

bool is_forest(const Graph& g) {
    // a graph is a forest iff every component with c vertices has c-1 edges
    Mask left = g.all();
    while (left) {
        Mask comp = bit(lowest(left)), frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= m - 1) next |= g.adj[lowest(m)];
            frontier = next & ~comp;
            comp |= next;
        }
        int deg = 0;
        for (Mask m = comp; m; m &= m - 1) deg += popcount(g.adj[lowest(m)]);
        if (deg / 2 != popcount(comp) - 1) return false;
        left &= ~comp;
    }
    return true;
}

bool is_complete_multipartite(const Graph& g) {
    // non-adjacency must be an equivalence relation
    Graph c = complement(g);
    for (int i = 0; i < g.n; ++i) {
        Mask cls = c.adj[i] | bit(i);
        for (Mask m = c.adj[i]; m; m &= m - 1)
            if ((c.adj[lowest(m)] | bit(lowest(m))) != cls) return false;
    }
    return true;
}

bool is_equal_multipartite(const Graph& g) {
    if (!is_complete_multipartite(g)) return false;
    Graph c = complement(g);
    for (int i = 1; i < g.n; ++i)
        if (c.degree(i) != c.degree(0)) return false;
    return true;
}

bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> nb;
        for (Mask m = g.adj[v]; m; m &= m - 1) nb.push_back(lowest(m));
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                for (std::size_t c = b + 1; c < nb.size(); ++c)
                    if (!g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c])) return false;
            }
    }
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.adj[u] & g.adj[v]) return false;
    return true;
}

} // namespace pcpoly
