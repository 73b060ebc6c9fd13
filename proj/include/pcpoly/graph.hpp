#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcpoly {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest(Mask m) { return __builtin_ctzll(m); }
inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on at most 64 vertices; row i of adj is the
// neighbourhood of vertex i.
struct Graph {
    int n = 0;
    std::array<Mask, kMaxVertices> adj{};

    Graph() = default;
    explicit Graph(int vertices);

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const { return popcount(adj[v]); }
    int max_degree() const;
    int num_edges() const;
    Mask all() const { return low_mask(n); }
    std::vector<std::pair<int, int>> edges() const;
    // Throws if symmetry or looplessness is broken.
    void validate() const;

    bool operator==(const Graph& o) const;
};

// Position 0 holds the greatest vertex.
struct VertexOrder {
    std::vector<int> perm;
    std::vector<int> rank;

    static VertexOrder standard(int n);
    static VertexOrder from_perm(std::vector<int> perm);
    // a > b in this order
    bool greater(int a, int b) const { return rank[a] < rank[b]; }
};

enum class GraphFormat { graph6, edge_list, named };

Graph parse_graph(const std::string& text, GraphFormat format);
// Tries named, then edge-list (contains ';'), then graph6.
Graph parse_graph_auto(const std::string& text);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph petersen_graph();
// bits[i] = 1 appends a dominating vertex i+1, 0 an isolated one.
Graph threshold_from_bits(const std::string& bits);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, Mask s);
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);
Graph delete_vertex(const Graph& g, int v);
Graph line_graph(const Graph& g);

enum class Combine { join, disjoint_union };
Graph graph_join_union(const Graph& a, const Graph& b, Combine kind);

// Labelled graph whose edge slots follow graph6 order: for j, for i < j.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
int edge_slots(int n);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_complete_multipartite(const Graph& g);
// Complete multipartite with all parts of equal size (includes K_n, Kbar_n).
bool is_equal_multipartite(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_triangle_free(const Graph& g);

} // namespace pcpoly
