#pragma once

#include "pcpoly/graph.hpp"
#include "pcpoly/poly.hpp"

#include <optional>
#include <vector>

namespace pcpoly {

// Vertex-weighted graph; clique B has weight prod alpha_v x^(d_v).
// Adjacency is kept as plain rows so that cycle graphs of matrices may
// exceed 64 vertices.
struct WeightedGraph {
    int n = 0;
    std::vector<std::vector<char>> adj;
    std::vector<Rat> alpha, d;

    static WeightedGraph from_graph(const Graph& g, std::vector<Rat> alpha, std::vector<Rat> d);
    static WeightedGraph unit(const Graph& g);  // alpha = d = 1
    void validate() const;
};

// poly in s with x = s^L
struct FractionalPoly {
    long L = 1;
    RatPoly poly;
};

// sum over all cliques (empty included) of (-1)^|B| w(B)
FractionalPoly weighted_dependence(const WeightedGraph& g);

using RatMatrix = std::vector<std::vector<Rat>>;

// One vertex per simple directed cycle with nonzero entries (loops too);
// cycles adjacent iff vertex-disjoint; alpha = product of entries, d = length.
// Throws std::logic_error if D_w differs from det(E - xM).
WeightedGraph matrix_to_weighted_graph(const RatMatrix& m);
// det(E - xM) by evaluation at order+1 points and interpolation.
RatPoly det_identity_minus_xm(const RatMatrix& m);

// 1 / (smallest positive root of D_w)
RootEnclosure mcmullen_growth(const WeightedGraph& g, const Rat& width = default_width());

// 1 / beta(complement of G) for the dependency graph G
RootEnclosure lll_threshold(const Graph& g, const Rat& width = default_width());

struct LLLResult {
    bool feasible = false;
    Rat bound;                            // I_w(G,1) when feasible
    std::optional<RootEnclosure> witness; // smallest root in [0,1] otherwise
};
// I_w(G,t) = D_w(complement(G), t) with alpha_i = p_i, d_i = 1.
LLLResult lll_check(const Graph& g, const std::vector<Rat>& probs);
RatPoly lll_polynomial(const Graph& g, const std::vector<Rat>& probs);

} // namespace pcpoly
