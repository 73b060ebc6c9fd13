#pragma once

#include "pcpoly/graph.hpp"
#include "pcpoly/poly.hpp"

#include <vector>

namespace pcpoly {

struct MatchingPair {
    IntPoly mu;  // sum (-1)^k m_k x^(n-2k)
    IntPoly M;   // sum m_k x^k
};

// Recursion on the lowest vertex (the edge recursion applied to every edge at
// it); cross-checked against I(L(G), x) when the line graph fits.
MatchingPair matching_polynomials(const Graph& g);

// Largest root of mu; checks t^2 against beta of the complement of L(G).
RootEnclosure t_largest(const Graph& g, const Rat& width = default_width());

// a_k = number of partitions of V into k cliques (index k, a_0 = 0)
std::vector<Int> clique_partition_counts(const Graph& g);
// h(G,x) = sum (-1)^(n-k) a_k x^k; checked against the auxiliary graph.
IntPoly adjoint_polynomial(const Graph& g);
// Vertices are the edges (i,j), i < j, of G. For (i,j), (k,l) with j >= l:
// adjacent iff i in {k, l}, or j = l and ik is not an edge of G.
Graph hat_graph(const Graph& g);
// Largest real root of h.
RootEnclosure adjoint_root(const Graph& g, const Rat& width = default_width());

} // namespace pcpoly
