#pragma once

#include "pcpoly/graph.hpp"
#include "pcpoly/poly.hpp"

#include <cstdint>
#include <vector>

namespace pcpoly {

// counts[k] = number of complete subgraphs on k vertices; counts[0] = 1.
struct CliqueProfile {
    std::vector<std::uint64_t> counts{1};

    int omega() const { return static_cast<int>(counts.size()) - 1; }
    std::uint64_t operator[](int k) const { return k < static_cast<int>(counts.size()) ? counts[k] : 0; }
    bool operator==(const CliqueProfile& o) const { return counts == o.counts; }
    bool operator<(const CliqueProfile& o) const { return counts < o.counts; }
};

enum class PolyKind { pc, dependence, clique, independence };

CliqueProfile clique_profile(const Graph& g);

// sum (-1)^k c_k x^(omega-k)
IntPoly pc_polynomial(const CliqueProfile& p);
// sum (-1)^k c_k x^k
IntPoly dependence_polynomial(const CliqueProfile& p);
// sum c_k x^k
IntPoly clique_polynomial(const CliqueProfile& p);
IntPoly clique_type_polynomial(const Graph& g, PolyKind kind);

RootEnclosure beta(const Graph& g, const Rat& width = default_width());
RootEnclosure beta_of_profile(const CliqueProfile& p, const Rat& width = default_width());

// x I'(G,x) / (n I(G,x)) with I(G,x) = C(complement, x)
Rat occupancy_fraction(const Graph& g, const Rat& x);

struct AlternatingCount {
    Int value;      // I(G,-1)
    int decycling;  // minimum number of vertices whose removal leaves a forest
};
AlternatingCount independence_at_minus_one(const Graph& g);
int decycling_number(const Graph& g);

// det(xE - A), descending powers in the usual orientation.
IntPoly characteristic_polynomial(const Graph& g);
RootEnclosure spectral_radius(const Graph& g, const Rat& width = default_width());

// Inequality checks on a clique profile; each returns true when it holds.
bool moon_moser_holds(const CliqueProfile& p, int n);
bool fisher_chain_holds(const CliqueProfile& p);
// Compares C(G,x) with (1 + n x / w)^w: returns -1, 0 or 1.
int clique_bound_compare(const CliqueProfile& p, int n, const Rat& x);
// Sum_{i>=2} (i-1) c_i y^(w-i) - y^w; nonnegative at the spectral radius.
IntPoly nikiforov_polynomial(const CliqueProfile& p);

} // namespace pcpoly
