#pragma once

#include "pcpoly/clique.hpp"
#include "pcpoly/graph.hpp"
#include "pcpoly/poly.hpp"

#include <optional>
#include <string>

namespace pcpoly {

// A dominant root held both as an enclosure of `poly` and, when available,
// as an exact quadratic surd.
struct BetaValue {
    std::optional<Surd> closed;
    IntPoly poly;
    RootEnclosure root;

    double approx() const { return closed ? closed->approx() : root.approx(); }
    std::string to_string(int digits = 15) const;
};

BetaValue beta_value_of(const Surd& s);
BetaValue beta_value_of(const IntPoly& p, const Rat& width = default_width());

enum class BoundKind { max, min };

struct ExtremalResult {
    Graph graph;
    BetaValue predicted_beta;
    BoundKind bound_kind = BoundKind::max;
    // set when minimality rests on the disconnected-complement conjecture
    bool conditional = false;
    // printed closed form for the minimum, when the (n, k) regime has one
    std::optional<Surd> formula;
};

// K_d plus one vertex joined to e clique vertices plus isolated vertices,
// where k = C(d,2) + e and 0 <= e < d.
ExtremalResult max_beta_graph(int n, long k);
// (x-1)^d - (n-d-1) x^(d-1) - x^(d-e-1) (x-1)^e
IntPoly max_construction_polynomial(int n, long k);

// Triangle-free for k <= n^2/4; otherwise a complete multipartite graph with
// triangle-free graphs inside the parts, parts and edge split chosen to
// minimise beta.
ExtremalResult min_beta_graph(int n, long k);
// Closed forms of the minimum construction; nullopt if none applies.
std::optional<Surd> min_beta_formula(int n, long k);

// w >= 2 with (1 - 1/(w-1)) n^2/2 < k <= (1 - 1/w) n^2/2; 1 when k = 0.
int clique_bound_index(int n, long k);

struct BetaBounds {
    int w = 1;
    Rat fisher_lower;            // n - 2k/n
    Surd fisher_nonis_lower;     // (n + sqrt(n^2 - 2kw/(w-1))) / w
    Rat samuelson_upper;         // n - k/n, valid when PC is real-rooted
    Surd sqrt_upper;             // sqrt(n^2 - 1.5k)
    Surd window_lower, window_upper;  // minimum over G(n,k) lies in [lower, upper)
    double alpha_upper_estimate = 0;  // n - 0.9408008 k/n, asymptotic only
};
BetaBounds beta_bounds(int n, long k);

struct PlanarExtremes {
    BetaValue lambda_minus, lambda_plus;
    Graph g_minus, g_plus;
};
PlanarExtremes planar_extremes(int n, long k);

// Brute-force search for a K5 or K3,3 subdivision; n <= 8.
bool is_planar(const Graph& g);

struct Interval {
    Rat lo, hi;
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    double approx() const { return Rat((lo + hi) / 2).get_d(); }
};

struct NordhausGaddum {
    RootEnclosure beta_g, beta_complement;
    Interval sum, product;
};
NordhausGaddum nordhaus_gaddum(const Graph& g, const Rat& width = default_width());

} // namespace pcpoly
