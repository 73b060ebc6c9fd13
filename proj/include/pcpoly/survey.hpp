#pragma once

#include "pcpoly/extremal.hpp"
#include "pcpoly/graph.hpp"
#include "pcpoly/poly.hpp"

#include <string>
#include <vector>

namespace pcpoly {

// 0 means: PCPOLY_THREADS if set, else the hardware count.
int resolve_threads(int requested);

struct CensusRow {
    int n = 0;
    long graphs_total = 0;
    long polys_with_nonreal = 0;
    long roots_total = 0;  // sum of omega(G), with multiplicity
    long roots_nonreal = 0;
};

CensusRow survey_nonreal(int n, int threads = 0);

struct Violation {
    std::string check;
    std::string graph6;
};

struct BoundsReport {
    int n = 0;
    long graphs = 0;
    std::vector<Violation> violations;
    double e_min = 0, e_max = 0;   // edge PC-density over graphs with k > 0
    long fisher_equality = 0;      // graphs with beta = n - 2k/n
    long real_rooted = 0;
};

// Exhaustive checks over all labelled graphs on n vertices (n <= 7):
// beta >= n - 2k/n with equality exactly for empty and equal-part complete
// multipartite graphs; n/omega <= beta <= n with the stated equality cases;
// beta >= 2 when G is not complete; e(G) <= 2/n; beta <= n - k/n when PC is
// real-rooted; beta no larger than the maximum construction for (n, k).
BoundsReport survey_bounds(int n, int threads = 0);

// (1 / 2^C(n,2)) sum over labelled graphs of beta(G), as an interval.
Interval average_beta(int n, const Rat& width = default_width(), int threads = 0);

std::string census_csv(const std::vector<CensusRow>& rows);

} // namespace pcpoly
