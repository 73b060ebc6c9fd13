#pragma once

#include "pcpoly/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcpoly {

// Moves the edges from v to N(v) \ (N(u) + u) over to u.
Graph kelmans(const Graph& g, int u, int v);
// Some x in N(u)\N(v), y in N(v)\N(u) are adjacent.
bool is_nontrivial_kelmans(const Graph& g, int u, int v);

// Removes the only edge at u inside part1 and adds one edge inside part1 - u.
Graph isolating(const Graph& g, int u, Mask part1);

struct ThresholdVector {
    std::string bits;        // n-1 characters '0'/'1'
    std::vector<int> order;  // order[i] = vertex of g placed at position i of the decode
};

// Peels isolated or dominating vertices; nullopt if the graph is not threshold.
std::optional<ThresholdVector> threshold_vector(const Graph& g);
bool is_threshold(const Graph& g);
// Degree-sequence test, independent of the peeling.
bool is_threshold_by_degrees(const Graph& g);

struct KelmansStep {
    int u, v;
};
struct ThresholdReduction {
    ThresholdVector vector;
    std::vector<KelmansStep> steps;
    Graph result;
};
ThresholdReduction reduce_to_threshold(const Graph& g);

} // namespace pcpoly
