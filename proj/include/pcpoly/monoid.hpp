#pragma once

#include "pcpoly/graph.hpp"
#include "pcpoly/poly.hpp"

#include <string>
#include <vector>

namespace pcpoly {

using Word = std::vector<int>;

// "bab" -> {1, 0, 1}; letters a..z map to 0..25.
Word parse_word(const std::string& letters);
std::string word_string(const Word& w);

// Lexicographically maximal representative test over M(X, G).
bool is_normal_form(const Word& w, const Graph& g, const VertexOrder& order);

enum class CountMode { direct, automaton };
constexpr int kDirectMaxLength = 16;

Int count_normal_forms(const Graph& g, const VertexOrder& order, int len, CountMode mode = CountMode::automaton);

// m_0 .. m_upto from the clique-count recurrence.
std::vector<Int> m_sequence(const Graph& g, int upto);

struct LieDims {
    std::vector<Int> dims;  // dims[0] = l_1
};
// Power sums of the PC roots, p_1 .. p_upto, by Newton's identities.
std::vector<Int> pc_power_sums(const Graph& g, int upto);
LieDims lie_dimensions(const Graph& g, int upto);

constexpr int kWordWeightMaxPairs = 24;
// Sum over commutation graphs on the copies of e(G) p^|E| (1-p)^(M-|E|) as a
// polynomial in p, where M counts pairs of copies of distinct letters.
IntPoly word_weight_polynomial(const Word& w);
Rat word_weight(const Word& w, const Rat& p);
bool is_monotonic(const Word& w);
// distinct unordered pairs of unequal adjacent letters ("abba" counts 1)
int neighbour_pair_count(const Word& w);
// adjacent positions holding different letters ("abba" counts 2)
int unequal_neighbour_positions(const Word& w);

} // namespace pcpoly
