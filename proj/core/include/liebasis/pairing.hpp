#pragma once

#include "liebasis/coalg.hpp"
#include "liebasis/lie.hpp"

#include <map>
#include <vector>

namespace liebasis {

// Bijection vertex id -> leaf position (leaves numbered left to right).
using LeafAssignment = std::map<int, int>;

struct EdgeImage {
    int internal_node;  // TreeIndex vertex id
    int sign;           // +1 when the source leaf lies strictly left of the target leaf
};

// Image of each edge under an assignment: the root-most internal vertex on
// the path between the two leaves, with the left/right sign.
std::vector<EdgeImage> beta_map(const Graph& g, const Tree& t, const LeafAssignment& a);

// Product of edge signs when the edge images cover all internal vertices,
// otherwise 0.
int pair_sigma(const Graph& g, const Tree& t, const LeafAssignment& a);

// Sum of pair_sigma over all label-compatible bijections.  Zero immediately
// when the label multisets differ.
Int pair(const Graph& g, const Tree& t);

// Same value through the cobracket recursion: a single vertex pairs with a
// matching leaf, and <g, [t1,t2]> = sum of sign * <left, t1> * <right, t2>
// over single-edge cuts.
Int pair_recursive(const Graph& g, const Tree& t);

// Coefficient of the bar word in the bracket expansion of e.
Int pair_bar(const BarWord& w, const LieElement& e);

// How bar-word terms of a CoElement are paired: via the word-coefficient
// route (default) or through their long graphs (cross-checking).
enum class BarRoute { WordCoefficient, LongGraph };

// Bilinear extension to integer combinations on both sides.
Int pair_elements(const CoElement& c, const LieElement& e,
                  BarRoute route = BarRoute::WordCoefficient);

}  // namespace liebasis
