#pragma once

#include "liebasis/graph.hpp"
#include "liebasis/tree.hpp"
#include "liebasis/words.hpp"

#include <random>
#include <vector>

namespace liebasis {

// All count vectors of the given total over the alphabet (zero counts allowed).
std::vector<MultiDegree> all_multidegrees(int alphabet_size, long long total);

// All binary trees whose leaf-label multiset matches md; every tree appears
// exactly once (a tree determines the multidegrees of its subtrees).
std::vector<Tree> all_trees(const Alphabet& a, const MultiDegree& md);

// All directed labelled trees with the given label multiset: shapes from
// Pruefer sequences, every orientation of every edge, every distinct label
// placement.  Pivot fixed to vertex 0 (the pairing ignores it).  Sizes grow
// as n^(n-2) * 2^(n-1) * multinomial; intended for n <= 5.
std::vector<Graph> all_graphs(const Alphabet& a, const MultiDegree& md);

// Uniform-ish random samples for the randomized suites; deterministic given
// the engine state.
Tree random_tree(std::mt19937_64& rng, const Alphabet& a, const MultiDegree& md);
Graph random_graph(std::mt19937_64& rng, const Alphabet& a, const MultiDegree& md);

}  // namespace liebasis
