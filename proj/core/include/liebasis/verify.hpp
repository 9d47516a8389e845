#pragma once

#include "liebasis/basis.hpp"

#include <cstdint>

namespace liebasis {

// Pairing of jacobiator and antisymmetrizer elements vanishes against
// exhaustive small graphs and seeded random larger ones; arrow-reversal sums
// and Arnold triples vanish against trees.
Report verify_kernel(const Alphabet& a, int max_n, std::uint64_t seed);

// Shuffles of all nonempty word pairs with |u|+|v| <= max_n pair to zero with
// every tree of the matching multidegree.
Report verify_shuffle(const Alphabet& a, int max_n);

// The three pairing methods (bijection sum, cut recursion, word-coefficient
// extraction for bar rows) agree on basis pairs and on seeded random pairs.
Report verify_oracle(const Alphabet& a, int max_n, std::uint64_t seed, int random_cases = 1000);

// A star of k arrows out of a center equals, against every matching tree,
// (-1)^k times the sum over orders of the path through the outer vertices
// into the center; with equal outer labels this is (-1)^k k! times one path.
Report verify_fan(int max_k);

// Seeded random alphabet surjections applied letterwise to block-minimal
// words: the relabelled bracket either is the image word's bracket or the
// image fails block-minimality and the relabelled tree expands to zero.
Report verify_quotient(std::uint64_t seed, int cases, int max_n);

}  // namespace liebasis
