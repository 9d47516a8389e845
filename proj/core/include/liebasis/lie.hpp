#pragma once

#include "liebasis/tree.hpp"
#include "liebasis/words.hpp"

#include <map>
#include <vector>

namespace liebasis {

// Formal integer combination of trees.  Trees are kept verbatim; no rewriting
// (antisymmetry, Jacobi) is applied, since the pairing is what detects those
// relations.
class LieElement {
public:
    LieElement() = default;
    explicit LieElement(const Tree& t, Int coeff = 1) { add(t, coeff); }

    void add(const Tree& t, const Int& coeff);
    void add(const LieElement& other, const Int& scale = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Tree, Int>& terms() const { return terms_; }

private:
    std::map<Tree, Int> terms_;
};

// Bilinear bracket: pairs up trees termwise under Tree::node.
LieElement bracket(const LieElement& a, const LieElement& b);

// [a,[b,c]] + [b,[c,a]] + [c,[a,b]] — pairs to zero against everything.
LieElement jacobiator(const Tree& a, const Tree& b, const Tree& c);

// [a,b] + [b,a] — likewise in the kernel of the pairing.
LieElement antisymmetrizer(const Tree& a, const Tree& b);

// Right-normed bracketing attached to the graded decomposition of a word:
// for head^k tail_1..tail_l, bracket the image of tail_1 with k copies of the
// head's image, then with the images of tail_2..tail_l.
Tree config_bracketing(const Alphabet& a, const GradedDecomposition& g);
Tree config_bracketing(const Alphabet& a, const Word& w);  // throws if ungradable

// Standard bracketing of a dictionary-minimal word: letters map to leaves,
// otherwise split before the smallest proper suffix and recurse.
Tree classical_bracketing(const Alphabet& a, const Word& w);  // throws otherwise

// Noncommutative polynomials in the letters, used to expand brackets as
// associative words: [u,v] -> uv - vu.
using NCWord = std::vector<std::string>;
using NCPolynomial = std::map<NCWord, Int>;

NCPolynomial expand_brackets(const Tree& t);
NCPolynomial expand_brackets(const LieElement& e);

}  // namespace liebasis
