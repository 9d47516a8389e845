#pragma once

#include "liebasis/graph.hpp"
#include "liebasis/words.hpp"

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace liebasis {

// A linearly ordered word of labels, written x|y|z.  The path-graph view of
// the same data is as_long_graph below.
struct BarWord {
    std::vector<std::string> letters;

    std::string text() const;

    // Accepts "x|y|z"; without any '|' the text is read as a plain word over
    // the alphabet ("xyz" or dotted form).
    static BarWord parse(const Alphabet& a, const std::string& text);
    static BarWord of_word(const Alphabet& a, const Word& w);
};

// Integer combination of bar words and graphs.  Graph terms merge by
// canonical serialization, so isomorphic graphs collapse into one term.
using CoTerm = std::variant<BarWord, Graph>;

class CoElement {
public:
    CoElement() = default;
    explicit CoElement(const CoTerm& t, Int coeff = 1) { add(t, coeff); }

    void add(const CoTerm& t, const Int& coeff);
    void add(const CoElement& other, const Int& scale = 1);

    bool is_zero() const { return terms_.empty(); }

    // Deterministic order: bar words before graphs, then by text key.
    std::vector<std::pair<CoTerm, Int>> terms() const;

private:
    std::map<std::pair<int, std::string>, std::pair<CoTerm, Int>> terms_;
};

// The graph attached to a word's graded decomposition: a single labelled
// vertex for a letter; for head^k tail_1..tail_l, the pieces are joined by a
// chain of edges from the pivot of tail_1 through the k pivots of the head
// copies, plus a chain through the pivots of tail_2..tail_l.  The pivot of
// the whole is the pivot of tail_1.
Graph config_graph(const Alphabet& a, const GradedDecomposition& g);

// Word-level entry; the word must be minimal among its rotations in either
// the dictionary or the block order.
Graph config_graph(const Alphabet& a, const Word& w);

// Anti-symmetrized single-edge cuts: for each edge, (+1, source piece,
// target piece) and (-1, target piece, source piece).
struct CobracketTerm {
    int sign;
    Graph left, right;
};
std::vector<CobracketTerm> cobracket(const Graph& g);

// Path graph of a bar word: positions become vertices, edges point from each
// position to the next, pivot is the first position.
Graph as_long_graph(const BarWord& w);

// Cuts of a bar word, matching cobracket(as_long_graph(w)) termwise.
struct BarCutTerm {
    int sign;
    BarWord left, right;
};
std::vector<BarCutTerm> bar_cut(const BarWord& w);

// Sum over all interleavings of u and v as bar words, coefficient +1 per
// shuffle (equal interleavings merge into larger coefficients).
CoElement shuffle(const Alphabet& a, const Word& u, const Word& v);

// One edge flipped; g + reverse_edge(g, e) pairs to zero with every tree.
Graph reverse_edge(const Graph& g, int edge_index);

// For edges a->b and b->c in g: the combination g + g' + g'' where g'
// replaces a->b with c->a and g'' replaces b->c with c->a.  Pairs to zero
// with every tree.
CoElement arnold_triples(const Graph& g, int a, int b, int c);

}  // namespace liebasis
