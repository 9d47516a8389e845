#pragma once

#include "liebasis/alphabet.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace liebasis {

// ---------------------------------------------------------------------------
// Word orders
// ---------------------------------------------------------------------------

enum class WordOrder {
    Lex,     // dictionary order
    DegLex,  // shorter first, ties broken by Lex
    Block,   // order through the block refinement; see compare_block below
};

// Factorization of a word into simple blocks sharing the word's first
// letter: every block is a maximal run of that letter followed by the
// maximal run of other letters.  Words ending in a run of their first letter
// have no such factorization.
std::optional<std::vector<Word>> block_factorization(const Word& w);

// Order on individual blocks: first letter, then leading-run length (longer
// runs first), then tail length, then dictionary order.  This ordering of
// the block alphabet selects the dictionary-minimal rotations over two
// letters while still sorting e.g. xz before xyyz.
std::strong_ordering compare_simple_block(const Word& a, const Word& b);

// Order on words: first letter, then number of blocks, then blockwise by
// compare_simple_block.  Words without a block factorization sort after
// factorizable ones with the same first letter; remaining ties fall back to
// dictionary order.
std::strong_ordering compare_block(const Word& a, const Word& b);

std::strong_ordering compare_words(const Word& a, const Word& b, WordOrder order);

// ---------------------------------------------------------------------------
// Cyclically minimal words
// ---------------------------------------------------------------------------

// True when w is strictly smaller (in dictionary order) than every nontrivial
// rotation of itself.  Periodic words fail this.
bool is_lyndon(const Word& w);

// True when w is strictly minimal among its rotations under the block order.
bool is_bhat(const Word& w);

// All dictionary-minimal aperiodic words of the given length over an alphabet
// of `alphabet_size` letters, in dictionary order (Duval's generation).
std::vector<Word> lyndon_words(int alphabet_size, int length);

// Same set filtered to one multidegree; output in dictionary order.
std::vector<Word> lyndon_words(const MultiDegree& md);

// Block-order-minimal aperiodic words, sorted by the block order.
std::vector<Word> bhat_words(int alphabet_size, int length);
std::vector<Word> bhat_words(const MultiDegree& md);

// ---------------------------------------------------------------------------
// Dimension counts
// ---------------------------------------------------------------------------

// Number of cyclically minimal aperiodic words: (1/n) sum_{m|n} mu(m) d^{n/m}.
Int witt_count(int alphabet_size, int length);

// Multidegree refinement: (1/n) sum_{m | gcd(n_i)} mu(m) (n/m)! / prod (n_i/m)!.
Int fine_witt_count(const MultiDegree& md);

// ---------------------------------------------------------------------------
// Graded decomposition
// ---------------------------------------------------------------------------

// Structured form of a word: either a bare letter, or head^exponent followed
// by the tail factors, where head and every tail factor decompose one level
// down and share the same first letter, and no tail factor equals head.
struct GradedDecomposition;
using GradingPtr = std::shared_ptr<const GradedDecomposition>;

struct GradedDecomposition {
    int level = 0;                 // 0 for a bare letter
    int letter = -1;               // set when level == 0
    GradingPtr head;               // set when level >= 1
    int exponent = 0;              // multiplicity of head
    std::vector<GradingPtr> tail;  // nonempty when level >= 1

    Word flatten() const;
};

// Decomposes w through every grading level, or returns nullptr when w has no
// such decomposition (e.g. "xx", or "xyx" whose trailing x has no partner).
GradingPtr try_simple_grade(const Word& w);

// Throwing variant of try_simple_grade.
GradingPtr simple_grade(const Word& w);

// Grading level of w (1 for simple words), or nullopt when ungradable.
std::optional<int> grading_level(const Word& w);

// Renders the nesting, e.g. "((112)(112)(13)(142))" flattens back to w.
std::string format_grading(const Alphabet& a, const GradedDecomposition& g);

}  // namespace liebasis
