#pragma once

#include "liebasis/types.hpp"

#include <compare>
#include <string>
#include <vector>

namespace liebasis {

// An ordered alphabet.  Letters are referred to by index; index order is the
// letter order.  Tokens are nonempty, distinct, and must not contain the
// separators used by the text formats ('.', '|', ',', whitespace, brackets).
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> tokens);

    // Parses a comma-separated token list, e.g. "x,y,z".
    static Alphabet parse(const std::string& spec);

    int size() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(int i) const { return tokens_.at(i); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    // Index of a token, or -1 when the token is unknown.
    int index_of(const std::string& token) const;

    bool single_char() const { return single_char_; }

private:
    std::vector<std::string> tokens_;
    bool single_char_ = false;
};

// A word is a finite sequence of letter indices into some alphabet.  The
// defaulted comparison is dictionary order: a proper prefix sorts before its
// extensions, otherwise the first differing letter decides.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    int operator[](int i) const { return letters[i]; }

    Word rotated(int by) const;

    auto operator<=>(const Word&) const = default;
};

// Letter multiplicity vector over a fixed alphabet; counts[i] is the number of
// occurrences of letter i.
struct MultiDegree {
    std::vector<long long> counts;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<long long> c) : counts(std::move(c)) {}

    long long total() const;

    auto operator<=>(const MultiDegree&) const = default;
};

MultiDegree multidegree_of(const Word& w, int alphabet_size);

// Word text IO.  Single-character alphabets use plain concatenation ("xxyz");
// otherwise letters are joined with dots ("a.b.ab").  parse_word accepts both.
std::string format_word(const Alphabet& a, const Word& w);
Word parse_word(const Alphabet& a, const std::string& text);

// Comma- or bare-format multidegree parsing, e.g. "2,2,2".
MultiDegree parse_multidegree(const std::string& text, int alphabet_size);
std::string format_multidegree(const MultiDegree& md);

}  // namespace liebasis
