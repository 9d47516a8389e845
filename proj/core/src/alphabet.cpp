#include "liebasis/alphabet.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace liebasis {

namespace {

const std::string kForbidden = ".|,[]()<>\t\n\r ";

bool valid_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (kForbidden.find(c) != std::string::npos) return false;
    return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw InputError("alphabet must contain at least one letter");
    std::set<std::string> seen;
    single_char_ = true;
    for (const auto& t : tokens_) {
        if (!valid_token(t))
            throw InputError("invalid alphabet token '" + t + "'");
        if (!seen.insert(t).second)
            throw InputError("duplicate alphabet token '" + t + "'");
        if (t.size() != 1) single_char_ = false;
    }
}

Alphabet Alphabet::parse(const std::string& spec) {
    std::vector<std::string> tokens;
    std::string cur;
    std::istringstream in(spec);
    while (std::getline(in, cur, ','))
        tokens.push_back(cur);
    if (!spec.empty() && spec.back() == ',')
        throw InputError("trailing comma in alphabet spec '" + spec + "'");
    return Alphabet(std::move(tokens));
}

int Alphabet::index_of(const std::string& token) const {
    for (int i = 0; i < size(); ++i)
        if (tokens_[i] == token) return i;
    return -1;
}

Word Word::rotated(int by) const {
    const int n = size();
    if (n == 0) return *this;
    by = ((by % n) + n) % n;
    std::vector<int> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(letters[(i + by) % n]);
    return Word(std::move(out));
}

long long MultiDegree::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0LL);
}

MultiDegree multidegree_of(const Word& w, int alphabet_size) {
    MultiDegree md;
    md.counts.assign(alphabet_size, 0);
    for (int l : w.letters) md.counts.at(l)++;
    return md;
}

std::string format_word(const Alphabet& a, const Word& w) {
    std::string out;
    for (int i = 0; i < w.size(); ++i) {
        if (i > 0 && !a.single_char()) out += '.';
        out += a.token(w[i]);
    }
    return out;
}

Word parse_word(const Alphabet& a, const std::string& text) {
    std::vector<int> letters;
    if (text.find('.') != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, '.')) {
            int idx = a.index_of(tok);
            if (idx < 0) throw InputError("unknown letter '" + tok + "' in word '" + text + "'");
            letters.push_back(idx);
        }
    } else {
        if (!a.single_char() && !text.empty()) {
            // Whole text might still be a single multi-character letter.
            int idx = a.index_of(text);
            if (idx >= 0) return Word({idx});
            throw InputError("word '" + text +
                             "' needs dot-separated letters for a multi-character alphabet");
        }
        for (char c : text) {
            int idx = a.index_of(std::string(1, c));
            if (idx < 0)
                throw InputError("unknown letter '" + std::string(1, c) + "' in word '" + text + "'");
            letters.push_back(idx);
        }
    }
    return Word(std::move(letters));
}

MultiDegree parse_multidegree(const std::string& text, int alphabet_size) {
    std::vector<long long> counts;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            counts.push_back(v);
        } catch (const std::exception&) {
            throw InputError("invalid multidegree entry '" + tok + "'");
        }
    }
    if (static_cast<int>(counts.size()) != alphabet_size)
        throw InputError("multidegree '" + text + "' has " + std::to_string(counts.size()) +
                         " entries for an alphabet of size " + std::to_string(alphabet_size));
    return MultiDegree(std::move(counts));
}

std::string format_multidegree(const MultiDegree& md) {
    std::string out;
    for (size_t i = 0; i < md.counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(md.counts[i]);
    }
    return out;
}

}  // namespace liebasis
