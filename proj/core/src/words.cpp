#include "liebasis/words.hpp"

#include <algorithm>
#include <numeric>

namespace liebasis {

// ---------------------------------------------------------------------------
// Orders
// ---------------------------------------------------------------------------

std::optional<std::vector<Word>> block_factorization(const Word& w) {
    if (w.empty()) return std::nullopt;
    const int c = w[0];
    std::vector<Word> blocks;
    int i = 0;
    const int n = w.size();
    while (i < n) {
        std::vector<int> block;
        while (i < n && w[i] == c) block.push_back(w[i++]);
        if (i == n) return std::nullopt;  // trailing run of the first letter
        while (i < n && w[i] != c) block.push_back(w[i++]);
        blocks.emplace_back(std::move(block));
    }
    return blocks;
}

std::strong_ordering compare_simple_block(const Word& a, const Word& b) {
    if (auto c = a[0] <=> b[0]; c != 0) return c;
    auto run = [](const Word& w) {
        int k = 0;
        while (k < w.size() && w[k] == w[0]) ++k;
        return k;
    };
    const int ra = run(a);
    const int rb = run(b);
    if (auto c = rb <=> ra; c != 0) return c;  // longer leading run first
    if (auto c = (a.size() - ra) <=> (b.size() - rb); c != 0) return c;
    return a.letters <=> b.letters;
}

std::strong_ordering compare_block(const Word& a, const Word& b) {
    if (a.empty() || b.empty()) return a.size() <=> b.size();
    if (auto c = a[0] <=> b[0]; c != 0) return c;
    const auto ba = block_factorization(a);
    const auto bb = block_factorization(b);
    if (ba.has_value() != bb.has_value())
        return ba.has_value() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (ba && bb) {
        if (auto c = ba->size() <=> bb->size(); c != 0) return c;
        for (size_t i = 0; i < ba->size(); ++i)
            if (auto c = compare_simple_block((*ba)[i], (*bb)[i]); c != 0) return c;
        return std::strong_ordering::equal;
    }
    return a.letters <=> b.letters;
}

std::strong_ordering compare_words(const Word& a, const Word& b, WordOrder order) {
    switch (order) {
        case WordOrder::Lex:
            return a.letters <=> b.letters;
        case WordOrder::DegLex:
            if (auto c = a.size() <=> b.size(); c != 0) return c;
            return a.letters <=> b.letters;
        case WordOrder::Block:
            return compare_block(a, b);
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Cyclically minimal words
// ---------------------------------------------------------------------------

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (int by = 1; by < w.size(); ++by)
        if (w.rotated(by) <= w) return false;
    return true;
}

bool is_bhat(const Word& w) {
    if (w.empty()) return false;
    for (int by = 1; by < w.size(); ++by)
        if (compare_block(w.rotated(by), w) <= 0) return false;
    return true;
}

std::vector<Word> lyndon_words(int alphabet_size, int length) {
    std::vector<Word> out;
    if (alphabet_size < 1 || length < 1) return out;
    // Duval's generation: every word emitted at the top of the loop is
    // dictionary-minimal among its rotations and aperiodic, and words come
    // out in dictionary order.
    std::vector<int> w{0};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == length) out.emplace_back(w);
        const int m = static_cast<int>(w.size());
        w.resize(length);
        for (int i = m; i < length; ++i) w[i] = w[i - m];
        while (!w.empty() && w.back() == alphabet_size - 1) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

namespace {

std::vector<Word> words_of_multidegree(const MultiDegree& md) {
    std::vector<int> base;
    for (size_t i = 0; i < md.counts.size(); ++i)
        for (long long k = 0; k < md.counts[i]; ++k) base.push_back(static_cast<int>(i));
    std::vector<Word> out;
    if (base.empty()) return out;
    do {
        out.emplace_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace

std::vector<Word> lyndon_words(const MultiDegree& md) {
    std::vector<Word> out;
    const int d = static_cast<int>(md.counts.size());
    for (const Word& w : lyndon_words(d, static_cast<int>(md.total())))
        if (multidegree_of(w, d) == md) out.push_back(w);
    return out;
}

std::vector<Word> bhat_words(int alphabet_size, int length) {
    std::vector<Word> out;
    if (alphabet_size < 1 || length < 1) return out;
    std::vector<int> w(length, 0);
    while (true) {
        Word cand(w);
        if (is_bhat(cand)) out.push_back(std::move(cand));
        int i = length - 1;
        while (i >= 0 && w[i] == alphabet_size - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    std::sort(out.begin(), out.end(),
              [](const Word& a, const Word& b) { return compare_block(a, b) < 0; });
    return out;
}

std::vector<Word> bhat_words(const MultiDegree& md) {
    std::vector<Word> out;
    for (const Word& w : words_of_multidegree(md))
        if (is_bhat(w)) out.push_back(w);
    std::sort(out.begin(), out.end(),
              [](const Word& a, const Word& b) { return compare_block(a, b) < 0; });
    return out;
}

// ---------------------------------------------------------------------------
// Dimension counts
// ---------------------------------------------------------------------------

namespace {

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

Int factorial(long long n) {
    Int f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

Int ipow(Int base, long long e) {
    Int r = 1;
    for (long long i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Int witt_count(int alphabet_size, int length) {
    if (length < 1) return 0;
    Int sum = 0;
    for (int m = 1; m <= length; ++m) {
        if (length % m) continue;
        sum += Int(moebius(m)) * ipow(alphabet_size, length / m);
    }
    return sum / length;
}

Int fine_witt_count(const MultiDegree& md) {
    const long long n = md.total();
    if (n < 1) return 0;
    long long g = 0;
    for (long long c : md.counts)
        if (c > 0) g = std::gcd(g, c);
    Int sum = 0;
    for (long long m = 1; m <= g; ++m) {
        if (g % m) continue;
        Int term = factorial(n / m);
        for (long long c : md.counts)
            if (c > 0) term /= factorial(c / m);
        sum += Int(moebius(static_cast<int>(m))) * term;
    }
    return sum / n;
}

// ---------------------------------------------------------------------------
// Graded decomposition
// ---------------------------------------------------------------------------

Word GradedDecomposition::flatten() const {
    if (level == 0) return Word({letter});
    std::vector<int> out;
    const Word h = head->flatten();
    for (int i = 0; i < exponent; ++i)
        out.insert(out.end(), h.letters.begin(), h.letters.end());
    for (const auto& t : tail) {
        const Word f = t->flatten();
        out.insert(out.end(), f.letters.begin(), f.letters.end());
    }
    return Word(std::move(out));
}

GradingPtr try_simple_grade(const Word& w) {
    if (w.empty()) return nullptr;
    std::vector<GradingPtr> seq;
    std::vector<Word> flat;
    seq.reserve(w.size());
    for (int l : w.letters) {
        auto node = std::make_shared<GradedDecomposition>();
        node->level = 0;
        node->letter = l;
        seq.push_back(std::move(node));
        flat.emplace_back(std::vector<int>{l});
    }
    while (seq.size() > 1) {
        // Group the sequence into items one level up.  Every group must start
        // with the leading item: a maximal run of it followed by at least one
        // other item.
        const Word& x = flat[0];
        const GradingPtr head = seq[0];
        std::vector<GradingPtr> next_seq;
        std::vector<Word> next_flat;
        size_t i = 0;
        while (i < seq.size()) {
            if (flat[i] != x) return nullptr;
            int k = 0;
            while (i < seq.size() && flat[i] == x) {
                ++k;
                ++i;
            }
            auto node = std::make_shared<GradedDecomposition>();
            node->level = head->level + 1;
            node->head = head;
            node->exponent = k;
            std::vector<int> letters;
            for (int c = 0; c < k; ++c)
                letters.insert(letters.end(), x.letters.begin(), x.letters.end());
            while (i < seq.size() && flat[i] != x) {
                node->tail.push_back(seq[i]);
                letters.insert(letters.end(), flat[i].letters.begin(), flat[i].letters.end());
                ++i;
            }
            if (node->tail.empty()) return nullptr;
            next_seq.push_back(std::move(node));
            next_flat.emplace_back(std::move(letters));
        }
        seq = std::move(next_seq);
        flat = std::move(next_flat);
    }
    return seq[0];
}

GradingPtr simple_grade(const Word& w) {
    GradingPtr g = try_simple_grade(w);
    if (!g) throw InputError("word has no graded decomposition");
    return g;
}

std::optional<int> grading_level(const Word& w) {
    GradingPtr g = try_simple_grade(w);
    if (!g) return std::nullopt;
    return g->level;
}

std::string format_grading(const Alphabet& a, const GradedDecomposition& g) {
    if (g.level == 0) return a.token(g.letter);
    if (g.level == 1) return "(" + format_word(a, g.flatten()) + ")";
    std::string out = "(";
    const std::string h = format_grading(a, *g.head);
    for (int i = 0; i < g.exponent; ++i) out += h;
    for (const auto& t : g.tail) out += format_grading(a, *t);
    out += ")";
    return out;
}

}  // namespace liebasis
