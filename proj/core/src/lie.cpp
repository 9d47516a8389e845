#include "liebasis/lie.hpp"

namespace liebasis {

void LieElement::add(const Tree& t, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(t, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void LieElement::add(const LieElement& other, const Int& scale) {
    for (const auto& [t, c] : other.terms_) add(t, c * scale);
}

LieElement bracket(const LieElement& a, const LieElement& b) {
    LieElement out;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms())
            out.add(Tree::node(ta, tb), ca * cb);
    return out;
}

LieElement jacobiator(const Tree& a, const Tree& b, const Tree& c) {
    LieElement out;
    out.add(Tree::node(a, Tree::node(b, c)), 1);
    out.add(Tree::node(b, Tree::node(c, a)), 1);
    out.add(Tree::node(c, Tree::node(a, b)), 1);
    return out;
}

LieElement antisymmetrizer(const Tree& a, const Tree& b) {
    LieElement out;
    out.add(Tree::node(a, b), 1);
    out.add(Tree::node(b, a), 1);
    return out;
}

Tree config_bracketing(const Alphabet& a, const GradedDecomposition& g) {
    if (g.level == 0) return Tree::leaf(a.token(g.letter));
    const Tree head = config_bracketing(a, *g.head);
    Tree t = config_bracketing(a, *g.tail[0]);
    for (int i = 0; i < g.exponent; ++i) t = Tree::node(t, head);
    for (size_t i = 1; i < g.tail.size(); ++i)
        t = Tree::node(t, config_bracketing(a, *g.tail[i]));
    return t;
}

Tree config_bracketing(const Alphabet& a, const Word& w) {
    return config_bracketing(a, *simple_grade(w));
}

namespace {

Tree classical_rec(const Alphabet& a, const Word& w) {
    if (w.size() == 1) return Tree::leaf(a.token(w[0]));
    // Split before the smallest proper nonempty suffix.
    int best = 1;
    for (int i = 2; i < w.size(); ++i) {
        std::vector<int> cand(w.letters.begin() + i, w.letters.end());
        std::vector<int> cur(w.letters.begin() + best, w.letters.end());
        if (cand < cur) best = i;
    }
    Word u(std::vector<int>(w.letters.begin(), w.letters.begin() + best));
    Word v(std::vector<int>(w.letters.begin() + best, w.letters.end()));
    return Tree::node(classical_rec(a, u), classical_rec(a, v));
}

}  // namespace

Tree classical_bracketing(const Alphabet& a, const Word& w) {
    if (!is_lyndon(w))
        throw InputError("classical bracketing needs a dictionary-minimal aperiodic word, got '" +
                         format_word(a, w) + "'");
    return classical_rec(a, w);
}

namespace {

NCPolynomial nc_mul(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            NCWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            Int& c = out[w];
            c += ca * cb;
            if (c == 0) out.erase(w);
        }
    return out;
}

}  // namespace

NCPolynomial expand_brackets(const Tree& t) {
    if (t.is_leaf()) return {{NCWord{t.label()}, Int(1)}};
    const NCPolynomial l = expand_brackets(t.left());
    const NCPolynomial r = expand_brackets(t.right());
    NCPolynomial out = nc_mul(l, r);
    for (const auto& [w, c] : nc_mul(r, l)) {
        Int& v = out[w];
        v -= c;
        if (v == 0) out.erase(w);
    }
    return out;
}

NCPolynomial expand_brackets(const LieElement& e) {
    NCPolynomial out;
    for (const auto& [t, c] : e.terms())
        for (const auto& [w, cw] : expand_brackets(t)) {
            Int& v = out[w];
            v += c * cw;
            if (v == 0) out.erase(w);
        }
    return out;
}

}  // namespace liebasis
