#include "liebasis/lie.hpp"

#include <doctest.h>

#include <string>

using namespace liebasis;

namespace {

const Alphabet kXY = Alphabet::parse("x,y");
const Alphabet kNum = Alphabet::parse("1,2,3");

std::string bracket_text(const Alphabet& a, const std::string& word_text) {
    return format_tree(config_bracketing(a, parse_word(a, word_text)));
}

}  // namespace

TEST_CASE("configuration bracketing of small words") {
    CHECK(bracket_text(kNum, "1") == "1");
    CHECK(bracket_text(kNum, "12") == "[2,1]");
    CHECK(bracket_text(kNum, "112") == "[[2,1],1]");
    CHECK(bracket_text(kNum, "123") == "[[2,1],3]");
    CHECK_THROWS_AS(config_bracketing(kNum, parse_word(kNum, "11")), InputError);
}

TEST_CASE("configuration bracketing of a two-level word") {
    // xyxyy = (xy)(xyy): bracket the image of (xyy) with one copy of [y,x]
    CHECK(bracket_text(kXY, "xyxyy") == "[[[y,x],y],[y,x]]");
}

TEST_CASE("standard bracketing") {
    const Alphabet& a = kXY;
    CHECK(format_tree(classical_bracketing(a, parse_word(a, "xy"))) == "[x,y]");
    CHECK(format_tree(classical_bracketing(a, parse_word(a, "xxy"))) == "[x,[x,y]]");
    CHECK(format_tree(classical_bracketing(a, parse_word(a, "xxxyyyy"))) ==
          "[x,[x,[[[[x,y],y],y],y]]]");
    CHECK_THROWS_AS(classical_bracketing(a, parse_word(a, "yx")), InputError);
}

TEST_CASE("lie elements collect and cancel") {
    const Tree t = parse_tree("[x,y]");
    LieElement e(t);
    e.add(t, 2);
    CHECK(e.terms().at(t) == 3);
    e.add(t, -3);
    CHECK(e.is_zero());

    const LieElement b = bracket(LieElement(Tree::leaf("x")), LieElement(Tree::leaf("y")));
    CHECK(b.terms().size() == 1);
    CHECK(b.terms().begin()->first == t);
}

TEST_CASE("bracket expansion in the free associative algebra") {
    const NCPolynomial p = expand_brackets(parse_tree("[x,y]"));
    CHECK(p.size() == 2);
    CHECK(p.at(NCWord{"x", "y"}) == 1);
    CHECK(p.at(NCWord{"y", "x"}) == -1);

    // coefficients of any expanded bracket sum to zero
    const NCPolynomial q = expand_brackets(parse_tree("[[[x,y],y],[x,[x,y]]]"));
    Int total = 0;
    for (const auto& [w, c] : q) total += c;
    CHECK(total == 0);

    // leading coefficient of the standard bracketing of xxy
    const NCPolynomial r = expand_brackets(parse_tree("[x,[x,y]]"));
    CHECK(r.at(NCWord{"x", "x", "y"}) == 1);
    CHECK(r.at(NCWord{"y", "x", "x"}) == 1);
    CHECK(r.at(NCWord{"x", "y", "x"}) == -2);
}

TEST_CASE("jacobiator and antisymmetrizer shapes") {
    const Tree x = Tree::leaf("x"), y = Tree::leaf("y"), z = Tree::leaf("z");
    const LieElement j = jacobiator(x, y, z);
    CHECK(j.terms().size() == 3);
    // the jacobiator expands to zero in the associative algebra
    const NCPolynomial p = expand_brackets(j);
    CHECK(p.empty());

    const LieElement s = antisymmetrizer(x, y);
    CHECK(expand_brackets(s).empty());
}
