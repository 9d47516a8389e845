#include "liebasis/pairing.hpp"

#include "liebasis/enumerate.hpp"

#include <doctest.h>

#include <string>

using namespace liebasis;

namespace {

const Alphabet kAB = Alphabet::parse("a,b");

Graph path3(const std::string& a, const std::string& b, const std::string& c) {
    return Graph({{0, a}, {1, b}, {2, c}}, {{0, 1}, {1, 2}}, 0);
}

}  // namespace

TEST_CASE("three-vertex path against three-leaf trees") {
    // frozen worked values for the bijection-sum definition
    CHECK(pair(path3("b", "a", "b"), parse_tree("[[a,b],b]")) == -2);
    CHECK(pair(path3("a", "b", "b"), parse_tree("[[a,b],b]")) == 1);
    CHECK(pair(path3("a", "b", "b"), parse_tree("[[b,b],a]")) == 0);
}

TEST_CASE("label multiset mismatch pairs to zero") {
    CHECK(pair(path3("a", "a", "b"), parse_tree("[[a,b],b]")) == 0);
    CHECK(pair(path3("a", "b", "b"), parse_tree("[a,b]")) == 0);
}

TEST_CASE("single vertex against a leaf") {
    const Graph v({{0, "a"}}, {}, 0);
    CHECK(pair(v, Tree::leaf("a")) == 1);
    CHECK(pair(v, Tree::leaf("b")) == 0);
}

TEST_CASE("edge images and signs") {
    // path a->b->c against [[a,b],c]: identity assignment sends a,b,c to
    // leaves 0,1,2; both edges point left-to-right so both signs are +1
    const Graph g = path3("a", "b", "c");
    const Tree t = parse_tree("[[a,b],c]");
    const LeafAssignment id = {{0, 0}, {1, 1}, {2, 2}};
    const auto images = beta_map(g, t, id);
    REQUIRE(images.size() == 2);
    CHECK(images[0].sign == 1);
    CHECK(images[1].sign == 1);
    CHECK(images[0].internal_node != images[1].internal_node);
    CHECK(pair_sigma(g, t, id) == 1);

    // both edges collapse onto the root: surjectivity fails, value 0
    const Tree u = parse_tree("[[a,c],b]");
    const LeafAssignment swap = {{0, 0}, {1, 2}, {2, 1}};
    CHECK(pair_sigma(g, u, swap) == 0);
}

TEST_CASE("recursive pairing agrees with the bijection sum") {
    const Alphabet a3 = Alphabet::parse("a,b,c");
    for (const MultiDegree& md :
         {MultiDegree({2, 1, 0}), MultiDegree({1, 1, 1}), MultiDegree({2, 2, 0})}) {
        for (const Graph& g : all_graphs(a3, md))
            for (const Tree& t : all_trees(a3, md)) CHECK(pair(g, t) == pair_recursive(g, t));
    }
}

TEST_CASE("bar pairing extracts word coefficients") {
    // <a|b, [a,b]> = 1, <b|a, [a,b]> = -1
    CHECK(pair_bar(BarWord::parse(kAB, "a|b"), LieElement(parse_tree("[a,b]"))) == 1);
    CHECK(pair_bar(BarWord::parse(kAB, "b|a"), LieElement(parse_tree("[a,b]"))) == -1);
    // matches the long-graph route
    const BarWord w = BarWord::parse(kAB, "a|b|a|b");
    const LieElement e(parse_tree("[[[a,b],a],b]"), 3);
    CHECK(pair_bar(w, e) == pair_elements(CoElement(w), e, BarRoute::LongGraph));
}

TEST_CASE("pairing is bilinear") {
    const Graph g = path3("a", "b", "b");
    const Tree t1 = parse_tree("[[a,b],b]");
    const Tree t2 = parse_tree("[[b,b],a]");
    LieElement e(t1, 5);
    e.add(t2, -7);
    CoElement c(g, 2);
    CHECK(pair_elements(c, e) == 2 * (5 * pair(g, t1) - 7 * pair(g, t2)));
}
