#include "liebasis/graph.hpp"

#include "liebasis/coalg.hpp"
#include "liebasis/words.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

using namespace liebasis;

namespace {

Graph path3(const std::string& a, const std::string& b, const std::string& c) {
    return Graph({{0, a}, {1, b}, {2, c}}, {{0, 1}, {1, 2}}, 0);
}

}  // namespace

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph({}, {}, 0), InputError);                            // empty
    CHECK_THROWS_AS(Graph({{0, "x"}, {0, "y"}}, {{0, 0}}, 0), InputError);    // dup id
    CHECK_THROWS_AS(Graph({{0, "x"}, {1, "y"}}, {{0, 1}}, 7), InputError);    // bad pivot
    CHECK_THROWS_AS(Graph({{0, "x"}, {1, "y"}}, {}, 0), InputError);          // disconnected
    CHECK_THROWS_AS(Graph({{0, "x"}}, {{0, 0}}, 0), InputError);              // loop
    CHECK_THROWS_AS(
        Graph({{0, "x"}, {1, "y"}, {2, "z"}}, {{0, 1}, {1, 0}}, 0), InputError);  // doubled
    CHECK_NOTHROW(path3("x", "y", "z"));
}

TEST_CASE("canonical serialization ignores vertex numbering") {
    const Graph g = path3("x", "y", "z");
    const Graph h({{5, "y"}, {9, "x"}, {2, "z"}}, {{9, 5}, {5, 2}}, 9);
    CHECK(g.canonical_string() == h.canonical_string());

    // reversing an edge changes the graph
    const Graph r({{0, "x"}, {1, "y"}, {2, "z"}}, {{1, 0}, {1, 2}}, 0);
    CHECK(g.canonical_string() != r.canonical_string());

    // moving the pivot changes the graph
    const Graph p({{0, "x"}, {1, "y"}, {2, "z"}}, {{0, 1}, {1, 2}}, 1);
    CHECK(g.canonical_string() != p.canonical_string());
}

TEST_CASE("canonical serialization separates the basis graphs") {
    // within each multidegree all basis graphs must be pairwise distinct
    const Alphabet a = Alphabet::parse("x,y");
    for (int n = 1; n <= 7; ++n) {
        const auto ws = lyndon_words(2, n);
        std::set<std::string> seen;
        for (const Word& w : ws) seen.insert(config_graph(a, w).canonical_string());
        CHECK(seen.size() == ws.size());
    }
}

TEST_CASE("json round trip") {
    const Graph g = path3("x", "y", "z");
    const Graph back = Graph::from_json(g.to_json());
    CHECK(back.canonical_string() == g.canonical_string());
    CHECK(back.pivot_id() == g.pivot_id());
    CHECK_THROWS_AS(Graph::from_json("{"), InputError);
    CHECK_THROWS_AS(Graph::from_json("{\"vertices\":[]}"), InputError);
}

TEST_CASE("traversal order starts at the pivot") {
    const Graph g({{3, "x"}, {1, "y"}, {2, "z"}}, {{1, 3}, {1, 2}}, 1);
    const auto order = g.traversal_order();
    CHECK(order.size() == 3);
    CHECK(order[0] == 1);
    CHECK(g.label_multiset() == std::vector<std::string>{"x", "y", "z"});
}
