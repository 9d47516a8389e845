#pragma once

#include "liebasis/types.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace liebasis {

// A binary tree with leaves labelled by letters (stored as label strings).
// Trees are immutable values with structural sharing; internal vertices are
// ordered pairs, so [A,B] and [B,A] are distinct.
class Tree {
public:
    // Leaf carrying a single letter.
    static Tree leaf(std::string label);
    // Internal vertex with the given ordered children.
    static Tree node(Tree left, Tree right);

    bool is_leaf() const;
    const std::string& label() const;  // leaves only
    Tree left() const;                 // internal only
    Tree right() const;                // internal only

    int leaf_count() const;

    // Leaf labels in left-to-right order.
    std::vector<std::string> leaf_labels() const;

    // Structural comparison; leaves sort before internal vertices, leaves by
    // label, internal vertices by (left, right).
    std::strong_ordering operator<=>(const Tree& other) const;
    bool operator==(const Tree& other) const { return (*this <=> other) == 0; }

private:
    Tree() = default;  // only leaf()/node() create trees

    struct Node;
    std::shared_ptr<const Node> node_;
};

// Bracket syntax: a leaf is a bare label, an internal vertex is "[A,B]".
// Whitespace between tokens is ignored.
std::string format_tree(const Tree& t);
Tree parse_tree(const std::string& text);

// Flattened view used by the pairing: leaves indexed left to right, internal
// vertices by discovery order, parent/depth links for ancestor walks.
struct TreeIndex {
    // parent[v] and depth[v] are indexed by vertex id; id 0 is the root.
    std::vector<int> parent;
    std::vector<int> depth;
    std::vector<int> leaf_vertex;        // leaf position -> vertex id
    std::vector<std::string> leaf_label; // leaf position -> label
    int internal_count = 0;

    int lowest_common_ancestor(int leaf_a, int leaf_b) const;
};

TreeIndex index_tree(const Tree& t);

}  // namespace liebasis
