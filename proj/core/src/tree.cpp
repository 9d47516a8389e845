#include "liebasis/tree.hpp"

#include <cctype>

namespace liebasis {

struct Tree::Node {
    std::string label;  // nonempty exactly for leaves
    std::shared_ptr<const Node> left, right;
    int leaves = 1;
};

Tree Tree::leaf(std::string label) {
    auto n = std::make_shared<Node>();
    n->label = std::move(label);
    if (n->label.empty()) throw InputError("leaf label must be nonempty");
    Tree t;
    t.node_ = std::move(n);
    return t;
}

Tree Tree::node(Tree left, Tree right) {
    auto n = std::make_shared<Node>();
    n->left = left.node_;
    n->right = right.node_;
    n->leaves = n->left->leaves + n->right->leaves;
    Tree t;
    t.node_ = std::move(n);
    return t;
}

bool Tree::is_leaf() const { return node_->left == nullptr; }

const std::string& Tree::label() const {
    if (!is_leaf()) throw InputError("label() on internal vertex");
    return node_->label;
}

Tree Tree::left() const {
    if (is_leaf()) throw InputError("left() on leaf");
    Tree t;
    t.node_ = node_->left;
    return t;
}

Tree Tree::right() const {
    if (is_leaf()) throw InputError("right() on leaf");
    Tree t;
    t.node_ = node_->right;
    return t;
}

int Tree::leaf_count() const { return node_->leaves; }

namespace {

void collect_labels(const Tree& t, std::vector<std::string>& out) {
    if (t.is_leaf()) {
        out.push_back(t.label());
        return;
    }
    collect_labels(t.left(), out);
    collect_labels(t.right(), out);
}

}  // namespace

std::vector<std::string> Tree::leaf_labels() const {
    std::vector<std::string> out;
    out.reserve(leaf_count());
    collect_labels(*this, out);
    return out;
}

std::strong_ordering Tree::operator<=>(const Tree& other) const {
    if (node_ == other.node_) return std::strong_ordering::equal;
    const bool la = is_leaf(), lb = other.is_leaf();
    if (la != lb) return la ? std::strong_ordering::less : std::strong_ordering::greater;
    if (la) return node_->label <=> other.node_->label;
    if (auto c = left() <=> other.left(); c != 0) return c;
    return right() <=> other.right();
}

std::string format_tree(const Tree& t) {
    if (t.is_leaf()) return t.label();
    return "[" + format_tree(t.left()) + "," + format_tree(t.right()) + "]";
}

namespace {

struct TreeParser {
    const std::string& s;
    size_t pos = 0;

    explicit TreeParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("tree '" + s + "': " + msg + " at position " + std::to_string(pos));
    }

    Tree parse() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s[pos] == '[') {
            ++pos;
            Tree left = parse();
            skip_ws();
            if (pos >= s.size() || s[pos] != ',') fail("expected ','");
            ++pos;
            Tree right = parse();
            skip_ws();
            if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
            ++pos;
            return Tree::node(std::move(left), std::move(right));
        }
        size_t start = pos;
        while (pos < s.size() && s[pos] != ',' && s[pos] != ']' && s[pos] != '[' &&
               !std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start) fail("expected a leaf label");
        return Tree::leaf(s.substr(start, pos - start));
    }
};

}  // namespace

Tree parse_tree(const std::string& text) {
    TreeParser p(text);
    Tree t = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    return t;
}

namespace {

int index_rec(const Tree& t, int parent, int depth, TreeIndex& idx) {
    const int id = static_cast<int>(idx.parent.size());
    idx.parent.push_back(parent);
    idx.depth.push_back(depth);
    if (t.is_leaf()) {
        idx.leaf_vertex.push_back(id);
        idx.leaf_label.push_back(t.label());
    } else {
        ++idx.internal_count;
        index_rec(t.left(), id, depth + 1, idx);
        index_rec(t.right(), id, depth + 1, idx);
    }
    return id;
}

}  // namespace

TreeIndex index_tree(const Tree& t) {
    TreeIndex idx;
    index_rec(t, -1, 0, idx);
    return idx;
}

int TreeIndex::lowest_common_ancestor(int leaf_a, int leaf_b) const {
    int u = leaf_vertex.at(leaf_a);
    int v = leaf_vertex.at(leaf_b);
    while (depth[u] > depth[v]) u = parent[u];
    while (depth[v] > depth[u]) v = parent[v];
    while (u != v) {
        u = parent[u];
        v = parent[v];
    }
    return u;
}

}  // namespace liebasis
