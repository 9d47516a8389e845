#include "liebasis/pairing.hpp"

#include <algorithm>

namespace liebasis {

std::vector<EdgeImage> beta_map(const Graph& g, const Tree& t, const LeafAssignment& a) {
    if (g.size() != t.leaf_count())
        throw InputError("graph and tree sizes differ: " + std::to_string(g.size()) + " vs " +
                         std::to_string(t.leaf_count()));
    const TreeIndex idx = index_tree(t);
    std::vector<EdgeImage> out;
    out.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        const int src = a.at(e.from);
        const int dst = a.at(e.to);
        out.push_back({idx.lowest_common_ancestor(src, dst), src < dst ? +1 : -1});
    }
    return out;
}

int pair_sigma(const Graph& g, const Tree& t, const LeafAssignment& a) {
    const auto images = beta_map(g, t, a);
    // |edges| = |internal vertices|, so covering all of them means the edge
    // images are pairwise distinct.
    std::vector<int> nodes;
    int sign = 1;
    for (const auto& im : images) {
        if (std::find(nodes.begin(), nodes.end(), im.internal_node) != nodes.end()) return 0;
        nodes.push_back(im.internal_node);
        sign *= im.sign;
    }
    return sign;
}

namespace {

// Vertex ids and leaf positions grouped by shared label, in a fixed order.
struct LabelClasses {
    bool compatible = false;
    std::vector<std::vector<int>> vertex_ids;
    std::vector<std::vector<int>> leaf_positions;
};

LabelClasses split_by_label(const Graph& g, const Tree& t) {
    LabelClasses out;
    std::map<std::string, std::vector<int>> by_label_g;
    for (const auto& v : g.vertices()) by_label_g[v.label].push_back(v.id);
    std::map<std::string, std::vector<int>> by_label_t;
    const auto labels = t.leaf_labels();
    for (size_t i = 0; i < labels.size(); ++i)
        by_label_t[labels[i]].push_back(static_cast<int>(i));
    if (by_label_g.size() != by_label_t.size()) return out;
    for (const auto& [label, ids] : by_label_g) {
        auto it = by_label_t.find(label);
        if (it == by_label_t.end() || it->second.size() != ids.size()) return out;
        out.vertex_ids.push_back(ids);
        out.leaf_positions.push_back(it->second);
    }
    out.compatible = true;
    return out;
}

}  // namespace

Int pair(const Graph& g, const Tree& t) {
    if (g.size() != t.leaf_count()) return 0;
    LabelClasses classes = split_by_label(g, t);
    if (!classes.compatible) return 0;

    // Enumerate the product of within-class bijections.
    std::vector<std::vector<int>> perms = classes.leaf_positions;  // each kept sorted/permuted
    Int sum = 0;
    LeafAssignment assignment;
    const size_t k = perms.size();

    // Odometer over per-class permutations; next_permutation wraps each class
    // back to sorted order when it carries.
    auto fill_assignment = [&]() {
        assignment.clear();
        for (size_t c = 0; c < k; ++c)
            for (size_t i = 0; i < perms[c].size(); ++i)
                assignment[classes.vertex_ids[c][i]] = perms[c][i];
    };
    while (true) {
        fill_assignment();
        sum += pair_sigma(g, t, assignment);
        size_t c = 0;
        while (c < k && !std::next_permutation(perms[c].begin(), perms[c].end())) ++c;
        if (c == k) break;
    }
    return sum;
}

Int pair_recursive(const Graph& g, const Tree& t) {
    if (g.size() != t.leaf_count()) return 0;
    if (t.is_leaf())
        return g.vertices()[0].label == t.label() ? 1 : 0;
    if (g.label_multiset() != [&] {
            auto ls = t.leaf_labels();
            std::sort(ls.begin(), ls.end());
            return ls;
        }())
        return 0;
    const Tree t1 = t.left();
    const Tree t2 = t.right();
    Int sum = 0;
    for (const auto& cut : cobracket(g)) {
        if (cut.left.size() != t1.leaf_count()) continue;
        const Int a = pair_recursive(cut.left, t1);
        if (a == 0) continue;
        sum += cut.sign * a * pair_recursive(cut.right, t2);
    }
    return sum;
}

Int pair_bar(const BarWord& w, const LieElement& e) {
    const NCPolynomial p = expand_brackets(e);
    auto it = p.find(w.letters);
    return it == p.end() ? Int(0) : it->second;
}

Int pair_elements(const CoElement& c, const LieElement& e, BarRoute route) {
    Int sum = 0;
    for (const auto& [term, coeff] : c.terms()) {
        if (const auto* bar = std::get_if<BarWord>(&term)) {
            if (route == BarRoute::WordCoefficient) {
                sum += coeff * pair_bar(*bar, e);
                continue;
            }
            const Graph g = as_long_graph(*bar);
            for (const auto& [t, ct] : e.terms()) sum += coeff * ct * pair(g, t);
            continue;
        }
        const Graph& g = std::get<Graph>(term);
        for (const auto& [t, ct] : e.terms()) sum += coeff * ct * pair(g, t);
    }
    return sum;
}

}  // namespace liebasis
