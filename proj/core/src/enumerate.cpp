#include "liebasis/enumerate.hpp"

#include <algorithm>
#include <map>

namespace liebasis {

std::vector<MultiDegree> all_multidegrees(int alphabet_size, long long total) {
    std::vector<MultiDegree> out;
    std::vector<long long> counts(alphabet_size, 0);
    // Recursive composition enumeration, lexicographic in the count vector.
    auto rec = [&](auto&& self, int pos, long long remaining) -> void {
        if (pos == alphabet_size - 1) {
            counts[pos] = remaining;
            out.emplace_back(counts);
            return;
        }
        for (long long c = 0; c <= remaining; ++c) {
            counts[pos] = c;
            self(self, pos + 1, remaining - c);
        }
    };
    if (alphabet_size >= 1) rec(rec, 0, total);
    return out;
}

namespace {

bool md_positive(const MultiDegree& md) {
    return std::any_of(md.counts.begin(), md.counts.end(), [](long long c) { return c > 0; });
}

}  // namespace

std::vector<Tree> all_trees(const Alphabet& a, const MultiDegree& md) {
    std::vector<Tree> out;
    const long long n = md.total();
    if (n == 1) {
        for (size_t i = 0; i < md.counts.size(); ++i)
            if (md.counts[i] == 1) out.push_back(Tree::leaf(a.token(static_cast<int>(i))));
        return out;
    }
    if (n < 1) return out;
    // Split md into two nonzero halves in every way.
    std::vector<long long> low(md.counts.size(), 0);
    auto next_split = [&]() {
        for (size_t i = 0; i < low.size(); ++i) {
            if (low[i] < md.counts[i]) {
                ++low[i];
                std::fill(low.begin(), low.begin() + i, 0);
                return true;
            }
            low[i] = 0;
        }
        return false;
    };
    while (next_split()) {
        MultiDegree l{low};
        MultiDegree r = md;
        for (size_t i = 0; i < low.size(); ++i) r.counts[i] -= low[i];
        if (!md_positive(l) || !md_positive(r)) continue;
        const auto lefts = all_trees(a, l);
        const auto rights = all_trees(a, r);
        for (const Tree& tl : lefts)
            for (const Tree& tr : rights) out.push_back(Tree::node(tl, tr));
    }
    return out;
}

namespace {

// Edge list of the labelled tree encoded by a Pruefer sequence on n vertices.
std::vector<std::pair<int, int>> pruefer_edges(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(n, false);
    for (int v : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.push_back({leaf, v});
                used[leaf] = true;
                --degree[v];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[v] && degree[v] == 1) (a < 0 ? a : b) = v;
    edges.push_back({a, b});
    return edges;
}

std::vector<std::vector<std::pair<int, int>>> all_tree_shapes(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (n == 1) {
        out.push_back({});
        return out;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        out.push_back(pruefer_edges(seq, n));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

std::vector<int> base_labels(const MultiDegree& md) {
    std::vector<int> labels;
    for (size_t i = 0; i < md.counts.size(); ++i)
        for (long long k = 0; k < md.counts[i]; ++k) labels.push_back(static_cast<int>(i));
    return labels;
}

}  // namespace

std::vector<Graph> all_graphs(const Alphabet& a, const MultiDegree& md) {
    std::vector<Graph> out;
    const int n = static_cast<int>(md.total());
    if (n < 1) return out;
    std::vector<int> labels = base_labels(md);
    for (const auto& shape : all_tree_shapes(n)) {
        std::vector<int> assignment = labels;
        std::sort(assignment.begin(), assignment.end());
        do {
            const int m = n - 1;
            for (int mask = 0; mask < (1 << m); ++mask) {
                std::vector<GraphVertex> vs;
                for (int v = 0; v < n; ++v) vs.push_back({v, a.token(assignment[v])});
                std::vector<GraphEdge> es;
                for (int e = 0; e < m; ++e) {
                    auto [u, v] = shape[e];
                    if (mask & (1 << e)) std::swap(u, v);
                    es.push_back({u, v});
                }
                out.emplace_back(std::move(vs), std::move(es), 0);
            }
        } while (std::next_permutation(assignment.begin(), assignment.end()));
    }
    return out;
}

Tree random_tree(std::mt19937_64& rng, const Alphabet& a, const MultiDegree& md) {
    std::vector<int> labels = base_labels(md);
    if (labels.empty()) throw InputError("random_tree needs a nonzero multidegree");
    std::shuffle(labels.begin(), labels.end(), rng);
    // Random shape: combine two random neighbouring pieces until one remains.
    std::vector<Tree> pieces;
    for (int l : labels) pieces.push_back(Tree::leaf(a.token(l)));
    while (pieces.size() > 1) {
        std::uniform_int_distribution<size_t> pos(0, pieces.size() - 2);
        const size_t i = pos(rng);
        pieces[i] = Tree::node(pieces[i], pieces[i + 1]);
        pieces.erase(pieces.begin() + i + 1);
    }
    return pieces[0];
}

Graph random_graph(std::mt19937_64& rng, const Alphabet& a, const MultiDegree& md) {
    std::vector<int> labels = base_labels(md);
    const int n = static_cast<int>(labels.size());
    if (n < 1) throw InputError("random_graph needs a nonzero multidegree");
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<GraphVertex> vs;
    for (int v = 0; v < n; ++v) vs.push_back({v, a.token(labels[v])});
    std::vector<GraphEdge> es;
    if (n >= 2) {
        std::vector<int> seq(std::max(0, n - 2));
        std::uniform_int_distribution<int> vertex(0, n - 1);
        for (int& s : seq) s = vertex(rng);
        std::uniform_int_distribution<int> coin(0, 1);
        for (auto [u, v] : pruefer_edges(seq, n)) {
            if (coin(rng)) std::swap(u, v);
            es.push_back({u, v});
        }
    }
    std::uniform_int_distribution<int> pv(0, n - 1);
    return Graph(std::move(vs), std::move(es), pv(rng));
}

}  // namespace liebasis
