#include "liebasis/verify.hpp"

#include "liebasis/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace liebasis {

namespace {

// Balanced letter distribution: n letters spread round-robin over the
// alphabet, e.g. n=5, d=3 -> (2,2,1).
MultiDegree balanced_md(int alphabet_size, int n) {
    MultiDegree md;
    md.counts.assign(alphabet_size, 0);
    for (int i = 0; i < n; ++i) ++md.counts[i % alphabet_size];
    return md;
}

MultiDegree skewed_md(int alphabet_size, int n) {
    MultiDegree md;
    md.counts.assign(alphabet_size, 0);
    if (alphabet_size == 1 || n == 1) {
        md.counts[0] = n;
    } else {
        md.counts[0] = n - 1;
        md.counts[1] = 1;
    }
    return md;
}

std::vector<int> letters_of(const MultiDegree& md) {
    std::vector<int> out;
    for (size_t i = 0; i < md.counts.size(); ++i)
        for (long long k = 0; k < md.counts[i]; ++k) out.push_back(static_cast<int>(i));
    return out;
}

Tree left_comb(const Alphabet& a, const std::vector<int>& letters, size_t lo, size_t hi) {
    Tree t = Tree::leaf(a.token(letters[lo]));
    for (size_t i = lo + 1; i < hi; ++i) t = Tree::node(t, Tree::leaf(a.token(letters[i])));
    return t;
}

// Deterministic kernel elements for one multidegree: jacobiators and
// antisymmetrizers built from contiguous splits of the letter list.
std::vector<LieElement> kernel_elements(const Alphabet& a, const MultiDegree& md) {
    const std::vector<int> letters = letters_of(md);
    const size_t n = letters.size();
    std::vector<LieElement> out;
    if (n >= 2) {
        std::vector<size_t> cuts{1, n / 2, n - 1};
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (size_t c : cuts)
            if (c >= 1 && c < n)
                out.push_back(antisymmetrizer(left_comb(a, letters, 0, c),
                                              left_comb(a, letters, c, n)));
    }
    if (n >= 3) {
        std::vector<std::pair<size_t, size_t>> splits{{1, 2}, {1, n - 1}, {n / 3 + 1, 2 * n / 3 + 1}};
        for (auto [c1, c2] : splits) {
            if (c1 < 1 || c2 <= c1 || c2 >= n) continue;
            out.push_back(jacobiator(left_comb(a, letters, 0, c1), left_comb(a, letters, c1, c2),
                                     left_comb(a, letters, c2, n)));
        }
    }
    return out;
}

LieElement random_kernel_element(std::mt19937_64& rng, const Alphabet& a, const MultiDegree& md) {
    std::vector<int> letters = letters_of(md);
    std::shuffle(letters.begin(), letters.end(), rng);
    const size_t n = letters.size();
    auto sub_md = [&](size_t lo, size_t hi) {
        MultiDegree m;
        m.counts.assign(a.size(), 0);
        for (size_t i = lo; i < hi; ++i) ++m.counts[letters[i]];
        return m;
    };
    std::uniform_int_distribution<int> coin(0, 1);
    if (n >= 3 && coin(rng)) {
        std::uniform_int_distribution<size_t> d1(1, n - 2);
        const size_t c1 = d1(rng);
        std::uniform_int_distribution<size_t> d2(c1 + 1, n - 1);
        const size_t c2 = d2(rng);
        return jacobiator(random_tree(rng, a, sub_md(0, c1)), random_tree(rng, a, sub_md(c1, c2)),
                          random_tree(rng, a, sub_md(c2, n)));
    }
    std::uniform_int_distribution<size_t> d1(1, n - 1);
    const size_t c = d1(rng);
    return antisymmetrizer(random_tree(rng, a, sub_md(0, c)), random_tree(rng, a, sub_md(c, n)));
}

}  // namespace

Report verify_kernel(const Alphabet& a, int max_n, std::uint64_t seed) {
    Report report;
    report.name = "kernel";
    // Algebra side, exhaustive over graphs with up to 5 vertices.
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        for (const MultiDegree& md : {balanced_md(a.size(), n), skewed_md(a.size(), n)}) {
            const auto elements = kernel_elements(a, md);
            if (elements.empty()) continue;
            for (const Graph& g : all_graphs(a, md)) {
                CoElement cg(g);
                for (const LieElement& e : elements) {
                    ++report.checks;
                    const Int v = pair_elements(cg, e);
                    if (v != 0)
                        report.violation("kernel element paired to " + v.str() + " on graph " +
                                         g.canonical_string());
                }
            }
        }
    }
    // Coalgebra side, exhaustive over graphs with up to 4 vertices.
    for (int n = 2; n <= std::min(max_n, 4); ++n) {
        const MultiDegree md = balanced_md(a.size(), n);
        const auto trees = all_trees(a, md);
        for (const Graph& g : all_graphs(a, md)) {
            for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
                CoElement sum(g);
                sum.add(reverse_edge(g, e), 1);
                for (const Tree& t : trees) {
                    ++report.checks;
                    const Int v = pair_elements(sum, LieElement(t));
                    if (v != 0)
                        report.violation("arrow-reversal sum paired to " + v.str());
                }
            }
            for (const auto& e1 : g.edges())
                for (const auto& e2 : g.edges()) {
                    if (e1.to != e2.from) continue;
                    const CoElement triple = arnold_triples(g, e1.from, e1.to, e2.to);
                    for (const Tree& t : trees) {
                        ++report.checks;
                        const Int v = pair_elements(triple, LieElement(t));
                        if (v != 0)
                            report.violation("three-term relation paired to " + v.str());
                    }
                }
        }
    }
    // Randomized larger cases on both sides.
    std::mt19937_64 rng(seed);
    for (int n = 6; n <= std::min(max_n, 7); ++n) {
        const auto mds = all_multidegrees(a.size(), n);
        std::uniform_int_distribution<size_t> pick(0, mds.size() - 1);
        for (int c = 0; c < 50; ++c) {
            const MultiDegree& md = mds[pick(rng)];
            const Graph g = random_graph(rng, a, md);
            ++report.checks;
            const Int v = pair_elements(CoElement(g), random_kernel_element(rng, a, md));
            if (v != 0) report.violation("random kernel element paired to " + v.str());

            const Tree t = random_tree(rng, a, md);
            std::uniform_int_distribution<int> edge(0, static_cast<int>(g.edges().size()) - 1);
            CoElement sum(g);
            sum.add(reverse_edge(g, edge(rng)), 1);
            ++report.checks;
            const Int w = pair_elements(sum, LieElement(t));
            if (w != 0) report.violation("random arrow-reversal sum paired to " + w.str());
        }
    }
    return report;
}

Report verify_shuffle(const Alphabet& a, int max_n) {
    Report report;
    report.name = "shuffle";
    for (int n = 2; n <= max_n; ++n) {
        for (const MultiDegree& md : all_multidegrees(a.size(), n)) {
            if (md.total() != n) continue;
            // Index all words of the multidegree; expand every tree once.
            std::vector<int> base = letters_of(md);
            std::map<std::vector<std::string>, int> index;
            {
                std::vector<int> w = base;
                std::sort(w.begin(), w.end());
                int i = 0;
                do {
                    std::vector<std::string> toks;
                    for (int l : w) toks.push_back(a.token(l));
                    index[toks] = i++;
                } while (std::next_permutation(w.begin(), w.end()));
            }
            std::vector<std::vector<Int>> tree_coeffs;
            for (const Tree& t : all_trees(a, md)) {
                std::vector<Int> row(index.size(), 0);
                for (const auto& [w, c] : expand_brackets(t)) row[index.at(w)] = c;
                tree_coeffs.push_back(std::move(row));
            }
            // Every split of the multidegree into two nonempty halves; u and
            // v then range over all words of their halves.
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
                MultiDegree mu{low};
                MultiDegree mv = md;
                for (size_t i = 0; i < low.size(); ++i) mv.counts[i] -= low[i];
                if (mu.total() == 0 || mv.total() == 0) continue;
                std::vector<Word> us, vs;
                {
                    std::vector<int> lu = letters_of(mu), lv = letters_of(mv);
                    do us.emplace_back(lu);
                    while (std::next_permutation(lu.begin(), lu.end()));
                    do vs.emplace_back(lv);
                    while (std::next_permutation(lv.begin(), lv.end()));
                }
                for (const Word& u : us)
                    for (const Word& v : vs) {
                        std::vector<std::pair<int, Int>> sparse;
                        for (const auto& [term, c] : shuffle(a, u, v).terms())
                            sparse.emplace_back(index.at(std::get<BarWord>(term).letters), c);
                        for (const auto& row : tree_coeffs) {
                            ++report.checks;
                            Int dot = 0;
                            for (const auto& [i, c] : sparse) dot += c * row[i];
                            if (dot != 0)
                                report.violation("shuffle of " + format_word(a, u) + ", " +
                                                 format_word(a, v) + " paired to " + dot.str());
                        }
                    }
            }
        }
    }
    return report;
}

Report verify_oracle(const Alphabet& a, int max_n, std::uint64_t seed, int random_cases) {
    Report report;
    report.name = "oracle";
    // Basis pairs: bijection sum vs cut recursion.
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        for (const MultiDegree& md : all_multidegrees(a.size(), n)) {
            BasisFamily fam = BasisFamily::generated(FamilyKind::ConfigB, a, md);
            for (const auto& [w, tw] : fam.members) {
                const Graph g = config_graph(a, w);
                for (const auto& [u, tu] : fam.members) {
                    ++report.checks;
                    const Int direct = pair(g, tu);
                    const Int recursive = pair_recursive(g, tu);
                    if (direct != recursive)
                        report.violation("methods disagree on (" + format_word(a, w) + ", " +
                                         format_word(a, u) + "): " + direct.str() + " vs " +
                                         recursive.str());
                }
            }
        }
    }
    // Bar rows: coefficient extraction vs the long-graph routes.
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        for (const MultiDegree& md : all_multidegrees(a.size(), n)) {
            if (md.total() != n) continue;
            BasisFamily fam = BasisFamily::generated(FamilyKind::ConfigB, a, md);
            std::vector<int> letters = letters_of(md);
            std::sort(letters.begin(), letters.end());
            if (letters.empty()) continue;
            do {
                const BarWord bw = BarWord::of_word(a, Word(letters));
                const Graph lg = as_long_graph(bw);
                for (const auto& [u, tu] : fam.members) {
                    ++report.checks;
                    const Int via_words = pair_bar(bw, LieElement(tu));
                    const Int direct = pair(lg, tu);
                    const Int recursive = pair_recursive(lg, tu);
                    if (via_words != direct || direct != recursive)
                        report.violation("bar methods disagree on (" + bw.text() + ", " +
                                         format_word(a, u) + "): " + via_words.str() + ", " +
                                         direct.str() + ", " + recursive.str());
                }
            } while (std::next_permutation(letters.begin(), letters.end()));
        }
    }
    // Seeded random pairs.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(1, std::min(max_n, 7));
    for (int c = 0; c < random_cases; ++c) {
        const int n = size_dist(rng);
        const auto mds = all_multidegrees(a.size(), n);
        std::uniform_int_distribution<size_t> pick(0, mds.size() - 1);
        const MultiDegree& md = mds[pick(rng)];
        const Tree t = random_tree(rng, a, md);
        ++report.checks;
        if (c % 2 == 0) {
            const Graph g = random_graph(rng, a, md);
            const Int direct = pair(g, t);
            const Int recursive = pair_recursive(g, t);
            if (direct != recursive)
                report.violation("random graph/tree disagreement: " + direct.str() + " vs " +
                                 recursive.str());
        } else {
            std::vector<int> letters = letters_of(md);
            std::shuffle(letters.begin(), letters.end(), rng);
            const BarWord bw = BarWord::of_word(a, Word(letters));
            const Graph lg = as_long_graph(bw);
            const Int via_words = pair_bar(bw, LieElement(t));
            const Int direct = pair(lg, t);
            const Int recursive = pair_recursive(lg, t);
            if (via_words != direct || direct != recursive)
                report.violation("random bar/tree disagreement: " + via_words.str() + ", " +
                                 direct.str() + ", " + recursive.str());
        }
    }
    return report;
}

Report verify_fan(int max_k) {
    Report report;
    report.name = "fan";
    for (int k = 1; k <= std::min(max_k, 3); ++k) {
        const int sign = k % 2 == 0 ? 1 : -1;
        {
            // Distinct outer labels.
            std::vector<std::string> tokens = {"a", "b", "c"};
            tokens.resize(k);
            tokens.push_back("z");
            const Alphabet a(tokens);
            std::vector<GraphVertex> vs{{0, "z"}};
            std::vector<GraphEdge> es;
            for (int i = 1; i <= k; ++i) {
                vs.push_back({i, tokens[i - 1]});
                es.push_back({0, i});
            }
            const Graph star(vs, es, 0);
            CoElement paths;
            std::vector<int> order(k);
            std::iota(order.begin(), order.end(), 0);
            do {
                std::vector<GraphVertex> pv;
                std::vector<GraphEdge> pe;
                for (int i = 0; i < k; ++i) {
                    pv.push_back({i, tokens[order[i]]});
                    pe.push_back({i, i + 1});
                }
                pv.push_back({k, "z"});
                paths.add(Graph(pv, pe, 0), sign);
            } while (std::next_permutation(order.begin(), order.end()));
            MultiDegree md;
            md.counts.assign(k + 1, 1);
            for (const Tree& t : all_trees(a, md)) {
                ++report.checks;
                const Int lhs = pair(star, t);
                const Int rhs = pair_elements(paths, LieElement(t));
                if (lhs != rhs)
                    report.violation("distinct-label star vs paths: " + lhs.str() + " vs " +
                                     rhs.str() + " on " + format_tree(t));
            }
        }
        {
            // All outer labels equal.
            const Alphabet a({"x", "z"});
            std::vector<GraphVertex> vs{{0, "z"}};
            std::vector<GraphEdge> es;
            std::vector<GraphVertex> pv;
            std::vector<GraphEdge> pe;
            for (int i = 1; i <= k; ++i) {
                vs.push_back({i, "x"});
                es.push_back({0, i});
                pv.push_back({i - 1, "x"});
                pe.push_back({i - 1, i});
            }
            pv.push_back({k, "z"});
            const Graph star(vs, es, 0);
            const Graph path(pv, pe, 0);
            Int factor = sign;
            for (int i = 2; i <= k; ++i) factor *= i;
            MultiDegree md{std::vector<long long>{k, 1}};
            for (const Tree& t : all_trees(a, md)) {
                ++report.checks;
                const Int lhs = pair(star, t);
                const Int rhs = factor * pair(path, t);
                if (lhs != rhs)
                    report.violation("equal-label star vs path: " + lhs.str() + " vs " + rhs.str() +
                                     " on " + format_tree(t));
            }
        }
    }
    return report;
}

namespace {

Tree relabel(const Tree& t, const Alphabet& source, const Alphabet& target,
             const std::vector<int>& phi) {
    if (t.is_leaf()) {
        const int idx = source.index_of(t.label());
        if (idx < 0) throw InputError("leaf label outside the source alphabet");
        return Tree::leaf(target.token(phi[idx]));
    }
    return Tree::node(relabel(t.left(), source, target, phi),
                      relabel(t.right(), source, target, phi));
}

}  // namespace

Report verify_quotient(std::uint64_t seed, int cases, int max_n) {
    Report report;
    report.name = "quotient";
    const std::vector<std::string> source_pool = {"p", "q", "r", "s"};
    const std::vector<std::string> target_pool = {"x", "y", "z", "w"};
    std::mt19937_64 rng(seed);
    int produced = 0;
    while (produced < cases) {
        std::uniform_int_distribution<int> dsize(2, 4);
        const int dv = dsize(rng);
        std::uniform_int_distribution<int> wsize(2, dv);
        const int dw = wsize(rng);
        // Weakly monotone surjection with a unique preimage of the first
        // target letter.  cur is the next unused target; step whenever forced
        // (just enough positions left) or required (position 1 must leave
        // target 0 behind), otherwise by coin flip.
        std::vector<int> phi(dv);
        phi[0] = 0;
        {
            int cur = 1;
            std::uniform_int_distribution<int> coin(0, 1);
            for (int i = 1; i < dv; ++i) {
                const bool forced = dw - cur == dv - i;
                if (cur < dw && (forced || cur == 1 || coin(rng)))
                    phi[i] = cur++;
                else
                    phi[i] = cur - 1;
            }
        }
        const Alphabet src(std::vector<std::string>(source_pool.begin(), source_pool.begin() + dv));
        const Alphabet dst(std::vector<std::string>(target_pool.begin(), target_pool.begin() + dw));

        std::uniform_int_distribution<int> nlen(2, max_n);
        const int n = nlen(rng);
        std::uniform_int_distribution<int> letter(0, dv - 1);
        Word w;
        bool found = false;
        for (int attempt = 0; attempt < 500 && !found; ++attempt) {
            std::vector<int> ls(n);
            for (int& l : ls) l = letter(rng);
            Word cand(std::move(ls));
            if (is_bhat(cand)) {
                w = std::move(cand);
                found = true;
            }
        }
        if (!found) continue;
        ++produced;
        ++report.checks;

        const Tree source_tree = config_bracketing(src, w);
        const Tree relabelled = relabel(source_tree, src, dst, phi);
        const auto image = quotient_check(src, dst, phi, w);
        if (image) {
            const Tree target_tree = config_bracketing(dst, *image);
            if (!(relabelled == target_tree))
                report.violation("relabelled bracket differs for word " + format_word(src, w));
        } else {
            const auto coeffs = expand_config(dst, LieElement(relabelled), FamilyKind::ConfigBhat);
            if (!coeffs.empty())
                report.violation("zero image expands with nonzero coefficients for word " +
                                 format_word(src, w));
        }
    }
    return report;
}

}  // namespace liebasis
