#include "liebasis/coalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace liebasis {

// ---------------------------------------------------------------------------
// Bar words
// ---------------------------------------------------------------------------

std::string BarWord::text() const {
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += '|';
        out += letters[i];
    }
    return out;
}

BarWord BarWord::parse(const Alphabet& a, const std::string& text) {
    if (text.empty()) throw InputError("bar word must be nonempty");
    if (text.find('|') == std::string::npos)
        return of_word(a, parse_word(a, text));
    BarWord w;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, '|')) {
        if (a.index_of(tok) < 0)
            throw InputError("unknown letter '" + tok + "' in bar word '" + text + "'");
        w.letters.push_back(tok);
    }
    if (w.letters.empty()) throw InputError("bar word must be nonempty");
    return w;
}

BarWord BarWord::of_word(const Alphabet& a, const Word& w) {
    if (w.empty()) throw InputError("bar word must be nonempty");
    BarWord out;
    for (int l : w.letters) out.letters.push_back(a.token(l));
    return out;
}

// ---------------------------------------------------------------------------
// CoElement
// ---------------------------------------------------------------------------

namespace {

std::pair<int, std::string> term_key(const CoTerm& t) {
    if (const auto* b = std::get_if<BarWord>(&t)) return {0, b->text()};
    return {1, std::get<Graph>(t).canonical_string()};
}

}  // namespace

void CoElement::add(const CoTerm& t, const Int& coeff) {
    if (coeff == 0) return;
    auto key = term_key(t);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::make_pair(t, coeff));
        return;
    }
    it->second.second += coeff;
    if (it->second.second == 0) terms_.erase(it);
}

void CoElement::add(const CoElement& other, const Int& scale) {
    for (const auto& [key, tc] : other.terms_) add(tc.first, tc.second * scale);
}

std::vector<std::pair<CoTerm, Int>> CoElement::terms() const {
    std::vector<std::pair<CoTerm, Int>> out;
    out.reserve(terms_.size());
    for (const auto& [key, tc] : terms_) out.push_back(tc);
    return out;
}

// ---------------------------------------------------------------------------
// Configuration graphs
// ---------------------------------------------------------------------------

namespace {

int build_graph(const Alphabet& a, const GradedDecomposition& g, std::vector<GraphVertex>& vs,
                std::vector<GraphEdge>& es) {
    if (g.level == 0) {
        const int id = static_cast<int>(vs.size());
        vs.push_back({id, a.token(g.letter)});
        return id;
    }
    const int pivot = build_graph(a, *g.tail[0], vs, es);
    int prev = pivot;
    for (int i = 0; i < g.exponent; ++i) {
        const int p = build_graph(a, *g.head, vs, es);
        es.push_back({prev, p});
        prev = p;
    }
    prev = pivot;
    for (size_t i = 1; i < g.tail.size(); ++i) {
        const int q = build_graph(a, *g.tail[i], vs, es);
        es.push_back({prev, q});
        prev = q;
    }
    return pivot;
}

}  // namespace

Graph config_graph(const Alphabet& a, const GradedDecomposition& g) {
    std::vector<GraphVertex> vs;
    std::vector<GraphEdge> es;
    const int pivot = build_graph(a, g, vs, es);
    return Graph(std::move(vs), std::move(es), pivot);
}

Graph config_graph(const Alphabet& a, const Word& w) {
    if (!is_lyndon(w) && !is_bhat(w))
        throw InputError("word '" + format_word(a, w) +
                         "' is not minimal among its rotations in either order");
    return config_graph(a, *simple_grade(w));
}

// ---------------------------------------------------------------------------
// Cobracket
// ---------------------------------------------------------------------------

namespace {

Graph piece(const Graph& g, const std::vector<int>& vertex_ids, int cut_edge) {
    std::vector<GraphVertex> vs;
    for (const auto& v : g.vertices())
        if (std::find(vertex_ids.begin(), vertex_ids.end(), v.id) != vertex_ids.end())
            vs.push_back(v);
    std::vector<GraphEdge> es;
    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (static_cast<int>(i) == cut_edge) continue;
        const auto& e = g.edges()[i];
        if (std::find(vertex_ids.begin(), vertex_ids.end(), e.from) != vertex_ids.end())
            es.push_back(e);
    }
    // New pivot: the piece vertex reached earliest when traversing the whole
    // graph from its original pivot.
    const std::vector<int> order = g.traversal_order();
    int pivot = -1;
    for (int id : order)
        if (std::find(vertex_ids.begin(), vertex_ids.end(), id) != vertex_ids.end()) {
            pivot = id;
            break;
        }
    return Graph(std::move(vs), std::move(es), pivot);
}

}  // namespace

std::vector<CobracketTerm> cobracket(const Graph& g) {
    std::vector<CobracketTerm> out;
    for (size_t e = 0; e < g.edges().size(); ++e) {
        // Vertices reachable from the cut edge's source without crossing it.
        std::vector<int> side;
        side.push_back(g.edges()[e].from);
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t i = 0; i < g.edges().size(); ++i) {
                if (i == e) continue;
                const auto& ed = g.edges()[i];
                const bool has_from =
                    std::find(side.begin(), side.end(), ed.from) != side.end();
                const bool has_to = std::find(side.begin(), side.end(), ed.to) != side.end();
                if (has_from != has_to) {
                    side.push_back(has_from ? ed.to : ed.from);
                    grew = true;
                }
            }
        }
        std::vector<int> other;
        for (const auto& v : g.vertices())
            if (std::find(side.begin(), side.end(), v.id) == side.end()) other.push_back(v.id);
        Graph source_piece = piece(g, side, static_cast<int>(e));
        Graph target_piece = piece(g, other, static_cast<int>(e));
        out.push_back({+1, source_piece, target_piece});
        out.push_back({-1, std::move(target_piece), std::move(source_piece)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Long graphs and bar cuts
// ---------------------------------------------------------------------------

Graph as_long_graph(const BarWord& w) {
    std::vector<GraphVertex> vs;
    std::vector<GraphEdge> es;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        vs.push_back({static_cast<int>(i), w.letters[i]});
        if (i) es.push_back({static_cast<int>(i) - 1, static_cast<int>(i)});
    }
    return Graph(std::move(vs), std::move(es), 0);
}

std::vector<BarCutTerm> bar_cut(const BarWord& w) {
    std::vector<BarCutTerm> out;
    const int n = static_cast<int>(w.letters.size());
    for (int i = 1; i < n; ++i) {
        BarWord left{std::vector<std::string>(w.letters.begin(), w.letters.begin() + i)};
        BarWord right{std::vector<std::string>(w.letters.begin() + i, w.letters.end())};
        out.push_back({+1, left, right});
        out.push_back({-1, std::move(right), std::move(left)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shuffles and coideal generators
// ---------------------------------------------------------------------------

CoElement shuffle(const Alphabet& a, const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw InputError("shuffle needs nonempty words");
    const int n = u.size() + v.size();
    // Positions of u inside the interleaving, as a sorted combination.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + u.size(), true);
    std::sort(pick.begin(), pick.end());  // start at the lexicographically first mask
    CoElement out;
    do {
        BarWord w;
        int iu = 0, iv = 0;
        for (int i = 0; i < n; ++i)
            w.letters.push_back(a.token(pick[i] ? u[iu++] : v[iv++]));
        out.add(w, 1);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

Graph reverse_edge(const Graph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= static_cast<int>(g.edges().size()))
        throw InputError("edge index out of range");
    std::vector<GraphEdge> es = g.edges();
    std::swap(es[edge_index].from, es[edge_index].to);
    return Graph(g.vertices(), std::move(es), g.pivot_id());
}

CoElement arnold_triples(const Graph& g, int a, int b, int c) {
    int e_ab = -1, e_bc = -1;
    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (g.edges()[i].from == a && g.edges()[i].to == b) e_ab = static_cast<int>(i);
        if (g.edges()[i].from == b && g.edges()[i].to == c) e_bc = static_cast<int>(i);
    }
    if (e_ab < 0 || e_bc < 0)
        throw InputError("graph lacks the requested pair of consecutive edges");
    auto replace = [&](int index) {
        std::vector<GraphEdge> es = g.edges();
        es[index] = {c, a};
        return Graph(g.vertices(), std::move(es), g.pivot_id());
    };
    CoElement out;
    out.add(g, 1);
    out.add(replace(e_ab), 1);
    out.add(replace(e_bc), 1);
    return out;
}

}  // namespace liebasis
