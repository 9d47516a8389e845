#include "liebasis/basis.hpp"

#include "liebasis/enumerate.hpp"

#include <fstream>
#include <sstream>

namespace liebasis {

BasisFamily BasisFamily::generated(FamilyKind kind, const Alphabet& a, const MultiDegree& md) {
    if (kind == FamilyKind::Fixture)
        throw InputError("fixture families come from load_fixture");
    BasisFamily out{kind, a, {}};
    const std::vector<Word> words =
        kind == FamilyKind::ConfigBhat ? bhat_words(md) : lyndon_words(md);
    for (const Word& w : words) {
        Tree t = kind == FamilyKind::ClassicalB ? classical_bracketing(a, w)
                                                : config_bracketing(a, w);
        out.members.emplace_back(w, std::move(t));
    }
    return out;
}

BasisFamily load_fixture(const Alphabet& a, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open fixture file '" + path + "'");
    BasisFamily out{FamilyKind::Fixture, a, {}};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'word<TAB>tree'");
        try {
            Word w = parse_word(a, line.substr(0, tab));
            Tree t = parse_tree(line.substr(tab + 1));
            out.members.emplace_back(std::move(w), std::move(t));
        } catch (const InputError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::map<Word, Int> expand_config(const Alphabet& a, const LieElement& e, FamilyKind kind) {
    if (kind != FamilyKind::ConfigB && kind != FamilyKind::ConfigBhat)
        throw InputError("expansion target must be a configuration family");
    // Split the element by multidegree; the pairing is block-diagonal.
    std::map<MultiDegree, LieElement> blocks;
    for (const auto& [t, c] : e.terms()) {
        MultiDegree md;
        md.counts.assign(a.size(), 0);
        for (const auto& label : t.leaf_labels()) {
            const int idx = a.index_of(label);
            if (idx < 0) throw InputError("leaf label '" + label + "' is not in the alphabet");
            ++md.counts[idx];
        }
        blocks[md].add(t, c);
    }
    std::map<Word, Int> out;
    for (const auto& [md, block] : blocks) {
        const std::vector<Word> words =
            kind == FamilyKind::ConfigBhat ? bhat_words(md) : lyndon_words(md);
        for (const Word& w : words) {
            Int c = pair_elements(CoElement(config_graph(a, w)), block);
            if (c != 0) out.emplace(w, std::move(c));
        }
    }
    return out;
}

PairingMatrix pairing_matrix(const Alphabet& a, RowKind rows,
                             const std::vector<std::pair<std::string, Tree>>& cols,
                             const MultiDegree& md) {
    const bool bhat = rows == RowKind::BarBhat || rows == RowKind::GraphBhat;
    const bool bar = rows == RowKind::BarLyndon || rows == RowKind::BarBhat;
    const std::vector<Word> words = bhat ? bhat_words(md) : lyndon_words(md);
    if (words.empty()) throw InputError("no words for multidegree " + format_multidegree(md));
    if (cols.empty()) throw InputError("no columns requested");
    PairingMatrix m;
    for (const auto& [label, tree] : cols) m.col_labels.push_back(label);
    for (const Word& w : words) {
        m.row_labels.push_back(format_word(a, w));
        CoElement row(bar ? CoTerm(BarWord::of_word(a, w)) : CoTerm(config_graph(a, w)));
        std::vector<Int> entries;
        for (const auto& [label, tree] : cols)
            entries.push_back(pair_elements(row, LieElement(tree)));
        m.entries.push_back(std::move(entries));
    }
    return m;
}

std::vector<std::pair<std::string, Tree>> family_columns(const BasisFamily& family) {
    std::vector<std::pair<std::string, Tree>> out;
    for (const auto& [w, t] : family.members)
        out.emplace_back(format_word(family.alphabet, w), t);
    return out;
}

std::string format_matrix(const PairingMatrix& m, MatrixStyle style) {
    std::ostringstream out;
    if (style == MatrixStyle::Json) {
        out << "{\"rows\":[";
        for (size_t i = 0; i < m.row_labels.size(); ++i)
            out << (i ? "," : "") << '"' << m.row_labels[i] << '"';
        out << "],\"cols\":[";
        for (size_t i = 0; i < m.col_labels.size(); ++i)
            out << (i ? "," : "") << '"' << m.col_labels[i] << '"';
        out << "],\"entries\":[";
        for (size_t i = 0; i < m.entries.size(); ++i) {
            out << (i ? "," : "") << '[';
            for (size_t j = 0; j < m.entries[i].size(); ++j)
                out << (j ? "," : "") << m.entries[i][j];
            out << ']';
        }
        out << "]}";
        return out.str();
    }
    out << ".";
    for (const auto& c : m.col_labels) out << '\t' << c;
    out << '\n';
    for (size_t i = 0; i < m.entries.size(); ++i) {
        out << m.row_labels[i];
        for (const Int& v : m.entries[i]) {
            out << '\t';
            if (!(style == MatrixStyle::Paper && v == 0)) out << v;
        }
        out << '\n';
    }
    return out.str();
}

void Report::violation(const std::string& what) {
    pass = false;
    if (violations.size() < 50) violations.push_back(what);
}

Report verify_triangularity(const Alphabet& a, RowKind rows, FamilyKind cols, int max_n) {
    Report report;
    report.name = "triangular";
    for (int n = 1; n <= max_n; ++n) {
        for (const MultiDegree& md : all_multidegrees(a.size(), n)) {
            BasisFamily family = BasisFamily::generated(cols, a, md);
            if (family.members.empty()) continue;
            PairingMatrix m = pairing_matrix(a, rows, family_columns(family), md);
            for (size_t i = 0; i < m.entries.size(); ++i) {
                for (size_t j = 0; j < m.entries[i].size(); ++j) {
                    const Int& v = m.entries[i][j];
                    ++report.checks;
                    if (i == j) {
                        const bool ok = cols == FamilyKind::ClassicalB ? v == 1 : (v == 1 || v == -1);
                        if (!ok)
                            report.violation("diagonal " + m.row_labels[i] + " = " + v.str());
                    } else if (i < j && v != 0) {
                        report.violation("above-diagonal (" + m.row_labels[i] + ", " +
                                         m.col_labels[j] + ") = " + v.str());
                    }
                }
            }
        }
    }
    return report;
}

Report verify_duality_md(const Alphabet& a, FamilyKind family, const MultiDegree& md) {
    Report report;
    report.name = "duality";
    BasisFamily fam = BasisFamily::generated(family, a, md);
    for (const auto& [w, tw] : fam.members) {
        const Graph g = config_graph(a, w);
        for (const auto& [u, tu] : fam.members) {
            ++report.checks;
            const Int v = pair(g, tu);
            const Int expect = w == u ? 1 : 0;
            if (v != expect)
                report.violation("<graph " + format_word(a, w) + ", tree " + format_word(a, u) +
                                 "> = " + v.str());
        }
    }
    return report;
}

Report verify_duality(const Alphabet& a, FamilyKind family, int max_n) {
    Report report;
    report.name = "duality";
    for (int n = 1; n <= max_n; ++n) {
        for (const MultiDegree& md : all_multidegrees(a.size(), n)) {
            Report sub = verify_duality_md(a, family, md);
            report.checks += sub.checks;
            for (const auto& v : sub.violations) report.violation(v);
            report.pass = report.pass && sub.pass;
        }
    }
    return report;
}

std::optional<Word> quotient_check(const Alphabet& source, const Alphabet& target,
                                   const std::vector<int>& phi, const Word& w) {
    if (static_cast<int>(phi.size()) != source.size())
        throw InputError("alphabet map must cover every source letter");
    std::vector<bool> hit(target.size(), false);
    int first_preimages = 0;
    for (size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] < 0 || phi[i] >= target.size())
            throw InputError("alphabet map image out of range");
        if (i > 0 && phi[i] < phi[i - 1])
            throw InputError("alphabet map must be weakly monotone");
        hit[phi[i]] = true;
        if (phi[i] == 0) ++first_preimages;
    }
    for (bool h : hit)
        if (!h) throw InputError("alphabet map must be onto the target alphabet");
    if (first_preimages != 1)
        throw InputError("exactly one source letter may map to the first target letter");

    std::vector<int> image;
    image.reserve(w.size());
    for (int l : w.letters) image.push_back(phi.at(l));
    Word u(std::move(image));
    if (!is_bhat(u)) return std::nullopt;
    return u;
}

}  // namespace liebasis
