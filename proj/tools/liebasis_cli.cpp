// Command-line front end for the word/tree/graph pairing library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 internal disagreement between pairing methods.

#include "liebasis/basis.hpp"
#include "liebasis/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace liebasis;

namespace {

WordOrder family_order(bool bhat) { return bhat ? WordOrder::Block : WordOrder::Lex; }

CoElement parse_left(const Alphabet& a, const std::string& spec) {
    if (!spec.empty() && spec[0] == '{') return CoElement(Graph::from_json(spec));
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        std::stringstream buf;
        buf << in.rdbuf();
        return CoElement(Graph::from_json(buf.str()));
    }
    return CoElement(BarWord::parse(a, spec));
}

int run_pair(const Alphabet& a, const std::string& left_spec, const std::string& tree_spec,
             const std::string& method) {
    const CoElement left = parse_left(a, left_spec);
    const LieElement right(parse_tree(tree_spec));
    const bool is_bar = std::holds_alternative<BarWord>(left.terms()[0].first);

    if (method == "direct" || method == "recursive" || method == "uea") {
        if (method == "uea" && !is_bar)
            throw InputError("word-coefficient method needs a bar word on the left");
        Int v = 0;
        if (method == "uea") {
            v = pair_elements(left, right, BarRoute::WordCoefficient);
        } else {
            for (const auto& [term, coeff] : left.terms()) {
                const Graph g = is_bar ? as_long_graph(std::get<BarWord>(term))
                                       : std::get<Graph>(term);
                for (const auto& [t, ct] : right.terms())
                    v += coeff * ct * (method == "direct" ? pair(g, t) : pair_recursive(g, t));
            }
        }
        std::cout << v << "\n";
        return 0;
    }

    // --method all
    std::vector<std::pair<std::string, Int>> results;
    for (const std::string& m : {"direct", "recursive"}) {
        Int v = 0;
        for (const auto& [term, coeff] : left.terms()) {
            const Graph g =
                is_bar ? as_long_graph(std::get<BarWord>(term)) : std::get<Graph>(term);
            for (const auto& [t, ct] : right.terms())
                v += coeff * ct * (m == "direct" ? pair(g, t) : pair_recursive(g, t));
        }
        results.emplace_back(m, v);
    }
    if (is_bar) results.emplace_back("uea", pair_elements(left, right, BarRoute::WordCoefficient));
    bool agree = true;
    for (const auto& [m, v] : results) agree = agree && v == results[0].second;
    for (const auto& [m, v] : results) std::cout << m << "\t" << v << "\n";
    std::cout << "agreement\t" << (agree ? "yes" : "no") << "\n";
    return agree ? 0 : 3;
}

int run_verify(const Alphabet& a, const std::string& suite, int max_n, std::uint64_t seed) {
    std::vector<Report> reports;
    const bool all = suite == "all";
    if (all || suite == "duality") reports.push_back(verify_duality(a, FamilyKind::ConfigB, max_n));
    if (all || suite == "triangular") {
        reports.push_back(verify_triangularity(a, RowKind::BarLyndon, FamilyKind::ConfigB, max_n));
        reports.push_back(verify_triangularity(a, RowKind::BarBhat, FamilyKind::ConfigBhat, max_n));
        reports.push_back(verify_triangularity(a, RowKind::BarLyndon, FamilyKind::ClassicalB, max_n));
    }
    if (all || suite == "kernel") reports.push_back(verify_kernel(a, max_n, seed));
    if (all || suite == "shuffle") reports.push_back(verify_shuffle(a, max_n));
    if (all || suite == "oracle") reports.push_back(verify_oracle(a, max_n, seed));
    if (all || suite == "fan") reports.push_back(verify_fan(3));
    if (all || suite == "quotient") reports.push_back(verify_quotient(seed, 50, max_n));
    if (reports.empty()) throw InputError("unknown suite '" + suite + "'");
    bool ok = true;
    for (const Report& r : reports) {
        std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checks
                  << " checks)\n";
        for (const auto& v : r.violations) std::cout << "  " << v << "\n";
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Configuration bases of free Lie algebras and their graph duals"};
    app.require_subcommand(1);

    std::string alphabet_spec;
    std::string set_name = "lyndon", map_name, word_text, left_spec, tree_spec;
    std::string method = "direct", basis_name = "config", style_name = "plain";
    std::string rows_name, cols_name = "config", fixture_path, suite = "all";
    std::vector<std::string> extra_cols;
    std::optional<int> length;
    std::optional<std::string> md_spec;
    int max_n = 6;
    std::uint64_t seed = 20260824;

    auto add_alphabet = [&](CLI::App* cmd) {
        cmd->add_option("--alphabet", alphabet_spec, "Comma-separated ordered letters")->required();
    };

    CLI::App* count = app.add_subcommand("count", "Dimension counts of the word sets");
    add_alphabet(count);
    count->add_option("--length", length);
    count->add_option("--multidegree", md_spec);

    CLI::App* words_cmd = app.add_subcommand("words", "List basis words");
    add_alphabet(words_cmd);
    words_cmd->add_option("--set", set_name)->check(CLI::IsMember({"lyndon", "bhat"}));
    words_cmd->add_option("--length", length);
    words_cmd->add_option("--multidegree", md_spec);

    CLI::App* basis_cmd = app.add_subcommand("basis", "Map a word to its tree or graph");
    add_alphabet(basis_cmd);
    basis_cmd->add_option("--map", map_name)->required()->check(
        CLI::IsMember({"L", "G", "classical"}));
    basis_cmd->add_option("word", word_text)->required();

    CLI::App* pair_cmd = app.add_subcommand("pair", "Pair a bar word or graph with a tree");
    add_alphabet(pair_cmd);
    pair_cmd->add_option("--left", left_spec, "Bar word, inline graph JSON, or graph file")
        ->required();
    pair_cmd->add_option("--right", tree_spec, "Tree in bracket syntax")->required();
    pair_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"direct", "recursive", "uea", "all"}));

    CLI::App* expand_cmd = app.add_subcommand("expand", "Expand a tree in a configuration family");
    add_alphabet(expand_cmd);
    expand_cmd->add_option("--tree", tree_spec)->required();
    expand_cmd->add_option("--basis", basis_name)->check(CLI::IsMember({"config", "confighat"}));

    CLI::App* matrix_cmd = app.add_subcommand("matrix", "Pairing matrix for one multidegree");
    add_alphabet(matrix_cmd);
    matrix_cmd->add_option("--multidegree", md_spec)->required();
    matrix_cmd->add_option("--rows", rows_name)
        ->required()
        ->check(CLI::IsMember({"bar-lyndon", "bar-bhat", "graph-lyndon", "graph-bhat"}));
    matrix_cmd->add_option("--cols", cols_name)
        ->check(CLI::IsMember({"config", "confighat", "classical", "fixture", "none"}));
    matrix_cmd->add_option("--fixture", fixture_path);
    matrix_cmd->add_option("--extra-col", extra_cols, "Additional tree columns");
    matrix_cmd->add_option("--style", style_name)->check(CLI::IsMember({"plain", "paper", "json"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    add_alphabet(verify_cmd);
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember(
            {"duality", "triangular", "kernel", "shuffle", "oracle", "fan", "quotient", "all"}));
    verify_cmd->add_option("--max-n", max_n)->check(CLI::Range(1, 8));
    verify_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        const Alphabet a = Alphabet::parse(alphabet_spec);

        if (count->parsed()) {
            if (length.has_value() == md_spec.has_value())
                throw InputError("need exactly one of --length and --multidegree");
            if (length)
                std::cout << witt_count(a.size(), *length) << "\n";
            else
                std::cout << fine_witt_count(parse_multidegree(*md_spec, a.size())) << "\n";
            return 0;
        }

        if (words_cmd->parsed()) {
            if (length.has_value() == md_spec.has_value())
                throw InputError("need exactly one of --length and --multidegree");
            std::vector<Word> ws;
            if (set_name == "lyndon")
                ws = length ? lyndon_words(a.size(), *length)
                            : lyndon_words(parse_multidegree(*md_spec, a.size()));
            else
                ws = length ? bhat_words(a.size(), *length)
                            : bhat_words(parse_multidegree(*md_spec, a.size()));
            for (const Word& w : ws) std::cout << format_word(a, w) << "\n";
            return 0;
        }

        if (basis_cmd->parsed()) {
            const Word w = parse_word(a, word_text);
            if (map_name == "L")
                std::cout << format_tree(config_bracketing(a, w)) << "\n";
            else if (map_name == "classical")
                std::cout << format_tree(classical_bracketing(a, w)) << "\n";
            else
                std::cout << config_graph(a, w).to_json() << "\n";
            return 0;
        }

        if (pair_cmd->parsed()) return run_pair(a, left_spec, tree_spec, method);

        if (expand_cmd->parsed()) {
            const bool bhat = basis_name == "confighat";
            const auto coeffs = expand_config(a, LieElement(parse_tree(tree_spec)),
                                              bhat ? FamilyKind::ConfigBhat : FamilyKind::ConfigB);
            std::vector<Word> order;
            for (const auto& [w, c] : coeffs) order.push_back(w);
            std::sort(order.begin(), order.end(), [&](const Word& x, const Word& y) {
                return compare_words(x, y, family_order(bhat)) < 0;
            });
            for (const Word& w : order)
                std::cout << format_word(a, w) << "\t" << coeffs.at(w) << "\n";
            return 0;
        }

        if (matrix_cmd->parsed()) {
            const MultiDegree md = parse_multidegree(*md_spec, a.size());
            RowKind rows = RowKind::BarLyndon;
            if (rows_name == "bar-bhat") rows = RowKind::BarBhat;
            if (rows_name == "graph-lyndon") rows = RowKind::GraphLyndon;
            if (rows_name == "graph-bhat") rows = RowKind::GraphBhat;
            std::vector<std::pair<std::string, Tree>> cols;
            if (cols_name == "config" || cols_name == "classical")
                cols = family_columns(BasisFamily::generated(
                    cols_name == "config" ? FamilyKind::ConfigB : FamilyKind::ClassicalB, a, md));
            else if (cols_name == "confighat")
                cols = family_columns(BasisFamily::generated(FamilyKind::ConfigBhat, a, md));
            else if (cols_name == "fixture") {
                if (fixture_path.empty()) throw InputError("--cols fixture needs --fixture");
                cols = family_columns(load_fixture(a, fixture_path));
            }
            for (const std::string& t : extra_cols) cols.emplace_back(t, parse_tree(t));
            MatrixStyle style = MatrixStyle::Plain;
            if (style_name == "paper") style = MatrixStyle::Paper;
            if (style_name == "json") style = MatrixStyle::Json;
            std::cout << format_matrix(pairing_matrix(a, rows, cols, md), style);
            return 0;
        }

        if (verify_cmd->parsed()) return run_verify(a, suite, max_n, seed);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
