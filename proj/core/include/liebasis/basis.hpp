#pragma once

#include "liebasis/coalg.hpp"
#include "liebasis/lie.hpp"
#include "liebasis/pairing.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liebasis {

enum class FamilyKind { ConfigB, ConfigBhat, ClassicalB, Fixture };

// A word-indexed family of bracket trees: the configuration bracketing over
// the dictionary-minimal or block-minimal words, the standard bracketing, or
// trees loaded from a fixture file.
struct BasisFamily {
    FamilyKind kind;
    Alphabet alphabet;
    std::vector<std::pair<Word, Tree>> members;  // canonical word order

    static BasisFamily generated(FamilyKind kind, const Alphabet& a, const MultiDegree& md);
};

// Fixture format: one record per line, `word <tab> tree`; '#' lines and blank
// lines are skipped.  Parse errors carry line numbers.
BasisFamily load_fixture(const Alphabet& a, const std::string& path);

// Coefficients of e in the configuration family: coefficient of the tree for
// word w is the pairing of w's graph with e.  Heterogeneous elements are
// split by multidegree.  Only nonzero coefficients appear.
std::map<Word, Int> expand_config(const Alphabet& a, const LieElement& e,
                                  FamilyKind kind = FamilyKind::ConfigB);

enum class RowKind { BarLyndon, BarBhat, GraphLyndon, GraphBhat };

struct PairingMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<Int>> entries;
};

// Rows from the requested word set of md (bar words or graphs), columns from
// a tree list; entry = pairing.
PairingMatrix pairing_matrix(const Alphabet& a, RowKind rows,
                             const std::vector<std::pair<std::string, Tree>>& cols,
                             const MultiDegree& md);

// Column builders.
std::vector<std::pair<std::string, Tree>> family_columns(const BasisFamily& family);

enum class MatrixStyle { Plain, Paper, Json };

// TSV with a header row; Paper style prints zero cells as blanks; Json emits
// one object with labels and full integer rows.
std::string format_matrix(const PairingMatrix& m, MatrixStyle style);

struct Report {
    std::string name;
    bool pass = true;
    long long checks = 0;
    std::vector<std::string> violations;

    void violation(const std::string& what);
};

// Above-diagonal zeros and unit diagonals for (rows, matching family) over
// every multidegree with total <= max_n.  Diagonals must be +1 for the
// classical family, otherwise +-1.
Report verify_triangularity(const Alphabet& a, RowKind rows, FamilyKind cols, int max_n);

// <graph of w, tree of u> = delta(w,u) within each multidegree, total <= max_n.
Report verify_duality(const Alphabet& a, FamilyKind family, int max_n);
Report verify_duality_md(const Alphabet& a, FamilyKind family, const MultiDegree& md);

// Letterwise image of w under the alphabet map phi (source index -> target
// index).  phi must be weakly monotone, onto the target, and only one source
// letter may map to the first target letter.  Returns the image word when it
// is block-minimal, nullopt otherwise (the image is zero in that case).
std::optional<Word> quotient_check(const Alphabet& source, const Alphabet& target,
                                   const std::vector<int>& phi, const Word& w);

}  // namespace liebasis
