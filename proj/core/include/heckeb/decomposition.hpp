#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "heckeb/partition.hpp"

namespace heckeb {

// A decomposition matrix with labelled rows and columns.  Rows are all
// bipartitions of n; columns are a subset of the rows (the labels of the
// simple modules); entries are the non-negative multiplicities.
class DecompositionMatrix {
public:
    DecompositionMatrix(int n, std::vector<Multipartition> rows,
                        std::vector<Multipartition> cols,
                        std::vector<std::vector<int>> entries);

    // Reads the JSON document
    //   {"n": int, "rows": [bipartition], "cols": [bipartition],
    //    "entries": [[int]]}
    // with bipartition = [[int],[int]].  Throws std::invalid_argument on
    // malformed or inconsistent input.
    static DecompositionMatrix load(std::istream& in);

    int n() const { return n_; }
    const std::vector<Multipartition>& rows() const { return rows_; }
    const std::vector<Multipartition>& cols() const { return cols_; }

    int entry(size_t row_idx, size_t col_idx) const { return entries_[row_idx][col_idx]; }
    int entry(const Multipartition& row, const Multipartition& col) const;

private:
    int n_;
    std::vector<Multipartition> rows_;
    std::vector<Multipartition> cols_;
    std::vector<std::vector<int>> entries_;
    std::map<Multipartition, size_t> row_index_;
    std::map<Multipartition, size_t> col_index_;
};

struct DeltaReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the unitriangularity conditions: every diagonal entry is 1 and
// every nonzero entry's row label dominates-down to its column label.
DeltaReport verify_delta(const DecompositionMatrix& d);

using AValueMap = std::map<Multipartition, long long>;

struct BasicSetExtraction {
    bool ok = true;
    std::vector<Multipartition> basic;               // image of beta, in column order
    std::map<Multipartition, Multipartition> beta;   // column label -> row label
    std::vector<std::string> violations;
};

// For each column, locates the nonzero row of strictly minimal a-value;
// requires that minimum unique with entry 1 and all other nonzero rows of
// strictly larger a-value, and that distinct columns pick distinct rows.
// Violations are reported per column instead of throwing.
BasicSetExtraction extract_basic_set(const DecompositionMatrix& d, const AValueMap& avals);

// Verifies the canonical-basic-set conditions for a given bijection beta
// from the column labels onto basic, and the block-triangular shape (rows
// and columns of equal a-value meet in an identity block).
DeltaReport verify_delta_a(const DecompositionMatrix& d, const AValueMap& avals,
                           const std::vector<Multipartition>& basic,
                           const std::map<Multipartition, Multipartition>& beta);

}  // namespace heckeb
