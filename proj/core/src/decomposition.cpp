#include "heckeb/decomposition.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "heckeb/format.hpp"

namespace heckeb {

namespace {

// Counts bipartitions of n: sum_k p(k) p(n-k).
long long bipartition_count(int n) {
    std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m)
            p[static_cast<size_t>(m)] += p[static_cast<size_t>(m - part)];
    long long total = 0;
    for (int k = 0; k <= n; ++k)
        total += p[static_cast<size_t>(k)] * p[static_cast<size_t>(n - k)];
    return total;
}

Multipartition bipartition_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("matrix JSON: bipartition must be a pair of arrays");
    std::vector<Partition> comps;
    for (const auto& comp : j) {
        if (!comp.is_array())
            throw std::invalid_argument("matrix JSON: partition must be an array");
        std::vector<int> parts;
        for (const auto& v : comp) {
            if (!v.is_number_integer())
                throw std::invalid_argument("matrix JSON: parts must be integers");
            parts.push_back(v.get<int>());
        }
        comps.emplace_back(std::move(parts));
    }
    return Multipartition(std::move(comps));
}

}  // namespace

DecompositionMatrix::DecompositionMatrix(int n, std::vector<Multipartition> rows,
                                         std::vector<Multipartition> cols,
                                         std::vector<std::vector<int>> entries)
    : n_(n), rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries)) {
    if (n_ < 0)
        throw std::invalid_argument("DecompositionMatrix: n must be >= 0");
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].level() != 2 || rows_[i].size() != n_)
            throw std::invalid_argument("DecompositionMatrix: row label is not a bipartition of n");
        if (!row_index_.emplace(rows_[i], i).second)
            throw std::invalid_argument("DecompositionMatrix: duplicate row label " +
                                        to_text(rows_[i]));
    }
    if (static_cast<long long>(rows_.size()) != bipartition_count(n_))
        throw std::invalid_argument("DecompositionMatrix: row labels must exhaust the bipartitions of n");
    for (size_t j = 0; j < cols_.size(); ++j) {
        if (!row_index_.count(cols_[j]))
            throw std::invalid_argument("DecompositionMatrix: column label " + to_text(cols_[j]) +
                                        " is not a row label");
        if (!col_index_.emplace(cols_[j], j).second)
            throw std::invalid_argument("DecompositionMatrix: duplicate column label " +
                                        to_text(cols_[j]));
    }
    if (entries_.size() != rows_.size())
        throw std::invalid_argument("DecompositionMatrix: entry row count mismatch");
    for (const auto& row : entries_) {
        if (row.size() != cols_.size())
            throw std::invalid_argument("DecompositionMatrix: entry column count mismatch");
        for (int v : row)
            if (v < 0)
                throw std::invalid_argument("DecompositionMatrix: negative entry");
    }
}

DecompositionMatrix DecompositionMatrix::load(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("matrix JSON: parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows") ||
        !doc.contains("cols") || !doc.contains("entries"))
        throw std::invalid_argument("matrix JSON: expected keys n, rows, cols, entries");
    if (!doc["n"].is_number_integer())
        throw std::invalid_argument("matrix JSON: n must be an integer");

    std::vector<Multipartition> rows, cols;
    for (const auto& j : doc["rows"])
        rows.push_back(bipartition_from_json(j));
    for (const auto& j : doc["cols"])
        cols.push_back(bipartition_from_json(j));
    if (rows.empty())
        throw std::invalid_argument("matrix JSON: rows must be non-empty");

    std::vector<std::vector<int>> entries;
    for (const auto& row : doc["entries"]) {
        if (!row.is_array())
            throw std::invalid_argument("matrix JSON: entries must be an array of arrays");
        std::vector<int> vals;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw std::invalid_argument("matrix JSON: entries must be integers");
            vals.push_back(v.get<int>());
        }
        entries.push_back(std::move(vals));
    }
    return DecompositionMatrix(doc["n"].get<int>(), std::move(rows), std::move(cols),
                               std::move(entries));
}

int DecompositionMatrix::entry(const Multipartition& row, const Multipartition& col) const {
    const auto ri = row_index_.find(row);
    const auto ci = col_index_.find(col);
    if (ri == row_index_.end() || ci == col_index_.end())
        throw std::invalid_argument("DecompositionMatrix: unknown label");
    return entries_[ri->second][ci->second];
}

DeltaReport verify_delta(const DecompositionMatrix& d) {
    DeltaReport report;
    for (const auto& mu : d.cols()) {
        if (d.entry(mu, mu) != 1) {
            report.ok = false;
            report.violations.push_back("diagonal entry at " + to_text(mu) + " is " +
                                        std::to_string(d.entry(mu, mu)) + ", expected 1");
        }
    }
    for (size_t i = 0; i < d.rows().size(); ++i) {
        for (size_t j = 0; j < d.cols().size(); ++j) {
            if (d.entry(i, j) != 0 && !dominates(d.rows()[i], d.cols()[j])) {
                report.ok = false;
                report.violations.push_back("nonzero entry at row " + to_text(d.rows()[i]) +
                                            ", column " + to_text(d.cols()[j]) +
                                            " violates dominance");
            }
        }
    }
    return report;
}

BasicSetExtraction extract_basic_set(const DecompositionMatrix& d, const AValueMap& avals) {
    for (const auto& row : d.rows())
        if (!avals.count(row))
            throw std::invalid_argument("extract_basic_set: missing a-value for " + to_text(row));

    BasicSetExtraction result;
    std::map<Multipartition, Multipartition> image_to_col;
    for (size_t j = 0; j < d.cols().size(); ++j) {
        const Multipartition& mu = d.cols()[j];
        std::vector<size_t> support;
        for (size_t i = 0; i < d.rows().size(); ++i)
            if (d.entry(i, j) != 0)
                support.push_back(i);
        if (support.empty()) {
            result.ok = false;
            result.violations.push_back("column " + to_text(mu) + ": no nonzero entries");
            continue;
        }
        size_t best = support[0];
        bool tie = false;
        for (size_t k = 1; k < support.size(); ++k) {
            const long long cand = avals.at(d.rows()[support[k]]);
            const long long cur = avals.at(d.rows()[best]);
            if (cand < cur) {
                best = support[k];
                tie = false;
            } else if (cand == cur) {
                tie = true;
            }
        }
        const Multipartition& nu = d.rows()[best];
        if (tie) {
            result.ok = false;
            result.violations.push_back("column " + to_text(mu) +
                                        ": minimal a-value is not unique");
            continue;
        }
        if (d.entry(best, j) != 1) {
            result.ok = false;
            result.violations.push_back("column " + to_text(mu) + ": minimal row " + to_text(nu) +
                                        " has entry " + std::to_string(d.entry(best, j)) +
                                        ", expected 1");
            continue;
        }
        bool strict = true;
        for (size_t i : support)
            if (i != best && avals.at(d.rows()[i]) <= avals.at(nu))
                strict = false;
        if (!strict) {
            result.ok = false;
            result.violations.push_back("column " + to_text(mu) +
                                        ": a non-minimal nonzero row matches the minimal a-value");
            continue;
        }
        if (auto prev = image_to_col.find(nu); prev != image_to_col.end()) {
            result.ok = false;
            result.violations.push_back("columns " + to_text(prev->second) + " and " + to_text(mu) +
                                        " both select row " + to_text(nu));
            continue;
        }
        image_to_col.emplace(nu, mu);
        result.basic.push_back(nu);
        result.beta.emplace(mu, nu);
    }
    if (!result.ok) {
        result.basic.clear();
        result.beta.clear();
    }
    return result;
}

DeltaReport verify_delta_a(const DecompositionMatrix& d, const AValueMap& avals,
                           const std::vector<Multipartition>& basic,
                           const std::map<Multipartition, Multipartition>& beta) {
    for (const auto& row : d.rows())
        if (!avals.count(row))
            throw std::invalid_argument("verify_delta_a: missing a-value for " + to_text(row));
    if (beta.size() != d.cols().size() || basic.size() != d.cols().size())
        throw std::invalid_argument("verify_delta_a: beta must map every column label");
    std::map<Multipartition, Multipartition> col_of;  // basic-set label -> column
    for (const auto& [mu, nu] : beta) {
        if (!std::count(d.cols().begin(), d.cols().end(), mu))
            throw std::invalid_argument("verify_delta_a: beta domain must be the column labels");
        if (!col_of.emplace(nu, mu).second)
            throw std::invalid_argument("verify_delta_a: beta is not injective");
    }
    for (const auto& nu : basic)
        if (!col_of.count(nu))
            throw std::invalid_argument("verify_delta_a: basic set does not match beta image");

    DeltaReport report;
    for (const auto& [nu, mu] : col_of) {
        if (d.entry(nu, mu) != 1) {
            report.ok = false;
            report.violations.push_back("[S^" + to_text(nu) + " : M^" + to_text(nu) + "] = " +
                                        std::to_string(d.entry(nu, mu)) + ", expected 1");
        }
        for (const auto& lam : d.rows()) {
            if (d.entry(lam, mu) != 0 && lam != nu && avals.at(nu) >= avals.at(lam)) {
                report.ok = false;
                report.violations.push_back("column M^" + to_text(nu) + ": row " + to_text(lam) +
                                            " has a-value " + std::to_string(avals.at(lam)) +
                                            " <= " + std::to_string(avals.at(nu)));
            }
        }
    }

    // Block shape: order the basic set by increasing a-value; the square
    // submatrix indexed by it must be lower triangular with identity
    // blocks on equal a-values.
    std::vector<Multipartition> ordered = basic;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [&](const Multipartition& x, const Multipartition& y) {
                         return avals.at(x) < avals.at(y);
                     });
    for (const auto& nu_row : ordered) {
        for (const auto& nu_col : ordered) {
            const int value = d.entry(nu_row, col_of.at(nu_col));
            const long long ar = avals.at(nu_row);
            const long long ac = avals.at(nu_col);
            if (nu_row == nu_col)
                continue;  // diagonal checked above
            if (ar < ac && value != 0) {
                report.ok = false;
                report.violations.push_back("upper-triangular entry at S^" + to_text(nu_row) +
                                            ", M^" + to_text(nu_col) + " is nonzero");
            }
            if (ar == ac && value != 0) {
                report.ok = false;
                report.violations.push_back("equal-a block at S^" + to_text(nu_row) + ", M^" +
                                            to_text(nu_col) + " is not the identity");
            }
        }
    }
    return report;
}

}  // namespace heckeb
