#pragma once

#include <string>
#include <vector>

#include "gtbasis/errors.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/pattern.hpp"

namespace gtb {

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase, entries lie in 1..max_entry.
class Tableau {
public:
    static Tableau validate(std::vector<std::vector<int>> rows, int max_entry) {
        if (max_entry < 0) throw EntryOutOfRange("negative entry bound");
        std::vector<int> shape_parts;
        shape_parts.reserve(rows.size());
        for (const auto& r : rows) {
            if (r.empty()) throw ShapeError("tableau has an empty row");
            shape_parts.push_back(static_cast<int>(r.size()));
        }
        Partition shape(std::move(shape_parts));  // throws unless weakly decreasing
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                const int v = rows[i][j];
                if (v < 1 || v > max_entry)
                    throw EntryOutOfRange("entry " + std::to_string(v) + " outside 1.." +
                                          std::to_string(max_entry));
                if (j > 0 && rows[i][j - 1] > v)
                    throw ShapeError("row " + std::to_string(i + 1) + " is not weakly increasing");
                if (i > 0 && j < rows[i - 1].size() && rows[i - 1][j] >= v)
                    throw ShapeError("column " + std::to_string(j + 1) +
                                     " is not strictly increasing");
            }
        }
        return Tableau(std::move(shape), std::move(rows), max_entry);
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int max_entry() const { return max_entry_; }

    /// Number of cells with entry <= bound in the given 1-indexed row.
    int count_leq(int row, int bound) const {
        if (row < 1 || row > static_cast<int>(rows_.size())) return 0;
        int count = 0;
        for (int v : rows_[static_cast<std::size_t>(row - 1)])
            if (v <= bound) ++count;
        return count;
    }

    bool operator==(const Tableau& o) const {
        return rows_ == o.rows_;  // shape is derived; bound is context
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += " / ";
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) s += ",";
                s += std::to_string(rows_[i][j]);
            }
        }
        return s.empty() ? "()" : s;
    }

private:
    Tableau(Partition shape, std::vector<std::vector<int>> rows, int max_entry)
        : shape_(std::move(shape)), rows_(std::move(rows)), max_entry_(max_entry) {}

    Partition shape_;
    std::vector<std::vector<int>> rows_;
    int max_entry_;
};

/// The tableau T with (number of entries <= i in row j of T) = λ_{ij}.
/// Inverse of tableau_to_pattern; total on valid patterns.
inline Tableau pattern_to_tableau(const GTPattern& p) {
    const int n = p.rank();
    std::vector<std::vector<int>> rows;
    for (int j = 1; j <= n; ++j) {
        std::vector<int> row;
        for (int i = j; i <= n; ++i) {
            const int now = p.entry(i, j);
            const int before = (j <= i - 1) ? p.entry(i - 1, j) : 0;
            for (int c = before; c < now; ++c) row.push_back(i);
        }
        if (row.empty()) break;  // shapes are partitions; later rows are empty too
        rows.push_back(std::move(row));
    }
    return Tableau::validate(std::move(rows), n);
}

/// The pattern with λ_{ij} = number of entries <= i in row j of T; rank n
/// must be at least the largest entry.
inline GTPattern tableau_to_pattern(const Tableau& t, int n) {
    for (const auto& row : t.rows())
        for (int v : row)
            if (v > n)
                throw EntryOutOfRange("tableau entry " + std::to_string(v) + " exceeds rank " +
                                      std::to_string(n));
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        std::vector<int> row(static_cast<std::size_t>(i), 0);
        for (int j = 1; j <= i; ++j) row[static_cast<std::size_t>(j - 1)] = t.count_leq(j, i);
        rows.push_back(std::move(row));
    }
    return GTPattern::validate(std::move(rows));
}

inline GTPattern tableau_to_pattern(const Tableau& t) { return tableau_to_pattern(t, t.max_entry()); }

}  // namespace gtb
