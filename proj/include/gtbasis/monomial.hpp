#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "gtbasis/errors.hpp"

namespace gtb {

/// Basis monomial of the Weyl module: one strictly increasing index column
/// per column of the Young diagram, column c holding λ'_c indices. The
/// canonical representative after wedge-sign normalization.
class ColumnMonomial {
public:
    ColumnMonomial() = default;
    explicit ColumnMonomial(std::vector<std::vector<int>> columns) : columns_(std::move(columns)) {}
    ColumnMonomial(std::initializer_list<std::vector<int>> columns) : columns_(columns) {}

    const std::vector<std::vector<int>>& columns() const { return columns_; }
    std::vector<std::vector<int>>& columns() { return columns_; }

    bool empty() const { return columns_.empty(); }

    /// Term-map order: lexicographic on the concatenated columns.
    /// Shapes agree within a module context, so the comparison is total.
    auto operator<=>(const ColumnMonomial& o) const { return columns_ <=> o.columns_; }
    bool operator==(const ColumnMonomial& o) const = default;

    /// Multiplicity of each index 1..n across all columns: the weight of
    /// the monomial as a Cartan eigenvector.
    std::vector<int> index_multiplicities(int n) const {
        std::vector<int> mult(static_cast<std::size_t>(n), 0);
        for (const auto& col : columns_)
            for (int idx : col) {
                if (idx < 1 || idx > n)
                    throw IndexOutOfRange("monomial index " + std::to_string(idx) +
                                          " outside 1.." + std::to_string(n));
                ++mult[static_cast<std::size_t>(idx - 1)];
            }
        return mult;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (c) s += "|";
            for (std::size_t i = 0; i < columns_[c].size(); ++i) {
                if (i) s += ",";
                s += std::to_string(columns_[c][i]);
            }
        }
        return s + "]";
    }

private:
    std::vector<std::vector<int>> columns_;
};

/// Result of sorting raw columns into wedge-canonical form: the sorted
/// monomial and the accumulated sign, or zero when a column repeats an index.
struct NormalizedMonomial {
    ColumnMonomial monomial;
    int sign = 1;
    bool zero = false;

    static NormalizedMonomial make_zero() { return NormalizedMonomial{ColumnMonomial{}, 0, true}; }
};

/// Sorts each column, accumulating the permutation sign; a repeated index in
/// a column kills the monomial (wedge nilpotency).
inline NormalizedMonomial normalize_monomial(std::vector<std::vector<int>> raw) {
    int sign = 1;
    for (auto& col : raw) {
        // Insertion sort, counting transpositions.
        for (std::size_t i = 1; i < col.size(); ++i) {
            int v = col[i];
            std::size_t j = i;
            while (j > 0 && col[j - 1] > v) {
                col[j] = col[j - 1];
                --j;
                sign = -sign;
            }
            col[j] = v;
        }
        for (std::size_t i = 1; i < col.size(); ++i)
            if (col[i] == col[i - 1]) return NormalizedMonomial::make_zero();
    }
    return NormalizedMonomial{ColumnMonomial(std::move(raw)), sign, false};
}

}  // namespace gtb
