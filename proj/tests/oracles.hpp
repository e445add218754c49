#pragma once

// Test-only oracles, deliberately independent of the library's constructive
// code paths: straight re-encodings of the defining conditions, checked by
// exhaustive search at desk scale.

#include <functional>
#include <vector>

#include "gtbasis/linalg.hpp"
#include "gtbasis/module_vector.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/weyl_module.hpp"

namespace oracle {

/// Direct re-check of the pattern conditions: triangularity, nonnegative
/// entries, interlacing, fixed top row.
inline bool is_valid_pattern(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) return false;
    for (int k = 1; k <= n; ++k)
        if (static_cast<int>(rows[k - 1].size()) != k) return false;
    for (const auto& row : rows)
        for (int x : row)
            if (x < 0) return false;
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i <= k - 1; ++i) {
            if (rows[k - 1][i - 1] < rows[k - 2][i - 1]) return false;
            if (rows[k - 2][i - 1] < rows[k - 1][i]) return false;
        }
    return true;
}

/// Exhaustive integer search over all triangles below a padded top row with
/// entries bounded by the largest part.
inline long long count_patterns_bruteforce(const gtb::Partition& lambda, int n) {
    const std::vector<int> top = lambda.padded(n);
    const int bound = lambda.part(1);
    const int cells = n * (n - 1) / 2;  // everything below the top row
    long long count = 0;
    std::vector<int> flat(static_cast<std::size_t>(cells), 0);
    std::function<void(int)> fill = [&](int pos) {
        if (pos == cells) {
            std::vector<std::vector<int>> rows;
            int at = 0;
            for (int k = 1; k <= n - 1; ++k) {
                rows.emplace_back(flat.begin() + at, flat.begin() + at + k);
                at += k;
            }
            rows.push_back(top);
            if (is_valid_pattern(rows)) ++count;
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            flat[static_cast<std::size_t>(pos)] = v;
            fill(pos + 1);
        }
    };
    if (n == 1) return is_valid_pattern({top}) ? 1 : 0;
    fill(0);
    return count;
}

/// All semistandard fillings of the shape with entries in 1..n, found by
/// direct cell-by-cell search against the two defining conditions.
inline std::vector<std::vector<std::vector<int>>> enumerate_ssyt_bruteforce(
    const gtb::Partition& shape, int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= shape.length(); ++r)
        rows.emplace_back(static_cast<std::size_t>(shape.part(r)), 0);
    if (shape.empty()) {
        out.push_back({});
        return out;
    }
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == shape.length()) {
            out.push_back(rows);
            return;
        }
        if (c == shape.part(r + 1)) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0 && c < shape.part(r))
            lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            fill(r, c + 1);
        }
    };
    fill(0, 0);
    return out;
}

inline long long count_ssyt_bruteforce(const gtb::Partition& shape, int n) {
    return static_cast<long long>(enumerate_ssyt_bruteforce(shape, n).size());
}

/// All canonical column monomials of the context (strictly increasing
/// columns, no semistandardness requirement): a basis of the unquotiented
/// tensor space.
inline std::vector<gtb::ColumnMonomial> enumerate_raw_monomials(const gtb::ModuleContext& ctx) {
    const gtb::Partition conj = ctx.conjugate();
    std::vector<gtb::ColumnMonomial> out;
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(conj.length()));
    std::function<void(int)> build = [&](int c) {
        if (c == conj.length()) {
            out.emplace_back(cols);
            return;
        }
        const int height = conj.part(c + 1);
        std::vector<int> col(static_cast<std::size_t>(height));
        std::function<void(int, int)> fill = [&](int r, int from) {
            if (r == height) {
                cols[static_cast<std::size_t>(c)] = col;
                build(c + 1);
                return;
            }
            for (int v = from; v <= ctx.rank - (height - 1 - r); ++v) {
                col[static_cast<std::size_t>(r)] = v;
                fill(r + 1, v + 1);
            }
        };
        fill(0, 1);
    };
    build(0);
    return out;
}

/// Every exchange-relation defect of the context: all column pairs c < d,
/// all nonempty cell subsets of column d, all raw monomials. Their span is
/// the relation subspace the Weyl module divides by.
inline std::vector<gtb::ModuleVector> all_exchange_defects(const gtb::ModuleContext& ctx) {
    std::vector<gtb::ModuleVector> defects;
    const gtb::Partition conj = ctx.conjugate();
    for (const auto& m : enumerate_raw_monomials(ctx)) {
        for (int c = 0; c < conj.length(); ++c)
            for (int d = c + 1; d < conj.length(); ++d) {
                const int height = conj.part(d + 1);
                for (unsigned mask = 1; mask < (1u << height); ++mask) {
                    std::vector<int> selected;
                    for (int b = 0; b < height; ++b)
                        if (mask & (1u << b)) selected.push_back(b);
                    defects.push_back(gtb::exchange_relation_defect(ctx, m, c, d, selected));
                }
            }
    }
    return defects;
}

/// Quotient dimension of the explicit model: dim(tensor space) − dim(span
/// of defects). The straightening path never enters this computation.
inline int quotient_dimension_bruteforce(const gtb::ModuleContext& ctx) {
    const auto raw = enumerate_raw_monomials(ctx);
    gtb::SparseEchelon relations;
    for (const auto& defect : all_exchange_defects(ctx)) relations.insert(defect);
    return static_cast<int>(raw.size()) - relations.rank();
}

}  // namespace oracle
