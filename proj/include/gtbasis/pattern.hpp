#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "gtbasis/errors.hpp"
#include "gtbasis/partition.hpp"

namespace gtb {

/// Triangular Gelfand-Tsetlin pattern of rank n. Rows are stored bottom-up:
/// row 1 is the single bottom entry, row n is the top row. Entries are
/// nonnegative (polynomial case) and consecutive rows interlace:
///   row[k][i] >= row[k-1][i] >= row[k][i+1].
class GTPattern {
public:
    /// Checks triangularity, nonnegativity and interlacing; throws
    /// ShapeError / NegativeEntry / InterlacingViolation.
    static GTPattern validate(std::vector<std::vector<int>> rows) {
        if (rows.empty()) throw ShapeError("pattern must have at least one row");
        const int n = static_cast<int>(rows.size());
        for (int k = 1; k <= n; ++k) {
            const auto& row = rows[static_cast<std::size_t>(k - 1)];
            if (static_cast<int>(row.size()) != k)
                throw ShapeError("row " + std::to_string(k) + " has length " +
                                 std::to_string(row.size()) + ", expected " + std::to_string(k));
            for (int x : row)
                if (x < 0) throw NegativeEntry("pattern entry " + std::to_string(x) + " is negative");
        }
        for (int k = 2; k <= n; ++k) {
            const auto& upper = rows[static_cast<std::size_t>(k - 1)];
            const auto& lower = rows[static_cast<std::size_t>(k - 2)];
            for (int i = 1; i <= k - 1; ++i) {
                const int up = upper[static_cast<std::size_t>(i - 1)];
                const int mid = lower[static_cast<std::size_t>(i - 1)];
                const int next = upper[static_cast<std::size_t>(i)];
                if (!(up >= mid && mid >= next))
                    throw InterlacingViolation(
                        k, i,
                        "interlacing fails at (k=" + std::to_string(k) + ", i=" + std::to_string(i) +
                            "): need " + std::to_string(up) + " >= " + std::to_string(mid) +
                            " >= " + std::to_string(next));
            }
        }
        return GTPattern(n, std::move(rows));
    }

    int rank() const { return n_; }

    /// 1-indexed row from the bottom; row k has k entries.
    const std::vector<int>& row(int k) const {
        if (k < 1 || k > n_) throw IndexOutOfRange("row " + std::to_string(k));
        return rows_[static_cast<std::size_t>(k - 1)];
    }

    /// Entry λ_{ki}, 1-indexed.
    int entry(int k, int i) const {
        const auto& r = row(k);
        if (i < 1 || i > k) throw IndexOutOfRange("entry index " + std::to_string(i));
        return r[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    const std::vector<int>& top_row() const { return rows_.back(); }

    /// The gl(n)-weight of the associated basis vector: component k is
    /// rowsum(k) − rowsum(k−1).
    std::vector<int> weight() const {
        std::vector<int> w(static_cast<std::size_t>(n_), 0);
        int prev = 0;
        for (int k = 1; k <= n_; ++k) {
            int sum = 0;
            for (int x : row(k)) sum += x;
            w[static_cast<std::size_t>(k - 1)] = sum - prev;
            prev = sum;
        }
        return w;
    }

    /// Smallest N >= 1 such that every row above N only extends the row
    /// below it (all differences λ_{ki} − λ_{k−1,i} vanish for N < k <= rank).
    int degree() const {
        for (int k = n_; k >= 2; --k) {
            const auto& upper = row(k);
            const auto& lower = row(k - 1);
            for (int i = 0; i < k - 1; ++i)
                if (upper[static_cast<std::size_t>(i)] != lower[static_cast<std::size_t>(i)]) return k;
        }
        return 1;
    }

    /// Concatenation of rows read bottom-up; the library-wide enumeration key.
    std::vector<int> flat_key() const {
        std::vector<int> key;
        key.reserve(static_cast<std::size_t>(n_ * (n_ + 1) / 2));
        for (const auto& r : rows_) key.insert(key.end(), r.begin(), r.end());
        return key;
    }

    bool operator==(const GTPattern& o) const = default;

    std::string to_string() const {
        std::string s;
        for (int k = 1; k <= n_; ++k) {
            if (k > 1) s += " / ";
            const auto& r = row(k);
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(r[i]);
            }
        }
        return s;
    }

private:
    GTPattern(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {}

    int n_ = 0;
    std::vector<std::vector<int>> rows_;
};

namespace detail {

/// Enumerates all patterns below a fixed top row, recursing downward; each
/// lower row entry i ranges over [upper[i+1], upper[i]].
inline void enumerate_below(std::vector<std::vector<int>>& acc, const std::vector<int>& upper,
                            const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    const int k = static_cast<int>(upper.size());
    if (k == 1) {
        emit(acc);
        return;
    }
    std::vector<int> lower(static_cast<std::size_t>(k - 1));
    std::function<void(int)> fill = [&](int i) {
        if (i == k - 1) {
            acc.push_back(lower);
            enumerate_below(acc, lower, emit);
            acc.pop_back();
            return;
        }
        const int hi = upper[static_cast<std::size_t>(i)];
        const int lo = upper[static_cast<std::size_t>(i + 1)];
        for (int x = lo; x <= hi; ++x) {
            lower[static_cast<std::size_t>(i)] = x;
            fill(i + 1);
        }
    };
    fill(0);
}

}  // namespace detail

/// All Gelfand-Tsetlin patterns with top row λ zero-padded to rank n, in
/// lexicographic order of the concatenated rows read bottom-up. The count
/// equals weyl_dimension(λ, n).
inline std::vector<GTPattern> enumerate_patterns(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw WeightTooLong("weight " + lambda.to_string() + " has more than " + std::to_string(n) +
                            " parts");
    const std::vector<int> top = lambda.padded(n);
    std::vector<GTPattern> out;
    std::vector<std::vector<int>> acc;  // rows top-down, excluding the top row
    detail::enumerate_below(acc, top, [&](const std::vector<std::vector<int>>& below) {
        std::vector<std::vector<int>> rows;
        rows.reserve(static_cast<std::size_t>(n));
        for (auto it = below.rbegin(); it != below.rend(); ++it) rows.push_back(*it);
        rows.push_back(top);
        out.push_back(GTPattern::validate(std::move(rows)));
    });
    std::sort(out.begin(), out.end(),
              [](const GTPattern& a, const GTPattern& b) { return a.flat_key() < b.flat_key(); });
    return out;
}

/// Infinite Gelfand-Tsetlin pattern stored as finite data: the highest
/// weight λ, the degree d, and the triangle of the first d rows. Every row
/// k >= d is forced to be λ cut to length k (truncated below len(λ),
/// zero-padded above), so nothing else needs storing.
class InfiniteGTPattern {
public:
    /// Builds from a finite triangle whose top row must equal λ cut to the
    /// triangle rank; recomputes and stores the minimal degree.
    static InfiniteGTPattern from_triangle(Partition weight, GTPattern triangle) {
        const int r = triangle.rank();
        if (triangle.top_row() != weight.cut(r))
            throw ShapeError("triangle top row does not match weight " + weight.to_string() +
                             " cut to rank " + std::to_string(r));
        const int deg = triangle.degree();
        if (deg < r) {
            // Store minimally: drop the forced rows above the degree.
            std::vector<std::vector<int>> rows(triangle.rows().begin(),
                                               triangle.rows().begin() + deg);
            return InfiniteGTPattern(std::move(weight), GTPattern::validate(std::move(rows)), deg);
        }
        return InfiniteGTPattern(std::move(weight), std::move(triangle), deg);
    }

    const Partition& weight() const { return weight_; }
    const GTPattern& triangle() const { return triangle_; }
    int degree() const { return degree_; }

    /// Row k of the infinite pattern for any k >= 1.
    std::vector<int> row(int k) const {
        if (k < 1) throw IndexOutOfRange("row " + std::to_string(k));
        if (k <= degree_) return triangle_.row(k);
        return weight_.cut(k);
    }

    /// Finite truncation to rank n >= degree: a valid GTPattern whose rows
    /// above the degree are the forced λ-cuts.
    GTPattern truncate(int n) const {
        if (n < degree_)
            throw IndexOutOfRange("cannot truncate degree-" + std::to_string(degree_) +
                                  " pattern to rank " + std::to_string(n));
        std::vector<std::vector<int>> rows;
        rows.reserve(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) rows.push_back(row(k));
        return GTPattern::validate(std::move(rows));
    }

    bool operator==(const InfiniteGTPattern& o) const = default;

private:
    InfiniteGTPattern(Partition weight, GTPattern triangle, int degree)
        : weight_(std::move(weight)), triangle_(std::move(triangle)), degree_(degree) {}

    Partition weight_;
    GTPattern triangle_;
    int degree_;
};

/// The degree of an infinite pattern. The empty weight's unique pattern has
/// degree 1 by convention.
inline int pattern_degree(const InfiniteGTPattern& p) { return p.degree(); }

/// All infinite patterns of degree <= max_degree, stratified: ascending
/// degree, then the finite enumeration order of the degree-d triangles.
/// With max_degree >= len(λ) the union bijects with the rank-max_degree
/// patterns; smaller bounds list the shallow strata only.
inline std::vector<InfiniteGTPattern> enumerate_infinite_patterns(const Partition& lambda,
                                                                  int max_degree) {
    if (max_degree < 1)
        throw IndexOutOfRange("max_degree " + std::to_string(max_degree) + " must be positive");
    std::vector<InfiniteGTPattern> out;
    for (int d = 1; d <= max_degree; ++d) {
        // Row d of a degree-d pattern is forced to be λ cut to length d.
        const Partition top_cut{lambda.cut(d)};
        for (const auto& tri : enumerate_patterns(top_cut, d)) {
            if (tri.degree() != d) continue;  // already listed in a lower stratum
            out.push_back(InfiniteGTPattern::from_triangle(lambda, tri));
        }
    }
    return out;
}

}  // namespace gtb
