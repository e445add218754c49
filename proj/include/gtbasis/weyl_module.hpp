#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "gtbasis/errors.hpp"
#include "gtbasis/linalg.hpp"
#include "gtbasis/module_vector.hpp"
#include "gtbasis/monomial.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/rational.hpp"

namespace gtb {

/// The highest weight vector of V^λ at rank n: column c carries the wedge
/// of the first λ'_c basis vectors, so E_{ii} acts with eigenvalue λ_i.
inline ModuleVector highest_weight_vector(const Partition& lambda, int n) {
    ModuleContext ctx(lambda, n);
    const Partition conj = ctx.conjugate();
    std::vector<std::vector<int>> columns;
    columns.reserve(static_cast<std::size_t>(conj.length()));
    for (int c = 1; c <= conj.length(); ++c) {
        std::vector<int> col(static_cast<std::size_t>(conj.part(c)));
        for (int i = 0; i < conj.part(c); ++i) col[static_cast<std::size_t>(i)] = i + 1;
        columns.push_back(std::move(col));
    }
    return ModuleVector::monomial(std::move(ctx), ColumnMonomial(std::move(columns)));
}

/// A monomial is semistandard when the rows of its associated tableau
/// weakly increase: col_c[r] <= col_{c+1}[r] wherever both entries exist.
inline bool monomial_is_semistandard(const ColumnMonomial& m) {
    const auto& cols = m.columns();
    for (std::size_t c = 0; c + 1 < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c + 1].size(); ++r)
            if (cols[c][r] > cols[c + 1][r]) return false;
    return true;
}

/// All semistandard monomials of the context in lexicographic order of their
/// concatenated columns; a basis of the quotient module, with cardinality
/// weyl_dimension(λ, n).
inline std::vector<ColumnMonomial> enumerate_semistandard_monomials(const ModuleContext& ctx) {
    const Partition conj = ctx.conjugate();
    const int ncols = conj.length();
    std::vector<ColumnMonomial> out;
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(ncols));

    std::function<void(int)> build = [&](int c) {
        if (c == ncols) {
            out.emplace_back(cols);
            return;
        }
        const int height = conj.part(c + 1);
        std::vector<int> col(static_cast<std::size_t>(height));
        std::function<void(int)> fill = [&](int r) {
            if (r == height) {
                cols[static_cast<std::size_t>(c)] = col;
                build(c + 1);
                return;
            }
            int lo = (r > 0) ? col[static_cast<std::size_t>(r - 1)] + 1 : 1;
            if (c > 0 && r < static_cast<int>(cols[static_cast<std::size_t>(c - 1)].size()))
                lo = std::max(lo, cols[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(r)]);
            for (int v = lo; v <= ctx.rank - (height - 1 - r); ++v) {
                col[static_cast<std::size_t>(r)] = v;
                fill(r + 1);
            }
        };
        fill(0);
    };
    build(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/// Position of the first semistandardness violation: leftmost adjacent
/// column pair, topmost row. Returns {column (0-based), row (0-based)} or
/// {-1, -1} when semistandard.
inline std::pair<int, int> first_violation(const ColumnMonomial& m) {
    const auto& cols = m.columns();
    for (std::size_t c = 0; c + 1 < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c + 1].size(); ++r)
            if (cols[c][r] > cols[c + 1][r]) return {static_cast<int>(c), static_cast<int>(r)};
    return {-1, -1};
}

/// One Garnir rewrite at columns (c, c+1) with a violation in row r: the
/// selected cells are the top r+1 entries of the right column, exchanged in
/// order against every (r+1)-subset of the left column. Emits the normalized
/// terms; the input monomial equals their signed sum modulo the exchange
/// relations.
///
/// Every emitted monomial is strictly larger than the input in the key
/// "columns right-to-left, each read bottom-to-top, compared lexically":
/// the selection removes the r+1 smallest entries of the right column and
/// any (r+1)-subset of the left column contains an element greater than the
/// violated entry, so the right column strictly grows in that key. This
/// well-founded increase is what terminates the straightening recursion.
inline std::vector<std::pair<ColumnMonomial, int>> garnir_expand(const ColumnMonomial& m, int c,
                                                                 int r) {
    const auto& cols = m.columns();
    const auto& left = cols[static_cast<std::size_t>(c)];
    const auto& right = cols[static_cast<std::size_t>(c + 1)];
    const int take = r + 1;

    std::vector<std::pair<ColumnMonomial, int>> terms;
    std::vector<int> subset(static_cast<std::size_t>(take));
    std::function<void(int, int)> choose = [&](int pos, int from) {
        if (pos == take) {
            auto raw = cols;
            auto& new_left = raw[static_cast<std::size_t>(c)];
            auto& new_right = raw[static_cast<std::size_t>(c + 1)];
            for (int t = 0; t < take; ++t) {
                new_left[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])] =
                    right[static_cast<std::size_t>(t)];
                new_right[static_cast<std::size_t>(t)] =
                    left[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])];
            }
            auto norm = normalize_monomial(std::move(raw));
            if (!norm.zero) terms.emplace_back(std::move(norm.monomial), norm.sign);
            return;
        }
        for (int p = from; p <= static_cast<int>(left.size()) - (take - pos); ++p) {
            subset[static_cast<std::size_t>(pos)] = p;
            choose(pos + 1, p + 1);
        }
    };
    choose(0, 0);
    return terms;
}

}  // namespace detail

/// Memo for straightening results of single monomials within one (λ, n)
/// context. Not synchronized; share one per thread or per task.
class StraightenCache {
public:
    explicit StraightenCache(ModuleContext ctx) : ctx_(std::move(ctx)) {}

    const ModuleContext& context() const { return ctx_; }

    const ModuleVector& straighten_monomial(const ColumnMonomial& m) {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;

        ModuleVector result(ctx_);
        auto [c, r] = detail::first_violation(m);
        if (c < 0) {
            result.add_term(m, 1);
        } else {
            for (const auto& [term, sign] : detail::garnir_expand(m, c, r)) {
                const ModuleVector& sub = straighten_monomial(term);
                if (sign > 0)
                    result += sub;
                else
                    result -= sub;
            }
        }
        return memo_.emplace(m, std::move(result)).first->second;
    }

private:
    ModuleContext ctx_;
    std::map<ColumnMonomial, ModuleVector> memo_;
};

/// Rewrites v modulo the exchange relations into the semistandard monomial
/// basis. Linear and idempotent; terminates by the well-founded key
/// documented at garnir_expand.
inline ModuleVector straighten(const ModuleVector& v, StraightenCache* cache = nullptr) {
    if (cache && !(cache->context() == v.context()))
        throw ContextMismatch("straighten cache belongs to a different module context");
    StraightenCache local{v.context()};
    StraightenCache& memo = cache ? *cache : local;
    ModuleVector out(v.context());
    for (const auto& [m, coeff] : v.terms()) {
        ModuleVector part = memo.straighten_monomial(m);
        part *= coeff;
        out += part;
    }
    return out;
}

/// The generator E_{ij} acting by the Leibniz rule across all tensor slots,
/// each slot by the tautological action e_j -> e_i; the result is
/// re-normalized and straightened.
inline ModuleVector act_basis(int i, int j, const ModuleVector& v, StraightenCache* cache = nullptr) {
    const int n = v.context().rank;
    if (i < 1 || i > n || j < 1 || j > n)
        throw IndexOutOfRange("generator indices (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside 1.." + std::to_string(n));
    if (cache && !(cache->context() == v.context()))
        throw ContextMismatch("straighten cache belongs to a different module context");
    StraightenCache local{v.context()};
    StraightenCache& memo = cache ? *cache : local;
    ModuleVector out(v.context());
    for (const auto& [m, coeff] : v.terms()) {
        const auto& cols = m.columns();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (std::size_t p = 0; p < cols[c].size(); ++p) {
                if (cols[c][p] != j) continue;
                auto raw = cols;
                raw[c][p] = i;
                auto norm = normalize_monomial(std::move(raw));
                if (norm.zero) continue;
                ModuleVector part = memo.straighten_monomial(norm.monomial);
                part *= (norm.sign > 0) ? coeff : -coeff;
                out += part;
            }
        }
    }
    return out;
}

/// Reinterprets v in the larger context (λ, new_rank); sends highest weight
/// vectors to highest weight vectors and intertwines act_basis for indices
/// within the smaller rank.
inline ModuleVector embed(const ModuleVector& v, int new_rank) {
    if (new_rank < v.context().rank)
        throw IndexOutOfRange("cannot embed rank " + std::to_string(v.context().rank) +
                              " into smaller rank " + std::to_string(new_rank));
    ModuleVector out(ModuleContext(v.context().shape, new_rank));
    for (const auto& [m, coeff] : v.terms()) out.add_term(m, coeff);
    return out;
}

/// The defect w − Σ w' of one exchange relation instance: columns c < d
/// (0-based) and a selected cell subset (0-based positions) of column d.
/// Straightens to zero for every choice; these defects generate the
/// relation subspace the module is divided by.
inline ModuleVector exchange_relation_defect(const ModuleVector& unit_monomial,
                                             const ColumnMonomial& m, int c, int d,
                                             const std::vector<int>& selected) {
    const auto& cols = m.columns();
    const int take = static_cast<int>(selected.size());
    if (take == 0) throw IndexOutOfRange("exchange selection must be nonempty");
    const auto& left = cols[static_cast<std::size_t>(c)];
    const auto& right = cols[static_cast<std::size_t>(d)];

    ModuleVector defect = unit_monomial;
    std::vector<int> subset(static_cast<std::size_t>(take));
    std::function<void(int, int)> choose = [&](int pos, int from) {
        if (pos == take) {
            auto raw = cols;
            auto& new_left = raw[static_cast<std::size_t>(c)];
            auto& new_right = raw[static_cast<std::size_t>(d)];
            for (int t = 0; t < take; ++t) {
                new_left[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])] =
                    right[static_cast<std::size_t>(selected[static_cast<std::size_t>(t)])];
                new_right[static_cast<std::size_t>(selected[static_cast<std::size_t>(t)])] =
                    left[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])];
            }
            auto norm = normalize_monomial(std::move(raw));
            if (!norm.zero)
                defect.add_term(norm.monomial, norm.sign > 0 ? Rational(-1) : Rational(1));
            return;
        }
        for (int p = from; p <= static_cast<int>(left.size()) - (take - pos); ++p) {
            subset[static_cast<std::size_t>(pos)] = p;
            choose(pos + 1, p + 1);
        }
    };
    choose(0, 0);
    return defect;
}

inline ModuleVector exchange_relation_defect(const ModuleContext& ctx, const ColumnMonomial& m,
                                             int c, int d, const std::vector<int>& selected) {
    return exchange_relation_defect(ModuleVector::monomial(ctx, m), m, c, d, selected);
}

/// Dimension of the span of {v_λ} closed under every generator action; the
/// finite-rank irreducibility witness, equal to weyl_dimension(λ, n).
inline Integer cyclic_span_dimension(const Partition& lambda, int n) {
    ModuleVector seed = highest_weight_vector(lambda, n);
    StraightenCache cache{seed.context()};
    SparseEchelon echelon;
    std::queue<ModuleVector> frontier;
    echelon.insert(seed);
    frontier.push(std::move(seed));
    while (!frontier.empty()) {
        ModuleVector v = std::move(frontier.front());
        frontier.pop();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                ModuleVector w = act_basis(i, j, v, &cache);
                if (w.is_zero()) continue;
                if (echelon.insert(w)) frontier.push(std::move(w));
            }
    }
    return Integer(echelon.rank());
}

}  // namespace gtb
