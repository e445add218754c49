#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "gtbasis/errors.hpp"
#include "gtbasis/lowering.hpp"
#include "gtbasis/module_vector.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/pattern.hpp"
#include "gtbasis/weyl_module.hpp"

namespace gtb {

/// A vector of the direct-limit module, held at the minimal rank that can
/// carry it; embeddings to any larger rank are on demand and functorial.
struct TowerVector {
    ModuleVector representative;
    int base_rank = 0;

    ModuleVector at_rank(int n) const {
        if (n == base_rank) return representative;
        return embed(representative, n);
    }
};

/// Smallest rank whose Weyl module carries the vectors of this pattern:
/// the degree, bumped up to the weight length (columns of v_λ have height
/// len λ).
inline int minimal_carrier_rank(const InfiniteGTPattern& p) {
    return std::max({p.degree(), p.weight().length(), 1});
}

/// The basis vector e_Λ of an infinite pattern, computed at the minimal
/// sufficient rank from the finite triangle (extended by the forced rows
/// when the degree sits below the weight length; those contribute only
/// zero-exponent factors).
inline TowerVector stable_basis_vector(const InfiniteGTPattern& pattern,
                                       StraightenCache* cache = nullptr) {
    const int n0 = minimal_carrier_rank(pattern);
    return TowerVector{basis_vector(pattern.truncate(n0), cache), n0};
}

/// Result of the rank-stability test along the embedding chain.
struct StabilityResult {
    bool stable = true;
    int first_failing_rank = -1;

    explicit operator bool() const { return stable; }
};

/// Checks that for every n in [carrier rank, up_to) the embedding of e_Λ
/// computed at rank n equals e_Λ recomputed at rank n+1 from the extended
/// pattern, exactly as module vectors.
inline StabilityResult stability_check(const InfiniteGTPattern& pattern, int up_to) {
    const int n0 = minimal_carrier_rank(pattern);
    if (up_to < pattern.degree())
        throw IndexOutOfRange("stability bound " + std::to_string(up_to) +
                              " below pattern degree " + std::to_string(pattern.degree()));
    ModuleVector current = basis_vector(pattern.truncate(n0));
    for (int n = n0; n < up_to; ++n) {
        ModuleVector next = basis_vector(pattern.truncate(n + 1));
        if (!(embed(current, n + 1) == next)) return StabilityResult{false, n + 1};
        current = std::move(next);
    }
    return StabilityResult{};
}

/// The wedge monomial basis e_{i_1} ∧ ... ∧ e_{i_k} of the fundamental
/// module λ = (1^k) at rank n, indices strictly increasing, in lexicographic
/// order. (Repeated indices would vanish, so the weak inequalities some
/// sources print are read as strict.)
inline std::vector<ModuleVector> fundamental_basis(int k, int n) {
    if (k < 1 || k > n)
        throw IndexOutOfRange("wedge degree " + std::to_string(k) + " outside 1.." +
                              std::to_string(n));
    ModuleContext ctx(Partition{std::vector<int>(static_cast<std::size_t>(k), 1)}, n);
    std::vector<ModuleVector> out;
    std::vector<int> tuple(static_cast<std::size_t>(k));
    std::function<void(int, int)> build = [&](int pos, int from) {
        if (pos == k) {
            out.push_back(ModuleVector::monomial(ctx, ColumnMonomial({tuple})));
            return;
        }
        for (int v = from; v <= n - (k - 1 - pos); ++v) {
            tuple[static_cast<std::size_t>(pos)] = v;
            build(pos + 1, v + 1);
        }
    };
    build(0, 1);
    return out;
}

/// One matched pair of the fundamental correspondence: the pattern, the
/// wedge monomial its basis vector is proportional to, and the scalar.
struct FundamentalMatch {
    GTPattern pattern;
    ColumnMonomial monomial;
    Rational scalar;
};

/// Matches gt_basis((1^k), n) against the wedge monomials: every basis
/// vector must be a nonzero scalar multiple of a distinct monomial and the
/// correspondence must be a bijection. Throws RankDeficient when it is not.
inline std::vector<FundamentalMatch> match_fundamental_basis(int k, int n) {
    const Partition lambda{std::vector<int>(static_cast<std::size_t>(k), 1)};
    auto basis = gt_basis(lambda, n);
    std::vector<FundamentalMatch> matches;
    matches.reserve(basis.size());
    std::vector<ColumnMonomial> seen;
    for (auto& [pattern, vector] : basis) {
        if (vector.term_count() != 1)
            throw RankDeficient("fundamental basis vector of " + pattern.to_string() +
                                " is not a single wedge monomial");
        const auto& [monomial, coeff] = *vector.terms().begin();
        if (std::find(seen.begin(), seen.end(), monomial) != seen.end())
            throw RankDeficient("fundamental correspondence is not injective at " +
                                monomial.to_string());
        seen.push_back(monomial);
        matches.push_back(FundamentalMatch{pattern, monomial, coeff});
    }
    return matches;
}

}  // namespace gtb
