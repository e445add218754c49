#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gtbasis/errors.hpp"
#include "gtbasis/linalg.hpp"
#include "gtbasis/module_vector.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/pattern.hpp"
#include "gtbasis/weyl_module.hpp"

namespace gtb {

/// Lowering operator z_{ki} applied to a weight vector. The operator is the
/// chain sum over i < i_1 < ... < i_p < k (p = 0 included) of the word
/// E_{i_1 i} E_{i_2 i_1} ... E_{k i_p} with the diagonal correction factors
/// (E_{ii} − E_{jj} + j − i) over the complement of the chain in
/// {i+1, ..., k−1} standing rightmost. Products act rightmost first, so the
/// corrections evaluate to exact integer scalars on the incoming weight
/// vector before any word is applied.
inline ModuleVector apply_lowering(int k, int i, const ModuleVector& v,
                                   StraightenCache* cache = nullptr) {
    const int n = v.context().rank;
    if (!(1 <= i && i < k && k <= n))
        throw IndexOutOfRange("lowering operator needs 1 <= i < k <= n, got i=" + std::to_string(i) +
                              ", k=" + std::to_string(k) + ", n=" + std::to_string(n));
    ModuleVector out(v.context());
    if (v.is_zero()) return out;

    const auto weight = weight_of(v);
    if (!weight)
        throw ZeroVectorError("lowering operator applied to a non-homogeneous vector");
    const auto w = [&](int idx) { return (*weight)[static_cast<std::size_t>(idx - 1)]; };

    const int between = k - i - 1;  // candidates i+1 .. k-1
    for (unsigned long long mask = 0; mask < (1ull << between); ++mask) {
        std::vector<int> chain;
        Integer scalar = 1;
        for (int b = 0; b < between; ++b) {
            const int j = i + 1 + b;
            if (mask & (1ull << b))
                chain.push_back(j);
            else
                scalar *= w(i) - w(j) + (j - i);
        }
        if (scalar == 0) continue;

        ModuleVector term = v;
        if (chain.empty()) {
            term = act_basis(k, i, term, cache);
        } else {
            term = act_basis(k, chain.back(), term, cache);
            for (std::size_t t = chain.size() - 1; t >= 1; --t)
                term = act_basis(chain[t], chain[t - 1], term, cache);
            term = act_basis(chain.front(), i, term, cache);
        }
        term *= Rational(scalar);
        out += term;
    }
    return out;
}

/// The Gelfand-Tsetlin basis vector e_Λ: the ordered product over k = 2..n
/// of the block ∏_{i=1}^{k−1} z_{ki}^{λ_{ki} − λ_{k−1,i}} applied to v_λ.
/// Blocks are written with k increasing and act on v_λ from the right, so
/// the k = n block is applied first; within a block the i = k−1 factor is
/// applied first. Throws ZeroVectorProduced when the product collapses,
/// which signals a convention error and never fires in the accepted setup.
inline ModuleVector basis_vector(const GTPattern& pattern, StraightenCache* cache = nullptr) {
    const int n = pattern.rank();
    const Partition lambda{std::vector<int>(pattern.top_row())};
    ModuleVector v = highest_weight_vector(lambda, n);
    StraightenCache local{v.context()};
    StraightenCache& memo = cache ? *cache : local;

    for (int k = n; k >= 2; --k) {
        for (int i = k - 1; i >= 1; --i) {
            const int exponent = pattern.entry(k, i) - pattern.entry(k - 1, i);
            for (int e = 0; e < exponent; ++e) {
                v = apply_lowering(k, i, v, &memo);
                if (v.is_zero())
                    throw ZeroVectorProduced("z_{" + std::to_string(k) + "," + std::to_string(i) +
                                             "} collapsed the basis vector of pattern " +
                                             pattern.to_string());
            }
        }
    }
    return v;
}

/// The full Gelfand-Tsetlin basis of V^λ at rank n: one vector per pattern,
/// in enumeration order. Verifies exact linear independence and throws
/// RankDeficient when the family degenerates.
inline std::vector<std::pair<GTPattern, ModuleVector>> gt_basis(const Partition& lambda, int n) {
    const auto patterns = enumerate_patterns(lambda, n);
    StraightenCache cache{ModuleContext(lambda, n)};
    std::vector<std::pair<GTPattern, ModuleVector>> out;
    out.reserve(patterns.size());
    SparseEchelon echelon;
    for (const auto& p : patterns) {
        ModuleVector v = basis_vector(p, &cache);
        if (!echelon.insert(v))
            throw RankDeficient("basis vector of pattern " + p.to_string() +
                                " is linearly dependent on its predecessors");
        out.emplace_back(p, std::move(v));
    }
    return out;
}

}  // namespace gtb
