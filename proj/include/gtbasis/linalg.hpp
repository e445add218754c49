#pragma once

#include <map>
#include <vector>

#include "gtbasis/module_vector.hpp"

namespace gtb {

/// Incremental exact row echelon form over the rationals, keyed by the
/// leading column monomial. Supports rank computation and membership tests
/// for spans of module vectors.
class SparseEchelon {
public:
    /// Reduces v against the current pivots; when a nonzero remainder is
    /// left, stores it (made monic) as a new pivot and returns true.
    bool insert(ModuleVector v) {
        reduce(v);
        if (v.is_zero()) return false;
        const auto& [lead, coeff] = v.leading_term();
        ColumnMonomial pivot = lead;
        v *= Rational(1) / coeff;
        pivots_.emplace(std::move(pivot), std::move(v));
        return true;
    }

    /// True when v lies in the span of the inserted vectors.
    bool contains(ModuleVector v) const {
        reduce(v);
        return v.is_zero();
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    void reduce(ModuleVector& v) const {
        while (!v.is_zero()) {
            const auto& [lead, coeff] = v.leading_term();
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) return;
            v -= coeff * it->second;
        }
    }

    std::map<ColumnMonomial, ModuleVector> pivots_;
};

/// Exact rank of a family of vectors.
inline int rank_of(const std::vector<ModuleVector>& vectors) {
    SparseEchelon echelon;
    for (const auto& v : vectors) echelon.insert(v);
    return echelon.rank();
}

}  // namespace gtb
