#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtbasis/errors.hpp"
#include "gtbasis/monomial.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/rational.hpp"

namespace gtb {

/// The (λ, n) context a module vector lives in. Rank must accommodate the
/// weight: columns have height up to λ'_1 = len(λ).
struct ModuleContext {
    Partition shape;
    int rank = 0;

    ModuleContext() = default;
    ModuleContext(Partition shape_, int rank_) : shape(std::move(shape_)), rank(rank_) {
        if (shape.length() > rank)
            throw WeightTooLong("weight " + shape.to_string() + " does not fit in rank " +
                                std::to_string(rank));
    }

    Partition conjugate() const { return shape.conjugate(); }

    /// Checks that a monomial has the conjugate column profile with strictly
    /// increasing columns over 1..rank.
    bool admits(const ColumnMonomial& m) const {
        const Partition conj = conjugate();
        if (static_cast<int>(m.columns().size()) != conj.length()) return false;
        for (int c = 1; c <= conj.length(); ++c) {
            const auto& col = m.columns()[static_cast<std::size_t>(c - 1)];
            if (static_cast<int>(col.size()) != conj.part(c)) return false;
            for (std::size_t i = 0; i < col.size(); ++i) {
                if (col[i] < 1 || col[i] > rank) return false;
                if (i > 0 && col[i - 1] >= col[i]) return false;
            }
        }
        return true;
    }

    bool operator==(const ModuleContext& o) const = default;
};

/// Exact sparse vector of the Weyl module: a finite map from canonical
/// column monomials to nonzero rational coefficients. Immutable in spirit;
/// mutating helpers keep the no-zero-coefficients invariant.
class ModuleVector {
public:
    using TermMap = std::map<ColumnMonomial, Rational>;

    ModuleVector() = default;
    explicit ModuleVector(ModuleContext ctx) : ctx_(std::move(ctx)) {}

    static ModuleVector zero(ModuleContext ctx) { return ModuleVector(std::move(ctx)); }

    static ModuleVector monomial(ModuleContext ctx, ColumnMonomial m, Rational coeff = 1) {
        ModuleVector v(std::move(ctx));
        if (!v.ctx_.admits(m))
            throw ShapeError("monomial " + m.to_string() + " does not live in context (" +
                             v.ctx_.shape.to_string() + "; n=" + std::to_string(v.ctx_.rank) + ")");
        if (coeff != 0) v.terms_.emplace(std::move(m), std::move(coeff));
        return v;
    }

    const ModuleContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a monomial (zero when absent).
    Rational coeff(const ColumnMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds coeff * m, erasing the entry if it cancels.
    void add_term(const ColumnMonomial& m, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ModuleVector& operator+=(const ModuleVector& o) {
        require_same_context(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    ModuleVector& operator-=(const ModuleVector& o) {
        require_same_context(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    ModuleVector& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const Rational& s, ModuleVector v) { return v *= s; }

    bool operator==(const ModuleVector& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }

    /// Leading term in the monomial order; throws on the zero vector.
    const std::pair<const ColumnMonomial, Rational>& leading_term() const {
        if (terms_.empty()) throw ZeroVectorError("zero vector has no leading term");
        return *terms_.begin();
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += coeff_to_string(c) + "*" + m.to_string();
        }
        return s;
    }

private:
    void require_same_context(const ModuleVector& o) const {
        if (!(ctx_ == o.ctx_))
            throw ContextMismatch("vectors live in different module contexts: (" +
                                  ctx_.shape.to_string() + "; n=" + std::to_string(ctx_.rank) +
                                  ") vs (" + o.ctx_.shape.to_string() +
                                  "; n=" + std::to_string(o.ctx_.rank) + ")");
    }

    ModuleContext ctx_;
    TermMap terms_;
};

/// The common gl(n)-weight of every monomial of v, or nullopt when v is not
/// homogeneous. Throws ZeroVectorError on the zero vector.
inline std::optional<std::vector<int>> weight_of(const ModuleVector& v) {
    if (v.is_zero()) throw ZeroVectorError("weight of the zero vector is undefined");
    std::optional<std::vector<int>> weight;
    for (const auto& [m, c] : v.terms()) {
        auto mult = m.index_multiplicities(v.context().rank);
        if (!weight)
            weight = std::move(mult);
        else if (*weight != mult)
            return std::nullopt;
    }
    return weight;
}

}  // namespace gtb
