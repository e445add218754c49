#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gtbasis/errors.hpp"
#include "gtbasis/lowering.hpp"
#include "gtbasis/module_vector.hpp"
#include "gtbasis/pattern.hpp"
#include "gtbasis/rational.hpp"
#include "gtbasis/weyl_module.hpp"

namespace gtb {

/// Polynomial in the spectral parameter u with module vector coefficients;
/// index s holds the coefficient of u^s. The leading coefficient is nonzero
/// unless the polynomial is zero.
class VectorPolynomial {
public:
    explicit VectorPolynomial(ModuleContext ctx) : ctx_(std::move(ctx)), zero_(ctx_) {}

    static VectorPolynomial constant(ModuleVector v) {
        VectorPolynomial p(v.context());
        if (!v.is_zero()) p.coeffs_.push_back(std::move(v));
        return p;
    }

    const ModuleContext& context() const { return ctx_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of u^s (the zero vector beyond the degree).
    const ModuleVector& coeff(int s) const {
        if (s < 0 || s > degree()) return zero_;
        return coeffs_[static_cast<std::size_t>(s)];
    }

    /// Multiplies by u: shifts all coefficients up one power.
    void shift_up() {
        if (is_zero()) return;
        coeffs_.insert(coeffs_.begin(), ModuleVector(ctx_));
    }

    void add_scaled(const VectorPolynomial& o, const Rational& s) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ModuleVector(ctx_));
        for (std::size_t t = 0; t < o.coeffs_.size(); ++t) {
            ModuleVector scaled = o.coeffs_[t];
            scaled *= s;
            coeffs_[t] += scaled;
        }
        trim();
    }

    VectorPolynomial& operator+=(const VectorPolynomial& o) {
        add_scaled(o, 1);
        return *this;
    }

    bool operator==(const VectorPolynomial& o) const {
        return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    ModuleContext ctx_;
    ModuleVector zero_;
    std::vector<ModuleVector> coeffs_;
};

/// The quantum minor A_m(u) = Σ_σ sgn(σ) L(u)_{σ(1)1} ... L(u−m+1)_{σ(m)m}
/// applied to v, rightmost factor first, where L(u−s)_{ab} acts as
/// (u−s)δ_{ab} + E_{ab}. Computed by direct expansion over the symmetric
/// group; monic of degree m on nonzero input.
inline VectorPolynomial apply_quantum_minor(int m, const ModuleVector& v,
                                            StraightenCache* cache = nullptr) {
    const int n = v.context().rank;
    if (m < 1 || m > n)
        throw IndexOutOfRange("quantum minor index " + std::to_string(m) + " outside 1.." +
                              std::to_string(n));
    StraightenCache local{v.context()};
    StraightenCache& memo = cache ? *cache : local;

    VectorPolynomial result(v.context());
    std::vector<int> sigma(static_cast<std::size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        int sign = 1;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)])
                    sign = -sign;

        VectorPolynomial term = VectorPolynomial::constant(v);
        for (int col = m; col >= 1 && !term.is_zero(); --col) {
            const int row = sigma[static_cast<std::size_t>(col - 1)];
            const int shift = col - 1;
            VectorPolynomial next(v.context());
            for (int s = 0; s <= term.degree(); ++s) {
                const ModuleVector& c = term.coeff(s);
                if (c.is_zero()) continue;
                ModuleVector acted = act_basis(row, col, c, &memo);
                if (!acted.is_zero()) {
                    VectorPolynomial piece = VectorPolynomial::constant(std::move(acted));
                    for (int t = 0; t < s; ++t) piece.shift_up();
                    next += piece;
                }
                if (row == col) {
                    VectorPolynomial power = VectorPolynomial::constant(c);
                    for (int t = 0; t < s; ++t) power.shift_up();
                    VectorPolynomial shifted = power;
                    shifted.shift_up();                 // u^{s+1} c
                    shifted.add_scaled(power, -shift);  // (u − shift) u^s c
                    next += shifted;
                }
            }
            term = std::move(next);
        }
        if (sign > 0)
            result += term;
        else
            result.add_scaled(term, -1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return result;
}

/// Spectral data of a pattern row: stores the shifted roots (λ_{mi} − i + 1)
/// exactly and expands to the monic integer polynomial
/// ∏_{i=1}^m (u + λ_{mi} − i + 1).
class EigenvaluePolynomial {
public:
    static EigenvaluePolynomial from_pattern(const GTPattern& pattern, int m) {
        if (m < 1 || m > pattern.rank())
            throw IndexOutOfRange("minor index " + std::to_string(m) + " outside pattern rank " +
                                  std::to_string(pattern.rank()));
        std::vector<int> roots(static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i)
            roots[static_cast<std::size_t>(i - 1)] = pattern.entry(m, i) - i + 1;
        return EigenvaluePolynomial(std::move(roots));
    }

    const std::vector<int>& shifted_roots() const { return roots_; }

    /// Ascending coefficients (constant term first) of the monic expansion.
    std::vector<Integer> coefficients() const {
        std::vector<Integer> coeffs{1};
        for (int root : roots_) {
            coeffs.push_back(0);
            for (std::size_t s = coeffs.size() - 1; s >= 1; --s)
                coeffs[s] = coeffs[s - 1] + coeffs[s] * root;
            coeffs[0] *= root;
        }
        return coeffs;
    }

private:
    explicit EigenvaluePolynomial(std::vector<int> roots) : roots_(std::move(roots)) {}
    std::vector<int> roots_;
};

/// Outcome of checking A_m(u) e_Λ = (eigenvalue polynomial)·e_Λ exactly.
struct SpectralReport {
    bool match = false;
    int m = 0;
    std::vector<Integer> expected;  // ascending coefficients
    int mismatch_power = -1;        // first differing u-power when !match
};

/// Verifies the spectral identity coefficientwise over exact rationals.
inline SpectralReport spectral_check(const GTPattern& pattern, int m, const ModuleVector& e,
                                     StraightenCache* cache = nullptr) {
    SpectralReport report;
    report.m = m;
    report.expected = EigenvaluePolynomial::from_pattern(pattern, m).coefficients();

    const VectorPolynomial lhs = apply_quantum_minor(m, e, cache);
    report.match = true;
    const int top = std::max(lhs.degree(), m);
    for (int s = 0; s <= top; ++s) {
        ModuleVector rhs(e.context());
        if (s <= m) {
            rhs = e;
            rhs *= Rational(report.expected[static_cast<std::size_t>(s)]);
        }
        if (!(lhs.coeff(s) == rhs)) {
            report.match = false;
            report.mismatch_power = s;
            break;
        }
    }
    return report;
}

inline SpectralReport spectral_check(const GTPattern& pattern, int m) {
    StraightenCache cache{
        ModuleContext(Partition{std::vector<int>(pattern.top_row())}, pattern.rank())};
    const ModuleVector e = basis_vector(pattern, &cache);
    return spectral_check(pattern, m, e, &cache);
}

/// The action of the central coefficient a_{mi}: the u^{m−i} coefficient of
/// A_m(u) applied to v.
inline ModuleVector central_coefficient_action(int m, int i, const ModuleVector& v,
                                               StraightenCache* cache = nullptr) {
    if (i < 1 || i > m) throw IndexOutOfRange("coefficient index " + std::to_string(i));
    return apply_quantum_minor(m, v, cache).coeff(m - i);
}

/// Witness of a failed centrality check: the sample and generator pair on
/// which a_{mi} failed to commute with E_{pq}.
struct CentralityWitness {
    bool commutes = true;
    int p = 0, q = 0;
    std::size_t sample = 0;
};

/// Verifies a_{mi} E_{pq} = E_{pq} a_{mi} on the samples for all p, q <= m.
inline CentralityWitness gz_centrality_check(int m, int i, const std::vector<ModuleVector>& samples,
                                             StraightenCache* cache = nullptr) {
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const ModuleVector& v = samples[s];
        StraightenCache local{v.context()};
        StraightenCache& memo = cache ? *cache : local;
        for (int p = 1; p <= m; ++p)
            for (int q = 1; q <= m; ++q) {
                const ModuleVector lhs =
                    central_coefficient_action(m, i, act_basis(p, q, v, &memo), &memo);
                const ModuleVector rhs =
                    act_basis(p, q, central_coefficient_action(m, i, v, &memo), &memo);
                if (!(lhs == rhs)) return CentralityWitness{false, p, q, s};
            }
    }
    return CentralityWitness{};
}

}  // namespace gtb
