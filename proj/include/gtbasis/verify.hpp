#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gtbasis/colimit.hpp"
#include "gtbasis/json_io.hpp"
#include "gtbasis/linalg.hpp"
#include "gtbasis/lowering.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/pattern.hpp"
#include "gtbasis/quantum_minor.hpp"
#include "gtbasis/tableau.hpp"
#include "gtbasis/weyl_module.hpp"

namespace gtb {

struct VerifyOptions {
    int threads = 1;      // worker count for the spectral sweep
    bool perturb = false; // flip one coefficient to prove the checker can fail
};

/// Deterministic summary of the full property suite for one (λ, n).
struct VerifyReport {
    Partition weight;
    int rank = 0;
    long long pattern_count = 0;
    long long spectral_checks = 0;
    long long spectral_mismatches = 0;
    bool dimension_ok = false;
    bool rank_ok = false;
    bool weights_ok = false;
    bool highest_weight_ok = false;
    bool stability_ok = false;
    bool eigenvalues_separate = false;

    bool ok() const {
        return dimension_ok && spectral_mismatches == 0 && rank_ok && weights_ok &&
               highest_weight_ok && stability_ok && eigenvalues_separate;
    }

    std::string summary_line() const {
        std::ostringstream os;
        os << pattern_count << " patterns, " << spectral_checks << " spectral checks, ";
        if (ok())
            os << "all match";
        else
            os << "FAILURES detected";
        return os.str();
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "weight=(" << weight.to_string() << ") rank=" << rank << "\n";
        os << "dimension agreement: " << (dimension_ok ? "ok" : "FAIL") << "\n";
        os << "spectral: " << spectral_checks << " checks, " << spectral_mismatches
           << " mismatches: " << (spectral_mismatches == 0 ? "ok" : "FAIL") << "\n";
        os << "basis rank: " << (rank_ok ? "ok" : "FAIL") << "\n";
        os << "pattern weights: " << (weights_ok ? "ok" : "FAIL") << "\n";
        os << "highest weight vector: " << (highest_weight_ok ? "ok" : "FAIL") << "\n";
        os << "stability to rank " << rank + 1 << ": " << (stability_ok ? "ok" : "FAIL") << "\n";
        os << "eigenvalue separation: " << (eigenvalues_separate ? "ok" : "FAIL") << "\n";
        os << summary_line() << "\n";
        return os.str();
    }

    Json to_json() const {
        Json j;
        j["weight"] = weight.parts();
        j["rank"] = rank;
        j["patterns"] = pattern_count;
        j["spectral_checks"] = spectral_checks;
        j["spectral_mismatches"] = spectral_mismatches;
        j["dimension_ok"] = dimension_ok;
        j["rank_ok"] = rank_ok;
        j["weights_ok"] = weights_ok;
        j["highest_weight_ok"] = highest_weight_ok;
        j["stability_ok"] = stability_ok;
        j["eigenvalues_separate"] = eigenvalues_separate;
        j["status"] = ok() ? "pass" : "fail";
        j["summary"] = summary_line();
        return j;
    }
};

/// Runs f(i) for i in [0, count) over the requested number of workers;
/// results land in a caller-indexed buffer, so aggregation order is fixed.
inline void parallel_for(long long count, int threads, const std::function<void(long long)>& f) {
    if (threads <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) f(i);
        return;
    }
    const int workers = static_cast<int>(std::min<long long>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (long long i = t; i < count; i += workers) f(i);
        });
    for (auto& th : pool) th.join();
}

/// Reads the GT_THREADS cap; 1 when unset or unparsable.
inline int configured_threads() {
    const char* env = std::getenv("GT_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return v > 0 ? v : 1;
}

/// The full property suite for one weight and rank: dimension agreement,
/// every spectral check, exact basis rank, pattern weights, highest weight
/// properties, colimit stability up to rank+1, and eigenvalue separation.
inline VerifyReport verify_weight(const Partition& lambda, int n, VerifyOptions options = {}) {
    VerifyReport report;
    report.weight = lambda;
    report.rank = n;

    auto basis = gt_basis(lambda, n);
    report.pattern_count = static_cast<long long>(basis.size());

    if (options.perturb && !basis.empty()) {
        // Self-test hook: zero out one coefficient of the first basis vector
        // and let the suite notice. A one-term vector degenerates to zero and
        // trips the weight check; a longer vector leaves the joint eigenspace
        // and trips the spectral sweep.
        auto& [pattern, vector] = basis.front();
        ModuleVector damaged(vector.context());
        bool first = true;
        for (const auto& [m, c] : vector.terms()) {
            if (!first) damaged.add_term(m, c);
            first = false;
        }
        vector = std::move(damaged);
    }

    report.dimension_ok = Integer(report.pattern_count) == weyl_dimension(lambda, n);

    // Exact rank of the family.
    {
        SparseEchelon echelon;
        int rank = 0;
        for (const auto& [p, v] : basis)
            if (!v.is_zero() && echelon.insert(v)) ++rank;
        report.rank_ok = Integer(rank) == weyl_dimension(lambda, n);
    }

    // Weight consistency.
    report.weights_ok = true;
    for (const auto& [p, v] : basis) {
        if (v.is_zero()) {
            report.weights_ok = false;
            break;
        }
        const auto w = weight_of(v);
        if (!w || *w != p.weight()) {
            report.weights_ok = false;
            break;
        }
    }

    // Highest weight vector: killed by every raising generator, Cartan
    // eigenvector with eigenvalue λ_i.
    {
        const ModuleVector hw = highest_weight_vector(lambda, n);
        StraightenCache cache{hw.context()};
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = i + 1; j <= n && ok; ++j)
                ok = act_basis(i, j, hw, &cache).is_zero();
        for (int i = 1; i <= n && ok; ++i) {
            ModuleVector scaled = hw;
            scaled *= Rational(lambda.part(i));
            ok = act_basis(i, i, hw, &cache) == scaled;
        }
        report.highest_weight_ok = ok;
    }

    // Spectral sweep over every (pattern, m), parallelized deterministically.
    {
        const long long checks = report.pattern_count * n;
        std::vector<unsigned char> match(static_cast<std::size_t>(checks), 0);
        parallel_for(checks, options.threads, [&](long long idx) {
            const auto& [pattern, vector] = basis[static_cast<std::size_t>(idx / n)];
            const int m = static_cast<int>(idx % n) + 1;
            StraightenCache cache{vector.context()};
            match[static_cast<std::size_t>(idx)] =
                spectral_check(pattern, m, vector, &cache).match ? 1 : 0;
        });
        report.spectral_checks = checks;
        for (unsigned char b : match)
            if (!b) ++report.spectral_mismatches;
    }

    // Eigenvalue tuples separate patterns.
    {
        std::vector<std::vector<std::vector<Integer>>> tuples;
        tuples.reserve(basis.size());
        for (const auto& [p, v] : basis) {
            std::vector<std::vector<Integer>> tuple;
            for (int m = 1; m <= n; ++m)
                tuple.push_back(EigenvaluePolynomial::from_pattern(p, m).coefficients());
            tuples.push_back(std::move(tuple));
        }
        report.eigenvalues_separate = true;
        for (std::size_t a = 0; a < tuples.size() && report.eigenvalues_separate; ++a)
            for (std::size_t b = a + 1; b < tuples.size(); ++b)
                if (tuples[a] == tuples[b]) {
                    report.eigenvalues_separate = false;
                    break;
                }
    }

    // Colimit stability for every pattern, one rank up.
    {
        report.stability_ok = true;
        for (const auto& inf : enumerate_infinite_patterns(lambda, std::max(n, 1)))
            if (!stability_check(inf, n + 1).stable) {
                report.stability_ok = false;
                break;
            }
    }

    return report;
}

}  // namespace gtb
