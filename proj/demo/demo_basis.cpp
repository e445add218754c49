// Walks the full pipeline for one module: enumerate the patterns of
// V^{(2,1)} at rank 3, build each basis vector with the lowering operators,
// and confirm the quantum minors act diagonally with the predicted spectra.

#include <iostream>

#include "gtbasis/lowering.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/pattern.hpp"
#include "gtbasis/quantum_minor.hpp"
#include "gtbasis/tableau.hpp"

int main() {
    const gtb::Partition lambda({2, 1});
    const int n = 3;

    std::cout << "V^(" << lambda.to_string() << ") at rank " << n
              << ", dimension " << gtb::weyl_dimension(lambda, n).str() << "\n\n";

    gtb::StraightenCache cache{gtb::ModuleContext(lambda, n)};
    for (const auto& [pattern, vector] : gtb::gt_basis(lambda, n)) {
        std::cout << "pattern  " << pattern.to_string() << "\n";
        std::cout << "tableau  " << gtb::pattern_to_tableau(pattern).to_string() << "\n";
        std::cout << "vector   " << vector.to_string() << "\n";
        for (int m = 1; m <= n; ++m) {
            const auto report = gtb::spectral_check(pattern, m, vector, &cache);
            std::cout << "  A_" << m << "(u): ";
            for (std::size_t s = 0; s < report.expected.size(); ++s) {
                if (s) std::cout << " + ";
                std::cout << report.expected[s].str() << "*u^" << s;
            }
            std::cout << (report.match ? "  [diagonal]" : "  [MISMATCH]") << "\n";
        }
        std::cout << "\n";
    }
    return 0;
}
