#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "gtbasis/json_io.hpp"
#include "gtbasis/lowering.hpp"
#include "gtbasis/quantum_minor.hpp"
#include "gtbasis/tableau.hpp"

#ifndef GTBASIS_GOLDEN_DIR
#define GTBASIS_GOLDEN_DIR "golden"
#endif

using gtb::Partition;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(GTBASIS_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("basis records match the golden file") {
    std::ostringstream os;
    for (const auto& [pattern, vector] : gtb::gt_basis(Partition({1, 1}), 3)) {
        gtb::Json j;
        j["pattern"] = gtb::pattern_to_json(pattern);
        j["vector"] = gtb::vector_to_json(vector);
        os << j.dump() << "\n";
    }
    CHECK(os.str() == slurp("basis_11_3.ndjson"));
}

TEST_CASE("spectrum records match the golden file") {
    std::ostringstream os;
    gtb::StraightenCache cache{gtb::ModuleContext(Partition({2}), 2)};
    for (const auto& [pattern, vector] : gtb::gt_basis(Partition({2}), 2))
        for (int m = 1; m <= 2; ++m) {
            const auto report = gtb::spectral_check(pattern, m, vector, &cache);
            os << gtb::spectral_report_to_json(pattern, report).dump() << "\n";
        }
    CHECK(os.str() == slurp("spectrum_2_2.ndjson"));
}

TEST_CASE("tableau records match the golden file") {
    std::ostringstream os;
    for (const auto& pattern : gtb::enumerate_patterns(Partition({2, 1}), 3))
        os << gtb::tableau_to_json(gtb::pattern_to_tableau(pattern)).dump() << "\n";
    CHECK(os.str() == slurp("tableaux_21_3.ndjson"));
}
