#include <algorithm>
#include <functional>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "gtbasis/partition.hpp"
#include "gtbasis/pattern.hpp"
#include "oracles.hpp"

using gtb::GTPattern;
using gtb::InfiniteGTPattern;
using gtb::Partition;

TEST_CASE("pattern validation") {
    CHECK_NOTHROW(GTPattern::validate({{0}, {0, 0}}));
    CHECK_NOTHROW(GTPattern::validate({{1}, {1, 0}}));
    try {
        GTPattern::validate({{2}, {1, 0}});
        FAIL("expected InterlacingViolation");
    } catch (const gtb::InterlacingViolation& e) {
        CHECK(e.row() == 2);
        CHECK(e.col() == 1);
    }
    CHECK_THROWS_AS(GTPattern::validate({{1, 2}}), gtb::ShapeError);
    CHECK_THROWS_AS(GTPattern::validate({{-1}}), gtb::NegativeEntry);
    CHECK_THROWS_AS(GTPattern::validate({}), gtb::ShapeError);
}

TEST_CASE("pattern enumeration matches dimension and brute force") {
    SECTION("rank 2 tautological") {
        auto ps = gtb::enumerate_patterns(Partition({1}), 2);
        REQUIRE(ps.size() == 2);
        CHECK(ps[0].rows() == std::vector<std::vector<int>>({{0}, {1, 0}}));
        CHECK(ps[1].rows() == std::vector<std::vector<int>>({{1}, {1, 0}}));
    }
    SECTION("empty weight") {
        auto ps = gtb::enumerate_patterns(Partition{}, 3);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].rows() == std::vector<std::vector<int>>({{0}, {0, 0}, {0, 0, 0}}));
    }
    SECTION("adjoint-sized module") {
        auto ps = gtb::enumerate_patterns(Partition({2, 1}), 3);
        CHECK(ps.size() == 8);
        CHECK(oracle::count_patterns_bruteforce(Partition({2, 1}), 3) == 8);
    }
    SECTION("three independent counts in a sweep") {
        for (const Partition& p :
             {Partition{}, Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1}),
              Partition({3}), Partition({2, 2})}) {
            for (int n = std::max(p.length(), 1); n <= 3; ++n) {
                CAPTURE(p.to_string(), n);
                const auto count = static_cast<long long>(gtb::enumerate_patterns(p, n).size());
                CHECK(count == oracle::count_patterns_bruteforce(p, n));
                CHECK(count == oracle::count_ssyt_bruteforce(p, n));
                CHECK(gtb::Integer(count) == gtb::weyl_dimension(p, n));
            }
        }
    }
    SECTION("weight too long") {
        CHECK_THROWS_AS(gtb::enumerate_patterns(Partition({1, 1, 1}), 2), gtb::WeightTooLong);
    }
    SECTION("counts agree for every weight of at most six cells up to rank five") {
        std::vector<Partition> all{Partition{}};
        std::vector<int> current;
        std::function<void(int, int)> gen = [&](int remaining, int max_part) {
            if (!current.empty()) all.emplace_back(current);
            for (int p = std::min(remaining, max_part); p >= 1; --p) {
                current.push_back(p);
                gen(remaining - p, p);
                current.pop_back();
            }
        };
        gen(6, 6);
        long long pairs = 0;
        for (const Partition& p : all) {
            for (int n = std::max(p.length(), 1); n <= 5; ++n) {
                const auto count = static_cast<long long>(gtb::enumerate_patterns(p, n).size());
                if (count != oracle::count_ssyt_bruteforce(p, n) ||
                    gtb::Integer(count) != gtb::weyl_dimension(p, n)) {
                    CAPTURE(p.to_string(), n);
                    FAIL("independent counts disagree");
                }
                ++pairs;
            }
        }
        CHECK(pairs >= 100);
    }
    SECTION("enumeration order is lexicographic on bottom-up keys") {
        auto ps = gtb::enumerate_patterns(Partition({2, 1}), 3);
        for (std::size_t i = 0; i + 1 < ps.size(); ++i)
            CHECK(ps[i].flat_key() < ps[i + 1].flat_key());
    }
}

TEST_CASE("pattern weight") {
    CHECK(GTPattern::validate({{1}, {1, 0}}).weight() == std::vector<int>({1, 0}));
    CHECK(GTPattern::validate({{0}, {1, 0}}).weight() == std::vector<int>({0, 1}));
    CHECK(GTPattern::validate({{0}, {0, 0}}).weight() == std::vector<int>({0, 0}));
    // total weight is conserved across the module
    for (const auto& p : gtb::enumerate_patterns(Partition({2, 1}), 3)) {
        int sum = 0;
        for (int w : p.weight()) sum += w;
        CHECK(sum == 3);
    }
}

TEST_CASE("validator fuzz against the direct re-check") {
    for (const Partition& lambda : {Partition({2, 1}), Partition({3}), Partition({1, 1})}) {
        for (const auto& p : gtb::enumerate_patterns(lambda, 3)) {
            const int bump = lambda.part(1) + 1;
            for (int k = 1; k <= p.rank(); ++k)
                for (int i = 1; i <= k; ++i) {
                    auto rows = p.rows();
                    rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] += bump;
                    bool lib_ok = true;
                    try {
                        GTPattern::validate(rows);
                    } catch (const gtb::Error&) {
                        lib_ok = false;
                    }
                    CAPTURE(lambda.to_string(), k, i);
                    CHECK(lib_ok == oracle::is_valid_pattern(rows));
                }
        }
    }
}

TEST_CASE("pattern degree") {
    CHECK(GTPattern::validate({{1}}).degree() == 1);
    CHECK(GTPattern::validate({{0}, {1, 0}}).degree() == 2);
    CHECK(GTPattern::validate({{1}, {1, 0}}).degree() == 1);
    // the highest-weight pattern of any λ has degree 1
    CHECK(GTPattern::validate({{2}, {2, 1}, {2, 1, 0}}).degree() == 1);
}

TEST_CASE("infinite patterns") {
    SECTION("tautological weight, two strata") {
        auto inf = gtb::enumerate_infinite_patterns(Partition({1}), 2);
        REQUIRE(inf.size() == 2);
        CHECK(inf[0].degree() == 1);
        CHECK(inf[0].triangle().rows() == std::vector<std::vector<int>>({{1}}));
        CHECK(inf[1].degree() == 2);
        CHECK(inf[1].triangle().rows() == std::vector<std::vector<int>>({{0}, {1, 0}}));
        CHECK(gtb::pattern_degree(inf[1]) == 2);
    }
    SECTION("empty weight has the single degree-1 pattern") {
        auto inf = gtb::enumerate_infinite_patterns(Partition{}, 3);
        REQUIRE(inf.size() == 1);
        CHECK(inf[0].degree() == 1);
    }
    SECTION("wedge-square weight") {
        auto inf = gtb::enumerate_infinite_patterns(Partition({1, 1}), 3);
        CHECK(inf.size() == 3);  // dim of the rank-3 wedge square
    }
    SECTION("stratification bijects with finite patterns") {
        for (const Partition& lambda : {Partition({2, 1}), Partition({1, 1}), Partition({2})}) {
            const int bound = 4;
            auto inf = gtb::enumerate_infinite_patterns(lambda, bound);
            auto finite = gtb::enumerate_patterns(lambda, bound);
            CHECK(inf.size() == finite.size());
            // strata are disjoint: (degree, triangle) keys are unique
            std::set<std::pair<int, std::vector<int>>> keys;
            for (const auto& p : inf) keys.insert({p.degree(), p.triangle().flat_key()});
            CHECK(keys.size() == inf.size());
            // truncation reproduces each finite pattern
            std::set<std::vector<int>> truncated;
            for (const auto& p : inf) truncated.insert(p.truncate(bound).flat_key());
            std::set<std::vector<int>> expected;
            for (const auto& p : finite) expected.insert(p.flat_key());
            CHECK(truncated == expected);
        }
    }
    SECTION("forced rows reconstruct below the weight length") {
        // degree-1 pattern of λ=(2,1): rows are λ cut to each length
        auto inf = gtb::enumerate_infinite_patterns(Partition({2, 1}), 2);
        REQUIRE(!inf.empty());
        const auto& hw = inf.front();
        CHECK(hw.degree() == 1);
        CHECK(hw.row(1) == std::vector<int>{2});
        CHECK(hw.row(2) == std::vector<int>({2, 1}));
        CHECK(hw.row(4) == std::vector<int>({2, 1, 0, 0}));
    }
    SECTION("minimality is enforced") {
        auto tri = GTPattern::validate({{2}, {2, 1}});
        auto inf = InfiniteGTPattern::from_triangle(Partition({2, 1}), tri);
        CHECK(inf.degree() == 1);  // non-minimal storage collapses
        CHECK(inf.triangle().rank() == 1);
    }
    SECTION("triangle top must match the cut weight") {
        auto tri = GTPattern::validate({{1}, {1, 1}});
        CHECK_THROWS_AS(gtb::InfiniteGTPattern::from_triangle(Partition({2, 1}), tri),
                        gtb::ShapeError);
    }
}
