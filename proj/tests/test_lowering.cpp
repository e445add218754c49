#include <catch2/catch_amalgamated.hpp>

#include "gtbasis/lowering.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/pattern.hpp"
#include "gtbasis/weyl_module.hpp"

using gtb::ColumnMonomial;
using gtb::GTPattern;
using gtb::ModuleContext;
using gtb::ModuleVector;
using gtb::Partition;
using gtb::Rational;

TEST_CASE("lowering operator z_21 on the tautological module") {
    ModuleVector hw = gtb::highest_weight_vector(Partition({1}), 2);
    ModuleVector lowered = gtb::apply_lowering(2, 1, hw);
    CHECK(lowered == ModuleVector::monomial(hw.context(), ColumnMonomial({{2}})));
    CHECK(gtb::apply_lowering(2, 1, ModuleVector::zero(hw.context())).is_zero());
    CHECK_THROWS_AS(gtb::apply_lowering(1, 1, hw), gtb::IndexOutOfRange);
    CHECK_THROWS_AS(gtb::apply_lowering(3, 1, hw), gtb::IndexOutOfRange);
}

TEST_CASE("lowering operator z_31 expands both chains") {
    // p = 0 contributes (E_11 − E_22 + 1) = 2 on the highest weight vector;
    // the p = 1 chain dies on E_32. Frozen from the hand expansion.
    ModuleVector hw = gtb::highest_weight_vector(Partition({1}), 3);
    ModuleVector lowered = gtb::apply_lowering(3, 1, hw);
    CHECK(lowered == ModuleVector::monomial(hw.context(), ColumnMonomial({{3}}), 2));
    CHECK(*gtb::weight_of(lowered) == std::vector<int>({0, 0, 1}));
}

TEST_CASE("lowering is linear") {
    // weight (1,1,1) of V^{(2,1)} at n=3 has multiplicity two
    ModuleContext ctx(Partition({2, 1}), 3);
    ModuleVector a = ModuleVector::monomial(ctx, ColumnMonomial({{1, 2}, {3}}));
    ModuleVector b = ModuleVector::monomial(ctx, ColumnMonomial({{1, 3}, {2}}));
    const Rational s(3, 2);
    ModuleVector combined = a;
    ModuleVector sb = b;
    sb *= s;
    combined += sb;
    for (auto [k, i] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
        ModuleVector lhs = gtb::apply_lowering(k, i, combined);
        ModuleVector rhs = gtb::apply_lowering(k, i, a);
        ModuleVector scaled = gtb::apply_lowering(k, i, b);
        scaled *= s;
        rhs += scaled;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("basis vectors of the tautological module") {
    auto e0 = gtb::basis_vector(GTPattern::validate({{0}, {1, 0}}));
    auto e1 = gtb::basis_vector(GTPattern::validate({{1}, {1, 0}}));
    ModuleContext ctx(Partition({1}), 2);
    CHECK(e0 == ModuleVector::monomial(ctx, ColumnMonomial({{2}})));
    CHECK(e1 == ModuleVector::monomial(ctx, ColumnMonomial({{1}})));
}

TEST_CASE("top pattern reproduces the highest weight vector") {
    for (const Partition& lambda : {Partition({2, 1}), Partition({3, 2, 1}), Partition({2})}) {
        const int n = lambda.length() + 1;
        std::vector<std::vector<int>> rows;
        for (int k = 1; k <= n; ++k) rows.push_back(lambda.cut(k));
        GTPattern top = GTPattern::validate(rows);
        CHECK(gtb::basis_vector(top) == gtb::highest_weight_vector(lambda, n));
    }
}

TEST_CASE("wedge-square basis comes out as pure wedges") {
    auto basis = gtb::gt_basis(Partition({1, 1}), 3);
    REQUIRE(basis.size() == 3);
    ModuleContext ctx(Partition({1, 1}), 3);
    // enumeration order: [[0],[1,0],(1,1,0)], [[1],[1,0],...], [[1],[1,1],...]
    CHECK(basis[0].second == ModuleVector::monomial(ctx, ColumnMonomial({{2, 3}})));
    CHECK(basis[1].second == ModuleVector::monomial(ctx, ColumnMonomial({{1, 3}})));
    CHECK(basis[2].second == ModuleVector::monomial(ctx, ColumnMonomial({{1, 2}})));
}

TEST_CASE("trivial module basis") {
    auto basis = gtb::gt_basis(Partition{}, 3);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].second.term_count() == 1);
    CHECK(basis[0].second.terms().begin()->first.empty());
}

TEST_CASE("basis weights match pattern weights") {
    for (const Partition& lambda : {Partition({2, 1}), Partition({2, 2}), Partition({3})}) {
        for (const auto& [pattern, vector] : gtb::gt_basis(lambda, 3)) {
            CAPTURE(lambda.to_string(), pattern.to_string());
            REQUIRE(!vector.is_zero());
            CHECK(*gtb::weight_of(vector) == pattern.weight());
        }
    }
}

TEST_CASE("basis family has full rank") {
    for (const Partition& lambda : {Partition({2, 1}), Partition({1, 1, 1}), Partition({4})}) {
        auto basis = gtb::gt_basis(lambda, 3);  // throws RankDeficient on failure
        CHECK(gtb::Integer(basis.size()) == gtb::weyl_dimension(lambda, 3));
    }
}
