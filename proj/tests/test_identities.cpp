#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "symhodge/identities.hpp"
#include "symhodge/symprod.hpp"

using namespace symhodge;
using test::make_poly;

TEST_SUITE("identities") {

TEST_CASE("p_odd counts distinct odd partitions") {
    for (int m = 1; m <= 4; ++m)
        CHECK(p_odd(m, 0) == 1);
    CHECK(p_odd(2, 4) == 1);  // 4 = 1 + 3 only
    CHECK(p_odd(2, 2) == 0);
    CHECK(p_odd(1, 1) == 1);
    CHECK(p_odd(3, 9) == 1);  // 9 = 1 + 3 + 5
    CHECK_THROWS_AS(p_odd(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(p_odd(1, -1), std::invalid_argument);
}

TEST_CASE("p_odd agrees with subset counting") {
    for (int m = 1; m <= 5; ++m) {
        std::vector<int> degrees;
        for (int i = 1; i <= m; ++i)
            degrees.push_back(2 * i - 1);
        for (int k = 0; k <= 25; ++k)
            CHECK(p_odd(m, k) == subset_count(degrees, k));
        Int total = 0;
        for (int k = 0; k <= m * (2 * m - 1); ++k)
            total += p_odd(m, k);
        CHECK(total == Int(1) << m);
    }
}

TEST_CASE("subset_count") {
    CHECK(subset_count({1, 3}, 4) == 1);
    CHECK(subset_count({1, 3}, 0) == 1);
    CHECK(subset_count({}, 0) == 1);
    CHECK(subset_count({1, 1}, 1) == 2);
    CHECK_THROWS_AS(subset_count({2}, 1), std::invalid_argument);
}

TEST_CASE("Betti identity") {
    const IdentityReport gl2 = check_betti_identity({1, 1}, 2);
    CHECK(gl2.equal);
    CHECK(gl2.lhs.coeff(0) == TriPoly::one());
    CHECK(gl2.rhs.coeff(0) == TriPoly::one());
    CHECK(gl2.lhs.coeff(1) == poincare(lag_preset({1, 1})));
    CHECK(gl2.rhs.coeff(1) == poincare(lag_preset({1, 1})));
    const TriPoly sym2_gl2_poincare = make_poly({{0, 0, 0, 1},
                                                 {1, 0, 0, 1},
                                                 {3, 0, 0, 1},
                                                 {4, 0, 0, 2},
                                                 {5, 0, 0, 1},
                                                 {7, 0, 0, 1},
                                                 {8, 0, 0, 1}});
    CHECK(gl2.lhs.coeff(2) == sym2_gl2_poincare);
    CHECK(gl2.rhs.coeff(2) == sym2_gl2_poincare);

    const std::vector<std::vector<int>> shapes{{1}, {2}, {1, 1}, {1, 1, 1}};
    for (const std::vector<int>& r : shapes) {
        const IdentityReport report = check_betti_identity(r, 4);
        CHECK(report.equal);
        CHECK_FALSE(report.first_discrepancy.has_value());
    }
}

TEST_CASE("combgl identity") {
    const IdentityReport m1 = check_combgl(1, 2);
    REQUIRE(m1.equal);
    const TriPoly one_minus_t = make_poly({{0, 0, 0, 1}, {1, 0, 0, -1}});
    CHECK(m1.lhs.coeff(0) == TriPoly::one());
    CHECK(m1.lhs.coeff(1) == one_minus_t);
    CHECK(m1.lhs.coeff(2) == one_minus_t);
    CHECK(m1.rhs.coeff(2) == one_minus_t);

    for (int m = 1; m <= 3; ++m)
        for (int order = 0; order <= 5; ++order)
            CHECK(check_combgl(m, order).equal);
}

TEST_CASE("cheahfls identity") {
    const IdentityReport r1 = check_cheahfls({1}, 2);
    CHECK(r1.equal);
    CHECK(r1.lhs.coeff(1) == make_poly({{0, 0, 0, 1}, {1, 1, 0, 1}}));  // 1 + t*x

    CHECK(check_cheahfls({1, 1}, 2).equal);
    CHECK(check_cheahfls({2}, 3).equal);

    // specializing x = 1 reduces both sides to the Betti identity
    const IdentityReport two_var = check_cheahfls({1, 1}, 3);
    const IdentityReport betti = check_betti_identity({1, 1}, 3);
    for (int n = 0; n <= 3; ++n) {
        CHECK(two_var.lhs.coeff(n).specialize(std::nullopt, 1, std::nullopt) ==
              betti.lhs.coeff(n));
        CHECK(two_var.rhs.coeff(n).specialize(std::nullopt, 1, std::nullopt) ==
              betti.rhs.coeff(n));
    }
}

TEST_CASE("reporter flags a corrupted side") {
    const std::vector<IdentityReport> reports{check_combgl(2, 3), check_betti_identity({1, 1}, 3),
                                              check_cheahfls({1}, 3)};
    for (const IdentityReport& report : reports) {
        REQUIRE(report.equal);
        // bump one RHS exponent by +1: multiply by an extra factor (1 - t^2 z)
        ZSeries extra = ZSeries::one(report.rhs.order());
        extra.set_coeff(1, make_poly({{2, 0, 0, -1}}));
        const IdentityReport corrupted = compare_series(report.lhs, report.rhs * extra);
        CHECK_FALSE(corrupted.equal);
        REQUIRE(corrupted.first_discrepancy.has_value());
        CHECK(corrupted.first_discrepancy->first >= 1);
        CHECK_FALSE(corrupted.first_discrepancy->second.is_zero());
    }
}

TEST_CASE("series comparison requires equal orders") {
    CHECK_THROWS_AS(compare_series(ZSeries::one(2), ZSeries::one(3)), std::invalid_argument);
}

}  // TEST_SUITE
