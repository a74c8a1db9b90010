#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symhodge/zseries.hpp"

using namespace symhodge;
using test::make_poly;

namespace {

ZSeries geometric_with(int order, const TriPoly& linear) {
    ZSeries s = ZSeries::one(order);
    if (order >= 1)
        s.set_coeff(1, linear);
    return s;
}

ZSeries random_unit_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> exponent(0, 3);
    std::uniform_int_distribution<int> coefficient(-3, 3);
    ZSeries s = ZSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        TriPoly c;
        for (int i = 0; i < 2; ++i)
            c += TriPoly(Int(coefficient(rng)),
                         Monomial{exponent(rng), exponent(rng), exponent(rng)});
        s.set_coeff(n, c);
    }
    return s;
}

}  // namespace

TEST_SUITE("polyring") {

TEST_CASE("series multiplication truncates") {
    const ZSeries a = geometric_with(2, TriPoly(1));
    const ZSeries b = geometric_with(2, TriPoly(-1));
    ZSeries expected(2, TriPoly::one());
    expected.set_coeff(2, TriPoly(-1));
    CHECK(a * b == expected);

    CHECK(geometric_with(1, make_poly({{1, 0, 0, 1}})) * ZSeries::one(1) ==
          geometric_with(1, make_poly({{1, 0, 0, 1}})));

    ZSeries ones(2, TriPoly::one());
    ones.set_coeff(1, TriPoly(1));
    ones.set_coeff(2, TriPoly(1));
    ZSeries square(2, TriPoly::one());
    square.set_coeff(1, TriPoly(2));
    square.set_coeff(2, TriPoly(3));
    CHECK(ones * ones == square);
}

TEST_CASE("order mismatch is an error") {
    CHECK_THROWS_AS(ZSeries::one(2) * ZSeries::one(3), std::invalid_argument);
}

TEST_CASE("integer powers and inverses") {
    // (1 - z)^(-1) = 1 + z + z^2 + z^3
    const ZSeries inv = geometric_with(3, TriPoly(-1)).int_pow(-1);
    ZSeries expected(3, TriPoly::one());
    for (int n = 1; n <= 3; ++n)
        expected.set_coeff(n, TriPoly(1));
    CHECK(inv == expected);

    const TriPoly t = make_poly({{1, 0, 0, 1}});
    const ZSeries sq = geometric_with(2, t).int_pow(2);
    ZSeries sq_expected(2, TriPoly::one());
    sq_expected.set_coeff(1, t * Int(2));
    sq_expected.set_coeff(2, t * t);
    CHECK(sq == sq_expected);

    // (1 - t^4 z)^(-1): verify by multiplying back
    const ZSeries base = geometric_with(2, make_poly({{4, 0, 0, -1}}));
    const ZSeries reciprocal = base.int_pow(-1);
    CHECK(base * reciprocal == ZSeries::one(2));
    CHECK(reciprocal.coeff(1) == make_poly({{4, 0, 0, 1}}));
    CHECK(reciprocal.coeff(2) == make_poly({{8, 0, 0, 1}}));
}

TEST_CASE("int_pow requires a unit constant term") {
    ZSeries not_unit(2, TriPoly(2));
    CHECK_THROWS_AS(not_unit.int_pow(1), std::invalid_argument);
    CHECK_THROWS_AS(ZSeries(2).int_pow(-1), std::invalid_argument);
}

TEST_CASE("int_pow(a, e) * int_pow(a, -e) is 1") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const ZSeries a = random_unit_series(rng, 4);
        for (long long e = 0; e <= 3; ++e)
            CHECK(a.int_pow(e) * a.int_pow(-e) == ZSeries::one(4));
    }
}

TEST_CASE("coefficient access") {
    const TriPoly t = make_poly({{1, 0, 0, 1}});
    // (1 - tz)/(1 - z) = (1 - tz)(1 + z + z^2)
    const ZSeries s =
        geometric_with(2, -t) * geometric_with(2, TriPoly(-1)).int_pow(-1);
    CHECK(s.coeff(0) == TriPoly::one());
    CHECK(s.coeff(1) == TriPoly::one() - t);
    CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
    CHECK_THROWS_AS(s.coeff(-1), std::out_of_range);

    ZSeries ones(2, TriPoly::one());
    ones.set_coeff(1, TriPoly(1));
    ones.set_coeff(2, TriPoly(1));
    CHECK((ones * ones).coeff(2) == TriPoly(3));
}

}  // TEST_SUITE
