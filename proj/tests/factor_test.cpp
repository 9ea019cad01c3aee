#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/factor.hpp"
#include "test_util.hpp"

#include <random>

using namespace binform;
using testutil::F;

namespace {

bool contains_factor(const FormFactorization& fac, const BinaryForm& f, int mult = 1) {
    for (const auto& [g, m] : fac.factors)
        if (g == f) return m == mult;
    return false;
}

}  // namespace

TEST_CASE("factorization of a split sextic") {
    FormFactorization fac = factor_over_Z(F("32xy(x^4-y^4)"));
    CHECK(fac.content == 32);
    CHECK(fac.flatten().size() == 5);
    CHECK(contains_factor(fac, BinaryForm({1, 0})));   // x
    CHECK(contains_factor(fac, BinaryForm({0, 1})));   // y
    CHECK(contains_factor(fac, BinaryForm({1, -1})));  // x - y
    CHECK(contains_factor(fac, BinaryForm({1, 1})));   // x + y
    CHECK(contains_factor(fac, F("x^2+y^2")));
    CHECK(fac.reassemble() == F("32xy(x^4-y^4)"));
}

TEST_CASE("factorization into two quadratics") {
    FormFactorization fac = factor_over_Z(F("x^4+x^2y^2+y^4"));
    CHECK(fac.content == 1);
    REQUIRE(fac.factors.size() == 2);
    CHECK(contains_factor(fac, F("x^2+xy+y^2")));
    CHECK(contains_factor(fac, F("x^2-xy+y^2")));
}

TEST_CASE("irreducible cubic stays whole") {
    FormFactorization fac = factor_over_Z(F("x^3+2y^3"));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == F("x^3+2y^3"));
    CHECK(fac.factors[0].second == 1);
}

TEST_CASE("content sign and rational coefficients") {
    FormFactorization fac = factor_over_Z(Rat(-3, 4) * F("x^2-y^2"));
    CHECK(fac.content == Rat(-3, 4));
    CHECK(contains_factor(fac, BinaryForm({1, -1})));
    CHECK(contains_factor(fac, BinaryForm({1, 1})));
}

TEST_CASE("multiplicities") {
    FormFactorization fac = factor_over_Z(F("(x+y)^2(x^2+y^2)"));
    CHECK(contains_factor(fac, BinaryForm({1, 1}), 2));
    CHECK(contains_factor(fac, F("x^2+y^2"), 1));
    CHECK(fac.reassemble() == F("(x+y)^2(x^2+y^2)"));
}

TEST_CASE("three-plus-three split of a sextic") {
    BinaryForm f = F("(x^3-2y^3)(x^3-3y^3)");
    FormFactorization fac = factor_over_Z(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(contains_factor(fac, F("x^3-2y^3")));
    CHECK(contains_factor(fac, F("x^3-3y^3")));

    BinaryForm g = F("(x^3+xy^2+y^3)(x^3-x^2y+y^3)");
    FormFactorization gf = factor_over_Z(g);
    REQUIRE(gf.factors.size() == 2);
    CHECK(gf.reassemble() == g);
}

TEST_CASE("irreducible sextics and quartics") {
    CHECK(factor_over_Z(F("x^6+x^5y+x^3y^3+2y^6")).factors.size() >= 1);
    FormFactorization fac = factor_over_Z(F("x^4+xy^3+y^4"));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first.degree() == 4);
    FormFactorization six = factor_over_Z(F("x^6+x^5y+y^6"));
    CHECK(six.reassemble() == F("x^6+x^5y+y^6"));
}

TEST_CASE("random products reassemble and refactor") {
    std::mt19937_64 rng(1234);
    for (int t = 0; t < 60; ++t) {
        // product of random small linear/quadratic/cubic pieces, degree <= 6
        BinaryForm acc({Rat(1)});
        int degree_left = 6;
        while (degree_left > 0) {
            int d = 1 + static_cast<int>(rng() % 3);
            if (d > degree_left) d = degree_left;
            acc = acc * testutil::random_form(rng, d, -3, 3, false);
            degree_left -= d;
            if (rng() % 3 == 0) break;
        }
        if (acc.is_zero() || acc.degree() < 1) continue;
        FormFactorization fac = factor_over_Z(acc);
        CHECK(fac.reassemble() == acc);
        // every reported factor is irreducible: refactoring returns itself
        for (const auto& [g, m] : fac.factors) {
            FormFactorization again = factor_over_Z(g);
            REQUIRE(again.factors.size() == 1);
            CHECK(again.factors[0].first == g);
            CHECK(again.content == 1);
        }
    }
}
