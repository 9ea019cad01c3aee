#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/covariants.hpp"
#include "binform/fields.hpp"
#include "test_util.hpp"

#include <random>

using namespace binform;
using testutil::F;

TEST_CASE("cubic galois classes") {
    CHECK(cubic_galois(F("x^3-3xy^2+y^3")).tag == GaloisClass::CubicC3);
    CHECK(cubic_galois(F("x^3-3xy^2+y^3")).splitting_degree == 3);
    CHECK(cubic_galois(F("x^3+2y^3")).tag == GaloisClass::CubicS3);
    CHECK(cubic_galois(F("x^3+2y^3")).splitting_degree == 6);
    CHECK(cubic_galois(F("xy(x+y)")).tag == GaloisClass::CubicSplit);
    CHECK(cubic_galois(F("xy(x+y)")).splitting_degree == 1);
    CHECK(cubic_galois(F("x^3+xy^2")).tag == GaloisClass::CubicC2Red);
    CHECK(cubic_galois(F("x^3+xy^2")).splitting_degree == 2);
    // infinity as the rational root
    CHECK(cubic_galois(F("y(x^2-2y^2)")).tag == GaloisClass::CubicC2Red);
}

TEST_CASE("quartic galois classes") {
    CHECK(quartic_galois(F("x^4+xy^3+y^4")).tag == GaloisClass::QuarticS4);
    CHECK(quartic_galois(F("x^4+xy^3+y^4")).splitting_degree == 24);

    CHECK(quartic_galois(F("x^4+8xy^3+12y^4")).tag == GaloisClass::QuarticA4);
    CHECK(quartic_galois(F("x^4+8xy^3+12y^4")).splitting_degree == 12);

    CHECK(quartic_galois(F("x^4+y^4")).tag == GaloisClass::QuarticV4);
    CHECK(quartic_galois(F("x^4+y^4")).splitting_degree == 4);

    CHECK(quartic_galois(F("x^4-2y^4")).tag == GaloisClass::QuarticD4);
    CHECK(quartic_galois(F("x^4-2y^4")).splitting_degree == 8);

    CHECK(quartic_galois(F("x^4+x^3y+x^2y^2+xy^3+y^4")).tag == GaloisClass::QuarticC4);
    CHECK(quartic_galois(F("x^4+x^3y+x^2y^2+xy^3+y^4")).splitting_degree == 4);

    CHECK(quartic_galois(F("x^4+x^2y^2+y^4")).tag == GaloisClass::QuarticTwoQuad);
    CHECK(quartic_galois(F("x^4+x^2y^2+y^4")).splitting_degree == 2);

    CHECK(quartic_galois(F("(x^2-2y^2)(x^2-3y^2)")).tag == GaloisClass::QuarticTwoQuad);
    CHECK(quartic_galois(F("(x^2-2y^2)(x^2-3y^2)")).splitting_degree == 4);

    CHECK(quartic_galois(F("xy(x^2+xy+y^2)")).tag == GaloisClass::QuarticQuadTwoLin);
    CHECK(quartic_galois(F("xy(x^2+xy+y^2)")).splitting_degree == 2);

    CHECK(quartic_galois(F("xy(x-y)(x+y)")).tag == GaloisClass::QuarticSplit);
    CHECK(quartic_galois(F("x(x^3-2y^3)")).tag == GaloisClass::QuarticLinCubic);
    CHECK(quartic_galois(F("x(x^3-2y^3)")).splitting_degree == 6);
    CHECK(quartic_galois(F("x(x^3-3xy^2+y^3)")).splitting_degree == 3);
}

TEST_CASE("cubic line field degrees") {
    CHECK(cubic_line_field_degree(F("2x^3+3x^2y+xy^2")) == 2);
    CHECK(cubic_line_field_degree(F("x^3-3xy^2+y^3")) == 6);
    CHECK(cubic_line_field_degree(F("x^3+2y^3")) == 6);       // -3*disc = 324 = 18^2
    CHECK(cubic_line_field_degree(F("x^3+xy^2")) == 4);       // cofactor disc -4: -3*(-4) non-square
    CHECK(cubic_line_field_degree(F("x(x^2+xy+y^2)")) == 2);  // cofactor disc -3: -3*(-3) = 9
    CHECK(cubic_line_field_degree(F("x^3-7xy^2+7y^3")) == 6); // C3 (disc 49*7^2? irreducible square disc)
}

TEST_CASE("quartic line field degrees") {
    CHECK(quartic_line_field_degree(F("x^4+xy^3+y^4")).degree == 48);
    CHECK(quartic_line_field_degree(F("x^4+y^4")).degree == 4);
    CHECK(quartic_line_field_degree(F("x^4+x^2y^2+y^4")).degree == 4);
    CHECK(quartic_line_field_degree(F("x^4+xy^3+y^4")).exact);
    CHECK(quartic_line_field_degree(F("x^4+xy^3+y^4")).lines_bound);
    // J = 0 or I = 0: the field degree is still exact, but makes no claim
    // about the extra automorphism lines
    CHECK_FALSE(quartic_line_field_degree(F("x^4+y^4")).lines_bound);
    CHECK_FALSE(quartic_line_field_degree(F("x(x^3+y^3)")).lines_bound);
    CHECK(quartic_line_field_degree(F("x^4-2y^4")).degree == 8);  // Q(2^{1/4}, i) = F already has i? no: degree 8, i in F
}

TEST_CASE("degree divisibility and unimodular invariance") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 60; ++t) {
        BinaryForm c = testutil::random_form(rng, 3, -4, 4);
        int d = cubic_line_field_degree(c);
        CHECK(12 % d == 0);
        Mat2Q T = testutil::random_unimodular(rng);
        CHECK(cubic_galois(substitute(c, T)).splitting_degree == cubic_galois(c).splitting_degree);
        CHECK(cubic_line_field_degree(substitute(c, T)) == d);
    }
    for (int t = 0; t < 60; ++t) {
        BinaryForm q = testutil::random_form(rng, 4, -3, 3);
        Mat2Q T = testutil::random_unimodular(rng);
        CHECK(quartic_galois(substitute(q, T)).splitting_degree ==
              quartic_galois(q).splitting_degree);
        if (invariant_I(q) != 0 && invariant_J(q) != 0) {
            int d = quartic_line_field_degree(q).degree;
            CHECK(48 % d == 0);
            CHECK(quartic_line_field_degree(substitute(q, T)).degree == d);
        }
    }
}
