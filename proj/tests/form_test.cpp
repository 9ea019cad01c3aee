#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/binary_form.hpp"
#include "test_util.hpp"

#include <random>

using namespace binform;
using testutil::F;

TEST_CASE("substitution action") {
    // identity
    BinaryForm f = F("xy(x+y)");
    CHECK(substitute(f, Mat2Q::identity()) == f);

    // order-3 fixer of x^3 - 3xy^2 + y^3
    BinaryForm g = F("x^3-3xy^2+y^3");
    CHECK(substitute(g, Mat2Q(0, -1, 1, -1)) == g);

    // variable swap on a symmetric quartic
    BinaryForm h = F("x^4+y^4");
    CHECK(substitute(h, Mat2Q(0, 1, 1, 0)) == h);

    // non-automorphism changes the form
    CHECK(substitute(h, Mat2Q(1, 1, 0, 1)) != h);

    CHECK_THROWS_AS(substitute(h, Mat2Q(1, 2, 2, 4)), SingularMatrix);
}

TEST_CASE("substitution is a right action") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        BinaryForm f = testutil::random_form(rng, 2 + static_cast<int>(rng() % 5), -5, 5, false);
        if (f.is_zero()) continue;
        Mat2Q T = testutil::random_small_det(rng);
        Mat2Q S = testutil::random_small_det(rng);
        CHECK(substitute(substitute(f, T), S) == substitute(f, T * S));
    }
}

TEST_CASE("discriminant normalizations") {
    CHECK(discriminant(F("x^3+2y^3")) == -108);
    CHECK(discriminant(F("x^4+x^2y^2+y^4")) == 144);
    CHECK(discriminant(F("x^2+y^2")) == -4);
    CHECK(discriminant(F("2x^3+3x^2y+xy^2")) == 1);
    CHECK(discriminant(F("x^3+xy^2")) == -4);
}

TEST_CASE("degree 5 and 6 discriminant zero-test") {
    CHECK(discriminant(F("xy(x^4-y^4)")) != 0);
    CHECK(discriminant(F("x^2y^4")) == 0);  // repeated affine and infinite roots
    CHECK(discriminant(F("(x+y)^2(x-y)^4")) == 0);
    CHECK(discriminant(F("x^6+y^6")) != 0);
    CHECK(discriminant(F("y(x^5+y^5)")) != 0);
    CHECK(discriminant(F("y^2(x^4+y^4)")) == 0);  // infinity doubled
    CHECK(discriminant(F("x^5+y^5")) != 0);
    CHECK(discriminant(F("y(x^4+x^2y^2+y^4)")) != 0);
    CHECK(discriminant(F("(x^2+y^2)^2(x^2+2y^2)")) == 0);
}

TEST_CASE("discriminant transform under substitution") {
    std::mt19937_64 rng(99);
    for (int deg : {3, 4}) {
        for (int t = 0; t < 40; ++t) {
            BinaryForm f = testutil::random_form(rng, deg, -4, 4, false);
            Mat2Q T = testutil::random_small_det(rng);
            Rat det = T.det();
            Rat scale = 1;
            for (int i = 0; i < deg * (deg - 1); ++i) scale *= det;
            CHECK(discriminant(substitute(f, T)) == scale * discriminant(f));
        }
    }
}

TEST_CASE("rational projective roots") {
    auto roots = rational_proj_roots(F("2x^3+3x^2y+xy^2"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == ProjRootQ::affine(-1));
    CHECK(roots[1] == ProjRootQ::affine(Rat(-1, 2)));
    CHECK(roots[2] == ProjRootQ::affine(0));

    CHECK(rational_proj_roots(F("x^3+2y^3")).empty());

    auto xy = rational_proj_roots(F("xy(x+y)"));
    REQUIRE(xy.size() == 3);
    CHECK(xy[0] == ProjRootQ::affine(-1));
    CHECK(xy[1] == ProjRootQ::affine(0));
    CHECK(xy[2] == ProjRootQ::at_infinity());

    // scaling does not change the root set
    auto scaled = rational_proj_roots(Rat(3, 7) * F("2x^3+3x^2y+xy^2"));
    CHECK(scaled == roots);
}

TEST_CASE("leading shift policy") {
    CHECK(leading_shift(F("x^3+2y^3")) == Mat2Q::identity());
    BinaryForm f = F("xy(x+y)");  // leading and trailing both vanish
    Mat2Q s = leading_shift(f);
    CHECK(substitute(f, s).lead() != 0);
    BinaryForm g = F("y(x^2+y^2)");  // lead 0, trail != 0: swap suffices
    Mat2Q sw = leading_shift(g);
    CHECK(sw == Mat2Q(0, 1, 1, 0));
    CHECK(substitute(g, sw).lead() != 0);
}

TEST_CASE("quadext substitution verification") {
    BinaryForm f = F("x^3+xy^2");
    QuadExt i = QuadExt::sqrt_of(Rat(-1));
    Mat2E m(QuadExt(Rat(0)), i, i, QuadExt(Rat(0)));  // (0 i; i 0)
    CHECK_FALSE(verify_automorphism(f, m));
    CHECK(verify_automorphism(f, to_quadext(Mat2Q(1, 0, 0, -1))));
}
