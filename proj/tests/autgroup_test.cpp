#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/autgroup.hpp"
#include "test_util.hpp"

#include <random>
#include <set>

using namespace binform;
using testutil::F;

namespace {

std::set<Mat2Q> as_set(const std::vector<Mat2Q>& v) { return {v.begin(), v.end()}; }

bool is_scalar(const Mat2E& m) {
    return m.t2 == QuadExt(Rat(0)) && m.t3 == QuadExt(Rat(0)) && m.t1 == m.t4;
}

}  // namespace

TEST_CASE("mat_M") {
    CHECK(mat_M(F("3x^2+3xy+y^2")) == Mat2Q(3, 2, -6, -3));
    CHECK(mat_M(F("xy")) == Mat2Q(1, 0, 0, -1));
    CHECK(mat_M(F("x^2+y^2")) == Mat2Q(0, 2, -2, 0));
}

TEST_CASE("mat_N") {
    // worked hessian: rational entries
    auto n1 = to_rational(mat_N(F("3x^2+3xy+y^2")));
    REQUIRE(n1.has_value());
    CHECK(*n1 == Mat2Q(-2, -1, 3, 1));

    // disc(-3): s = 3, N = (-1,-1;1,0)
    auto n2 = to_rational(mat_N(F("x^2+xy+y^2")));
    REQUIRE(n2.has_value());
    CHECK(*n2 == Mat2Q(-1, -1, 1, 0));

    // N^3 is the identity in PGL (a scalar matrix, here exactly I)
    CHECK(pow(*n1, 3) == Mat2Q::identity());
    CHECK(pow(*n2, 3) == Mat2Q::identity());

    // irrational case: entries in a quadratic extension, N^3 still scalar
    Mat2E n3 = mat_N(hessian(F("x^3+xy^2")));
    CHECK(is_scalar(n3 * n3 * n3));

    CHECK_THROWS_AS(mat_N(F("x^2+2xy+y^2")), DegenerateForm);
}

TEST_CASE("mat_T") {
    BinaryForm f = F("2x^3+3x^2y+xy^2");
    CHECK(mat_T(f, 0) == Mat2Q(1, 0, -3, -1));
    CHECK(mat_T(f, -1) == Mat2Q(-2, -1, 3, 2));
    CHECK(mat_T(f, Rat(-1, 2)) == Mat2Q(1, 1, 0, -1));
    CHECK(mat_T(F("x^3+xy^2"), 0) == Mat2Q(1, 0, 0, -1));
    CHECK_THROWS_AS(mat_T(f, 7), NotARoot);

    // involutions
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 100; ++t) {
        Rat th(d(rng), 1 + static_cast<int>(rng() % 3));
        BinaryForm lin({Rat(den(th)), -num(th)});
        BinaryForm g = lin * testutil::random_form(rng, 2, -5, 5, false);
        if (discriminant(g) == 0 || g.lead() == 0) continue;
        Mat2Q T = mat_T(g, th);
        CHECK(T * T == Mat2Q::identity());
        CHECK(verify_automorphism(g, T));
    }
}

TEST_CASE("mat_U") {
    auto u1 = to_rational(mat_U(F("x^2+y^2")));
    REQUIRE(u1.has_value());
    CHECK(*u1 == Mat2Q(0, 1, -1, 0));
    CHECK(pow(*u1, 2) == -Mat2Q::identity());  // order 4

    auto u2 = to_rational(mat_U(F("xy")));
    REQUIRE(u2.has_value());
    CHECK(*u2 == Mat2Q(1, 0, 0, -1));
    CHECK(pow(*u2, 2) == Mat2Q::identity());

    auto u3 = to_rational(mat_U(F("x^2-y^2")));
    REQUIRE(u3.has_value());
    CHECK(*u3 == Mat2Q(0, -1, -1, 0));
    CHECK(pow(*u3, 2) == Mat2Q::identity());

    // irrational |disc|: entries stay in one quadratic extension
    Mat2E u4 = mat_U(F("x^2-2y^2"));
    CHECK_FALSE(to_rational(u4).has_value());
    Mat2E sq = u4 * u4;
    CHECK(sq == to_quadext(Mat2Q::identity()));
}

TEST_CASE("aut_cubic classification") {
    AutGroupResult t = aut_cubic(F("x^3+2y^3"));
    CHECK(t.tag == GroupTag::Trivial);
    CHECK(t.elements == std::vector<Mat2Q>{Mat2Q::identity()});

    AutGroupResult c3 = aut_cubic(F("x^3-3xy^2+y^3"));
    CHECK(c3.tag == GroupTag::C3);
    CHECK(c3.elements.size() == 3);
    CHECK(as_set(c3.elements).count(Mat2Q(0, -1, 1, -1)) == 1);

    AutGroupResult d3 = aut_cubic(F("2x^3+3x^2y+xy^2"));
    CHECK(d3.tag == GroupTag::D3);
    std::set<Mat2Q> expect{Mat2Q::identity(),    Mat2Q(1, 0, -3, -1), Mat2Q(-2, -1, 3, 2),
                           Mat2Q(1, 1, 0, -1),   Mat2Q(-2, -1, 3, 1), Mat2Q(1, 1, -3, -2)};
    CHECK(as_set(d3.elements) == expect);
    CHECK(d3.verified);

    AutGroupResult c2 = aut_cubic(F("x^3+xy^2"));
    CHECK(c2.tag == GroupTag::C2);
    CHECK(as_set(c2.elements).count(Mat2Q(1, 0, 0, -1)) == 1);

    CHECK_THROWS_AS(aut_cubic(F("x^2y+x^3")), DegenerateForm);
}

TEST_CASE("aut_cubic with vanishing leading coefficient") {
    // y(x^2 + xy + y^2)-style forms still classify, via the shift policy
    AutGroupResult g = aut_cubic(F("xy(x+y)"));
    CHECK(g.tag == GroupTag::D3);
    for (const auto& e : g.elements) CHECK(verify_automorphism(F("xy(x+y)"), e));

    AutGroupResult c2 = aut_cubic(F("y(x^2-2y^2)"));
    CHECK(c2.tag == GroupTag::C2);
}

TEST_CASE("aut_quartic classification") {
    AutGroupResult d4 = aut_quartic(F("x^4+x^2y^2+y^4"));
    CHECK(d4.tag == GroupTag::D4);
    Mat2Q I = Mat2Q::identity();
    std::set<Mat2Q> expect{I,
                           -I,
                           Mat2Q(1, 0, 0, -1),
                           Mat2Q(-1, 0, 0, 1),
                           Mat2Q(0, -1, -1, 0),
                           Mat2Q(0, 1, 1, 0),
                           Mat2Q(0, 1, -1, 0),
                           Mat2Q(0, -1, 1, 0)};
    CHECK(as_set(d4.elements) == expect);

    AutGroupResult c4 = aut_quartic(F("x^4+x^3y+2x^2y^2-xy^3+y^4"));
    CHECK(c4.tag == GroupTag::C4);
    CHECK(c4.elements.size() == 4);
    CHECK(as_set(c4.elements).count(Mat2Q(0, 1, -1, 0)) == 1);

    AutGroupResult pm = aut_quartic(F("x^4+xy^3+y^4"));
    CHECK(pm.tag == GroupTag::C2);
    CHECK(as_set(pm.elements) == std::set<Mat2Q>{I, -I});

    AutGroupResult d4b = aut_quartic(F("x^4+y^4"));
    CHECK(d4b.tag == GroupTag::D4);  // all three significant factors good

    // unique rationally good factor (xy) with positive discriminant
    AutGroupResult v = aut_quartic(F("x^4-4y^4"));
    CHECK(v.tag == GroupTag::C2xC2);
    CHECK(as_set(v.elements) ==
          std::set<Mat2Q>{I, -I, Mat2Q(1, 0, 0, -1), Mat2Q(-1, 0, 0, 1)});
}

TEST_CASE("aut_pgl_class") {
    CHECK(aut_pgl_class(F("x^3+2y^3")).tag == PGLClass::S3);
    CHECK(aut_pgl_class(F("x^3+2y^3")).upsilon == 6);
    CHECK(aut_pgl_class(F("x(x^3+y^3)")).tag == PGLClass::A4);
    CHECK(aut_pgl_class(F("x(x^3+y^3)")).upsilon == 12);
    CHECK(aut_pgl_class(F("x^4+y^4")).tag == PGLClass::D4);
    CHECK(aut_pgl_class(F("x^4+y^4")).upsilon == 8);
    CHECK(aut_pgl_class(F("x^4+xy^3+y^4")).tag == PGLClass::V4);
    CHECK(aut_pgl_class(F("x^4+xy^3+y^4")).upsilon == 4);
}

TEST_CASE("verify_automorphism") {
    CHECK(verify_automorphism(F("x^4+y^4"), Mat2Q(0, 1, -1, 0)));
    CHECK(verify_automorphism(F("x^3-3xy^2+y^3"), Mat2Q::identity()));
    CHECK_FALSE(verify_automorphism(F("x^4+y^4"), Mat2Q(1, 1, 0, 1)));
}

TEST_CASE("aut_real_quartic chi cases") {
    // chi = 0 with everything rational: coincides with the D4 result
    auto r0 = aut_real_quartic(F("x^4+x^2y^2+y^4"));
    CHECK(r0.size() == 8);
    int exact = 0;
    for (const auto& e : r0) exact += e.exact ? 1 : 0;
    CHECK(exact == 8);

    // chi = 2: four elements
    auto r2 = aut_real_quartic(F("(x^2-2y^2)(x^2+y^2)"));
    CHECK(r2.size() == 4);

    // chi = 4: eight elements, some irrational
    auto r4 = aut_real_quartic(F("(x^2-2y^2)(x^2-3y^2)"));
    CHECK(r4.size() == 8);
    int inexact = 0;
    for (const auto& e : r4) inexact += e.exact ? 0 : 1;
    CHECK(inexact > 0);
}

TEST_CASE("group invariants on random forms") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 60; ++t) {
        BinaryForm c = testutil::random_form(rng, 3, -3, 3);
        AutGroupResult g = aut_cubic(c);
        CHECK((g.elements.size() == 1 || g.elements.size() == 2 || g.elements.size() == 3 ||
               g.elements.size() == 6));
        CHECK(g.verified);
        bool splits = rational_proj_roots(c).size() == 3;
        CHECK((g.elements.size() == 6) == splits);

        BinaryForm q = testutil::random_form(rng, 4, -3, 3);
        AutGroupResult h = aut_quartic(q);
        CHECK((h.elements.size() == 2 || h.elements.size() == 4 || h.elements.size() == 8));
        CHECK(as_set(h.elements).count(-Mat2Q::identity()) == 1);
    }
}

TEST_CASE("conjugation transports the group") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 25; ++t) {
        BinaryForm f = testutil::random_form(rng, 3 + static_cast<int>(rng() % 2), -3, 3);
        Mat2Q T = testutil::random_unimodular(rng);
        AutGroupResult base = f.degree() == 3 ? aut_cubic(f) : aut_quartic(f);
        AutGroupResult moved =
            f.degree() == 3 ? aut_cubic(substitute(f, T)) : aut_quartic(substitute(f, T));
        std::set<Mat2Q> expect;
        Mat2Q Ti = T.inverse();
        for (const auto& g : base.elements) expect.insert(Ti * g * T);
        CHECK(expect == as_set(moved.elements));
    }
}
