#pragma once

#include "binform/binary_form.hpp"

#include <string>

namespace binform {

// Galois classification of the splitting field of F(x,1) over Q (projective
// roots; the point at infinity is rational and contributes nothing).
struct GaloisClass {
    enum Tag {
        // cubic
        CubicSplit,    // three rational roots
        CubicC2Red,    // one rational root, irreducible quadratic cofactor
        CubicC3,       // irreducible, square discriminant
        CubicS3,       // irreducible, non-square discriminant
        // irreducible quartic
        QuarticS4,
        QuarticA4,
        QuarticD4,
        QuarticC4,
        QuarticV4,
        // reducible quartic patterns, by factor shape
        QuarticSplit,       // four rational roots
        QuarticQuadTwoLin,  // irreducible quadratic times two linear
        QuarticTwoQuad,     // two irreducible quadratics
        QuarticLinCubic,    // linear times irreducible cubic
    } tag;
    int splitting_degree;  // [splitting field : Q]

    std::string str() const;
};

GaloisClass cubic_galois(const BinaryForm& F);
GaloisClass quartic_galois(const BinaryForm& F);

// [F(mu_3) : Q] for an integer cubic with non-zero discriminant; divides 12.
int cubic_line_field_degree(const BinaryForm& F);

// [F(mu_4) : Q] for an integer quartic with non-zero discriminant; divides
// 48. When I(F) J(F) != 0 this is the field of definition of all lines on
// X_F (lines_bound = true); when I J = 0 the value is still the exact field
// degree but carries no claim about the extra automorphism lines.
struct QuarticFieldDegree {
    int degree;
    bool exact;        // mu_4 membership decided symbolically (always true)
    bool lines_bound;  // I J != 0: the paper identifies this as the lines' field
};
QuarticFieldDegree quartic_line_field_degree(const BinaryForm& F);

}  // namespace binform
