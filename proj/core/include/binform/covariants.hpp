#pragma once

#include "binform/binary_form.hpp"

#include <vector>

namespace binform {

// Hessian covariant q_F of a cubic: A x^2 + B xy + C y^2 with
// A = b2^2 - 3 b3 b1, B = b2 b1 - 9 b3 b0, C = b1^2 - 3 b2 b0.
// Satisfies disc(q_F) = -3 disc(F).
BinaryForm hessian(const BinaryForm& F);

// The two generators of the invariant ring of quartics:
// I = 12 a4 a0 - 3 a3 a1 + a2^2
// J = 72 a4 a2 a0 + 9 a3 a2 a1 - 27 a4 a1^2 - 27 a0 a3^2 - 2 a2^3
Rat invariant_I(const BinaryForm& F);
Rat invariant_J(const BinaryForm& F);

// Quadratic covariant of a cubic attached to a rational root theta of
// F(x,1); integral when F is. Satisfies disc(J_theta) = 12 disc(F).
// Requires a non-zero leading coefficient.
BinaryForm julia_covariant(const BinaryForm& F, const Rat& theta);

// Degree-6 covariant of a quartic; a Klein form whenever disc(F) != 0.
BinaryForm sextic_covariant(const BinaryForm& F);

// True iff the three quadratic relations
//   10 g6 g2 - 5 g5 g3 + 2 g4^2 = 0
//   25 g6 g1 - 5 g5 g2 + g3 g4 = 0
//   50 g6 g0 - 2 g2 g4 + g3^2 = 0
// hold exactly.
bool is_klein_form(const BinaryForm& G);

// Rational quadratic divisor f of the sextic covariant with J(F6/f) = 0.
struct SigFactor {
    BinaryForm form;       // primitive integer quadratic, positive first coefficient
    Rat disc;              // discriminant of `form`
    bool rationally_good;  // |disc| is a perfect square

    friend bool operator<(const SigFactor& a, const SigFactor& b) { return a.form < b.form; }
    friend bool operator==(const SigFactor& a, const SigFactor& b) { return a.form == b.form; }
};

// All significant quadratic factors of the sextic covariant of F (up to
// scalar): irreducible quadratic factors and products of two linear factors
// of F6 whose quartic cofactor has J = 0. At most 3 exist.
std::vector<SigFactor> significant_quadratic_factors(const BinaryForm& F);

}  // namespace binform
