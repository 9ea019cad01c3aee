#pragma once

#include "binform/binary_form.hpp"
#include "binform/covariants.hpp"
#include "binform/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace binform {

enum class GroupTag { Trivial, C2, C3, C4, C2xC2, D3, D4 };

std::string to_string(GroupTag tag);

struct AutGroupResult {
    GroupTag tag = GroupTag::Trivial;
    std::vector<Mat2Q> generators;
    std::vector<Mat2Q> elements;  // sorted canonically; every element verified
    bool verified = false;
    bool height_bound_exceeded = false;  // brute-force search only
};

// M_f = (b, 2c; -2a, -b) for f = a x^2 + b xy + c y^2.
Mat2Q mat_M(const BinaryForm& f);

// N_f = (1/(2 disc(f))) (b s - disc(f), 2 c s; -2 a s, -b s - disc(f)) with
// s = sqrt(-3 disc(f)); rational exactly when -3 disc(f) is a square.
Mat2E mat_N(const BinaryForm& f);

// T_theta = (-1/(6 disc(F))) M_{J_theta} M_{q_F} for a rational root theta
// of the cubic F; an involution with rational entries.
Mat2Q mat_T(const BinaryForm& F, const Rat& theta);

// U_f = M_f / sqrt(|disc(f)|); rational iff |disc(f)| is a perfect square;
// U^2 = sign(disc(f)) * I.
Mat2E mat_U(const BinaryForm& f);

// Rational matrix view of an extension matrix when all entries collapse.
std::optional<Mat2Q> to_rational(const Mat2E& m);

// Exact classification of Aut F for an integer cubic with non-zero
// discriminant: Trivial / C3 / C2 / D3 per the number of rational roots and
// the square class of the discriminant.
AutGroupResult aut_cubic(const BinaryForm& F);

// Exact classification of Aut F for an integer quartic with non-zero
// discriminant via the rationally good significant factors of the sextic
// covariant: {+-I} / C4 / C2xC2 / D4.
AutGroupResult aut_quartic(const BinaryForm& F);

struct PGLClass {
    enum Tag { S3, V4, D4, A4 } tag;
    int upsilon;
};

std::string to_string(PGLClass::Tag tag);

// PGL2(C)-automorphism class: cubics are S3 (upsilon 6); quartics are A4
// (12) when I = 0, D4 (8) when J = 0, V4 (4) otherwise.
PGLClass aut_pgl_class(const BinaryForm& F);

// One element of Aut_R F as certified numerics, with the exact matrix
// attached whenever the underlying covariant is proportional to a rational
// quadratic.
struct RealAutElement {
    BoxMat2 numeric;
    bool mu4 = false;             // listed element is mu4 * U rather than U
    int covariant_index = -1;     // -1 for +-I
    std::optional<Mat2E> exact;
    bool exact_verified = false;
};

// Aut_R F of a real quartic: 8 elements when chi is 0 or 4, 4 when chi = 2.
std::vector<RealAutElement> aut_real_quartic(const BinaryForm& F,
                                             int precision_bits = kDefaultPrecisionBits);

// Structure-based tag for a verified group of matrices (shared with the
// brute-force search).
GroupTag classify_group(const std::vector<Mat2Q>& elements);

// True iff the set is closed under products and inverses.
bool is_group(const std::vector<Mat2Q>& elements);

}  // namespace binform
