#pragma once

#include "binform/autgroup.hpp"
#include "binform/binary_form.hpp"
#include "binform/roots.hpp"

#include <vector>

namespace binform {

// A PGL2(C) element permuting the projective root set, as a normalized
// numeric representative plus the induced permutation of the labeled roots.
struct MobiusElement {
    BoxMat2 matrix;                 // largest entry normalized to 1
    std::vector<int> permutation;   // image index of each source root
};

// All Mobius transformations fixing the projective root set of F, found by
// solving the unique map through each ordered triple of roots (PGL2 is
// 3-transitive) and keeping those that permute the full set. The count is
// upsilon_F. Degree 3 or 4.
std::vector<MobiusElement> pgl_automorphisms_numeric(const BinaryForm& F,
                                                     int precision_bits = kDefaultPrecisionBits);

// Independent brute-force computation of Aut F: lift every numeric PGL
// element by the d-th roots of unity, reconstruct rational entries, and keep
// exactly verified matrices. height_bound_exceeded is set when a candidate
// entry looked real but exceeded the reconstruction height, i.e. a false
// negative is possible.
AutGroupResult rational_automorphisms_bruteforce(const BinaryForm& F,
                                                 int precision_bits = kDefaultPrecisionBits,
                                                 const Int& height_bound = Int(1000000));

// Number of Mobius transformations carrying the root set of F1 onto the
// root set of F2 (equal degrees 3 or 4; 0 on degree mismatch).
int cross_mobius_count(const BinaryForm& F1, const BinaryForm& F2,
                       int precision_bits = kDefaultPrecisionBits);

// Numeric substitution of a ball matrix into an exact coefficient vector.
std::vector<ComplexBox> numeric_substitute(const std::vector<Rat>& coeffs, const BoxMat2& T);

// A PGL automorphism lifted to GL2: base satisfies F_base = F numerically;
// when the entries reconstruct to rationals that verify exactly, `exact` is
// that matrix and `base` encloses it. The remaining lifts of the same PGL
// element are mu_d^k * base.
struct PGLLift {
    BoxMat2 base;
    std::optional<Mat2Q> exact;
};

struct PGLLiftSet {
    std::vector<PGLLift> lifts;  // one per PGL automorphism
    bool height_bound_exceeded = false;
};

PGLLiftSet pgl_lifted_automorphisms(const BinaryForm& F,
                                    int precision_bits = kDefaultPrecisionBits,
                                    const Int& height_bound = Int(1000000));

}  // namespace binform
