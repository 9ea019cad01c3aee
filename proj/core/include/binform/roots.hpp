#pragma once

#include "binform/binary_form.hpp"
#include "binform/sturm.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <vector>

namespace binform {

// Carrier type for certified numerics handed out of the root engine.
// Internal refinement may run at up to 4096 bits; results are rounded out
// into this type with the radius inflated accordingly.
using NReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

// Closed disc |z - (re + i*im)| <= rad certified to contain exactly one root
// (or, in derived quantities, the exact value).
struct ComplexBox {
    NReal re{0}, im{0}, rad{0};

    bool is_certified_real() const { return im == 0; }
    bool contains_zero() const;
    std::string str(unsigned digits = 30) const;
};

struct BoxMat2 {
    ComplexBox t1, t2, t3, t4;
};

constexpr int kDefaultPrecisionBits = 128;
constexpr int kMaxPrecisionBits = 4096;

// Certified complex roots of F(x,1), refined by simultaneous (Aberth)
// iteration and certified with Weierstrass inclusion discs; the real/complex
// split is dictated by the exact Sturm count, never by the numerics.
//
// Quartics with a non-zero leading coefficient are ordered by the labeling
// convention:
//   chi = 4:  theta1 > theta2 > theta3 > theta4
//   chi = 2:  theta1 > theta2 real; theta3 = conj(theta4), Im theta3 > 0
//   chi = 0:  theta1 = conj(theta2), Im theta1 > 0;
//             theta3 = conj(theta4), Im theta3 < 0
// (pairs ordered by decreasing real part, ties by decreasing |Im|; the tie
// test is exact, so the assignment is precision-independent).
// Other degrees use: real roots descending, then conjugate pairs.
struct LabeledRoots {
    std::vector<ComplexBox> roots;  // affine roots of F(x,1)
    bool infinite_root = false;     // set iff the leading coefficient vanishes
    int chi = 0;                    // exact count of real affine roots
    int bits = 0;                   // precision that certified the result
};

LabeledRoots complex_roots(const BinaryForm& F, int precision_bits = kDefaultPrecisionBits);

}  // namespace binform
