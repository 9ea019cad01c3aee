#pragma once

// Internal ball arithmetic on ComplexBox values. Propagated radii carry a
// relative slack of 2^-200 per operation, orders of magnitude above the
// 256-bit rounding of the centers and orders of magnitude below any
// tolerance a caller decides with; exact claims never rest on these balls.

#include "binform/rational.hpp"
#include "binform/roots.hpp"

#include <array>

namespace binform::detail {

inline const NReal& slack_unit() {
    static const NReal s = []{
        NReal t = 1;
        return boost::multiprecision::ldexp(t, -200);
    }();
    return s;
}

inline NReal mag(const ComplexBox& a) {
    using boost::multiprecision::sqrt;
    return sqrt(a.re * a.re + a.im * a.im);
}

inline NReal mag_upper(const ComplexBox& a) { return mag(a) * (1 + slack_unit()) + a.rad; }

// Lower bound for |center| - rad; negative means zero may be inside.
inline NReal mag_lower(const ComplexBox& a) { return mag(a) * (1 - slack_unit()) - a.rad; }

inline void absorb_rounding(ComplexBox& a) {
    using boost::multiprecision::fabs;
    a.rad += (fabs(a.re) + fabs(a.im) + a.rad) * slack_unit();
}

inline ComplexBox b_exact(const Rat& v) {
    ComplexBox out;
    out.re = NReal(num(v)) / NReal(den(v));
    out.im = 0;
    out.rad = 0;
    absorb_rounding(out);
    return out;
}

inline ComplexBox b_real(const NReal& v) { return ComplexBox{v, 0, 0}; }

inline ComplexBox b_add(const ComplexBox& a, const ComplexBox& b) {
    ComplexBox out{a.re + b.re, a.im + b.im, a.rad + b.rad};
    absorb_rounding(out);
    return out;
}

inline ComplexBox b_sub(const ComplexBox& a, const ComplexBox& b) {
    ComplexBox out{a.re - b.re, a.im - b.im, a.rad + b.rad};
    absorb_rounding(out);
    return out;
}

inline ComplexBox b_neg(const ComplexBox& a) { return ComplexBox{-a.re, -a.im, a.rad}; }

inline ComplexBox b_conj(const ComplexBox& a) { return ComplexBox{a.re, -a.im, a.rad}; }

// Multiply by i (exact rotation).
inline ComplexBox b_muli(const ComplexBox& a) { return ComplexBox{-a.im, a.re, a.rad}; }

inline ComplexBox b_mul(const ComplexBox& a, const ComplexBox& b) {
    ComplexBox out{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re,
                   mag(a) * b.rad + mag(b) * a.rad + a.rad * b.rad};
    absorb_rounding(out);
    return out;
}

inline ComplexBox b_div(const ComplexBox& a, const ComplexBox& b) {
    NReal blo = mag_lower(b);
    if (blo <= 0) throw PrecisionExhausted("ball division by an enclosure containing zero");
    NReal d = b.re * b.re + b.im * b.im;
    ComplexBox out{(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d, 0};
    // |a/b - c| <= (|a| rb + |b| ra) / (|b| blo) style bound, taken loosely.
    out.rad = (mag_upper(a) * b.rad + mag(b) * a.rad + a.rad * b.rad) / (blo * blo);
    absorb_rounding(out);
    return out;
}

// sqrt of a certified-positive real ball.
inline ComplexBox b_sqrt_pos(const ComplexBox& a) {
    using boost::multiprecision::sqrt;
    if (!(a.im == 0)) throw Error("b_sqrt_pos needs a real ball");
    NReal lo = a.re - a.rad;
    if (lo <= 0) throw PrecisionExhausted("sqrt of an enclosure touching zero");
    ComplexBox out{sqrt(a.re), 0, 0};
    out.rad = a.rad / (2 * sqrt(lo));
    absorb_rounding(out);
    return out;
}

// True iff the balls are certainly equal-free, i.e. their supports are
// disjoint.
inline bool b_disjoint(const ComplexBox& a, const ComplexBox& b) {
    return mag_lower(b_sub(a, b)) > 0;
}

// True iff the support of v certainly lies inside the support of a.
inline bool b_contains_ball(const ComplexBox& a, const ComplexBox& v) {
    ComplexBox d{a.re - v.re, a.im - v.im, 0};
    return mag(d) * (1 + slack_unit()) + v.rad <= a.rad;
}

inline ComplexBox b_from_parts(const NReal& re, const NReal& im, const NReal& rad) {
    return ComplexBox{re, im, rad};
}

}  // namespace binform::detail
