#include "binform/reconstruct.hpp"

#include "ball.hpp"

namespace binform {

namespace {

// Exact rational value of a binary float.
Rat exact_rat(const NReal& v) {
    if (v == 0) return 0;
    int e = 0;
    NReal m = boost::multiprecision::frexp(v, &e);
    NReal scaled = boost::multiprecision::ldexp(m, 300);  // mantissa has 256 bits
    Int mi = scaled.convert_to<Int>();
    int shift = e - 300;
    Rat r(mi);
    if (shift >= 0) return r * Rat(Int(1) << shift);
    return r / Rat(Int(1) << (-shift));
}

Int floor_rat(const Rat& x) {
    Int q = num(x) / den(x);
    if (num(x) < 0 && q * den(x) != num(x)) --q;
    return q;
}

}  // namespace

std::optional<Rat> rational_reconstruct(const NReal& mid, const NReal& rad, const Int& height_bound) {
    if (height_bound <= 0) return std::nullopt;
    NReal unique_limit = NReal(1) / (2 * NReal(height_bound) * NReal(height_bound));
    if (!(rad < unique_limit)) return std::nullopt;

    const Rat x0 = exact_rat(mid);
    const Rat tol = exact_rat(rad + (boost::multiprecision::fabs(mid) + 1) * detail::slack_unit() * 4);

    auto accept = [&](const Rat& cand) {
        if (num(cand) > height_bound || -num(cand) > height_bound || den(cand) > height_bound)
            return false;
        Rat diff = x0 - cand;
        if (diff < 0) diff = -diff;
        return diff <= tol;
    };

    // Any rational within 1/(2 q^2) of x0 is one of its convergents.
    Int h_prev2 = 0, h_prev = 1, k_prev2 = 1, k_prev = 0;
    Rat x = x0;
    for (int step = 0; step < 512; ++step) {
        Int a = floor_rat(x);
        Int h = a * h_prev + h_prev2;
        Int k = a * k_prev + k_prev2;
        if (k > height_bound) break;
        Rat cand(h, k);
        if (accept(cand)) return cand;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        Rat frac = x - Rat(a);
        if (frac == 0) break;
        x = 1 / frac;
    }
    return std::nullopt;
}

std::optional<Rat> rational_reconstruct(const ComplexBox& box, const Int& height_bound) {
    using boost::multiprecision::fabs;
    if (fabs(box.im) > box.rad) return std::nullopt;  // certainly not real
    return rational_reconstruct(box.re, box.rad + fabs(box.im), height_bound);
}

}  // namespace binform
