#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace binform {

using Int = boost::multiprecision::cpp_int;
// Exact rational scalar. cpp_rational keeps lowest terms with positive
// denominator, which is exactly the normalization we need.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Int& n) { return n.sign(); }
inline int sign(const Rat& q) { return q.sign(); }

// Floor of sqrt(n); n must be >= 0.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// Exact square root of a perfect square; caller checks is_square first.
inline Int sqrt_exact(const Int& n) { return isqrt(n); }

// True iff q is the square of a rational (numerator and denominator are
// integer squares once in lowest terms).
inline bool is_square(const Rat& q) {
    return is_square(num(q)) && is_square(den(q));
}

inline Rat sqrt_exact(const Rat& q) {
    return Rat(sqrt_exact(num(q)), sqrt_exact(den(q)));
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Writes n = r^2 * m with m squarefree (m keeps the sign of n).
// Trial division up to `bound`, then a final perfect-square absorb; radicands
// here come from discriminants of desk-scale forms, where this is exhaustive.
struct SquarefreeDecomposition {
    Int root;      // r
    Int radicand;  // m, squarefree
};

inline SquarefreeDecomposition squarefree_decompose(Int n, std::int64_t bound = 1000000) {
    SquarefreeDecomposition out{1, 1};
    if (n == 0) return {1, 0};
    if (n < 0) {
        out.radicand = -1;
        n = -n;
    }
    for (std::int64_t p = 2; p <= bound && Int(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        Int pp = Int(p) * p;
        while (n % pp == 0) {
            n /= pp;
            out.root *= p;
        }
    }
    if (is_square(n)) {
        out.root *= sqrt_exact(n);
        n = 1;
    }
    out.radicand *= n;
    return out;
}

// Square-class equality: a ~ b in Q* / (Q*)^2. Zero is its own class.
inline bool same_square_class(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) return a == b;
    return is_square(a * b);
}

inline std::string to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// gcd of the numerators over lcm-cleared values: the rational content of a
// coefficient list, with the sign of the first non-zero entry.
inline Rat rational_content(const std::vector<Rat>& cs) {
    Int l = 1;
    for (const Rat& c : cs) l = l / gcd(l, den(c)) * den(c);
    Int g = 0;
    for (const Rat& c : cs) g = gcd(g, num(c) * (l / den(c)));
    if (g == 0) return 0;
    Rat content(g, l);
    for (const Rat& c : cs)
        if (c != 0) return c < 0 ? -content : content;
    return content;
}

}  // namespace binform
