#pragma once

// Internal dense univariate polynomial helpers over Int/Rat.
// Convention: p[i] is the coefficient of t^i; the top entry is non-zero
// except for the zero polynomial, which is the empty vector.

#include "binform/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace binform::detail {

using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
inline int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Int eval(const ZPoly& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline Rat eval(const QPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline ZPoly derivative(const ZPoly& p) {
    ZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Int(i));
    trim(d);
    return d;
}

inline Int content(const ZPoly& p) {
    Int g = 0;
    for (const Int& c : p) g = gcd(g, c);
    return g == 0 ? Int(1) : g;
}

// Primitive part with positive leading coefficient; returns the removed
// (signed) content.
inline Int make_primitive(ZPoly& p) {
    trim(p);
    if (p.empty()) return 1;
    Int c = content(p);
    if (p.back() < 0) c = -c;
    for (Int& v : p) v /= c;
    return c;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division over Z: returns f/g when g divides f exactly, nullopt
// otherwise.
inline std::optional<ZPoly> divide_exact(const ZPoly& f, const ZPoly& g) {
    if (g.empty()) return std::nullopt;
    if (f.empty()) return ZPoly{};
    if (f.size() < g.size()) return std::nullopt;
    ZPoly rem = f;
    ZPoly q(f.size() - g.size() + 1, Int(0));
    const Int& lg = g.back();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        Int& top = rem[k + g.size() - 1];
        if (top % lg != 0) return std::nullopt;
        Int c = top / lg;
        q[static_cast<std::size_t>(k)] = c;
        if (c != 0)
            for (std::size_t j = 0; j < g.size(); ++j) rem[k + j] -= c * g[j];
    }
    for (const Int& v : rem)
        if (v != 0) return std::nullopt;
    return q;
}

// Deterministic Miller-Rabin for the word-size-to-desk-scale range (the
// chosen bases are proven complete below 3.3 * 10^24).
inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while (d % 2 == 0) d /= 2, ++r;
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r && witness; ++i) {
            x = x * x % n;
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; n odd composite, not a prime power of a
// small prime.
inline Int pollard_brent(const Int& n, std::uint64_t seed) {
    if (n % 2 == 0) return 2;
    Int y = 2 + Int(seed % 1000), c = 1 + Int(seed / 1000 % 1000), m = 128;
    Int g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int lim = m < r - k ? m : r - k;
            for (Int i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Int diff = x > y ? x - y : y - x;
                q = q * diff % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            Int diff = x > ys ? x - ys : ys - x;
            g = gcd(diff, n);
        } while (g == 1);
    }
    return g;
}

// Prime factorization: trial division by small primes, then recursive rho.
inline void factorize_into(Int n, std::vector<std::pair<Int, int>>& out) {
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        if (e) out.emplace_back(p, e);
    }
    if (n == 1) return;
    std::vector<Int> stack{n};
    std::vector<Int> primes;
    std::uint64_t seed = 1;
    while (!stack.empty()) {
        Int v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_probable_prime(v)) {
            primes.push_back(v);
            continue;
        }
        Int g = v;
        while (g == v) g = pollard_brent(v, seed++);
        stack.push_back(g);
        stack.push_back(v / g);
    }
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.emplace_back(primes[i], static_cast<int>(j - i));
        i = j;
    }
}

// Positive divisors of |n| (n != 0), ascending.
inline std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> pf;
    factorize_into(n, pf);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : pf) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Resultant of f and g via Bareiss fraction-free elimination on the
// Sylvester matrix. Exact; both inputs non-zero.
inline Int resultant(const ZPoly& f, const ZPoly& g) {
    const int m = deg(f), n = deg(g);
    if (m < 0 || n < 0) return 0;
    if (m == 0) {
        Int r = 1;
        for (int i = 0; i < n; ++i) r *= f[0];
        return r;
    }
    if (n == 0) {
        Int r = 1;
        for (int i = 0; i < m; ++i) r *= g[0];
        return r;
    }
    const int N = m + n;
    std::vector<std::vector<Int>> a(N, std::vector<Int>(N, Int(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) a[r][r + j] = f[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) a[n + r][r + j] = g[n - j];

    Int denom = 1;
    int sign_flips = 0;
    for (int k = 0; k < N - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (a[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            ++sign_flips;
        }
        for (int r = k + 1; r < N; ++r) {
            for (int c = k + 1; c < N; ++c) a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / denom;
            a[r][k] = 0;
        }
        denom = a[k][k];
    }
    Int det = a[N - 1][N - 1];
    return (sign_flips % 2) ? -det : det;
}

}  // namespace binform::detail
