#include "binform/factor.hpp"

#include "intpoly.hpp"

#include <algorithm>

namespace binform {

namespace {

using detail::ZPoly;

// Signed divisors of n, small |d| first, positive before negative.
std::vector<Int> signed_divisors(const Int& n) {
    std::vector<Int> out;
    for (const Int& d : detail::positive_divisors(n)) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

// All rational roots p/q of a primitive polynomial with non-zero constant
// term; factors (q t - p) are divided out with multiplicity. Values at +-1
// filter candidates before the exact division.
void strip_rational_roots(ZPoly& g, std::vector<ZPoly>& out) {
    if (detail::deg(g) < 1) return;
    auto ps = detail::positive_divisors(g.front());
    auto qs = detail::positive_divisors(g.back());
    Int g1v = detail::eval(g, Int(1));
    Int gm1v = detail::eval(g, Int(-1));
    for (const Int& q : qs)
        for (const Int& p : ps) {
            if (gcd(p, q) != 1) continue;
            for (int s : {1, -1}) {
                Int sp = s * p;
                Int v1 = q - sp, vm1 = -q - sp;  // (qt - sp) at t = +-1
                if (g1v != 0 && (v1 == 0 || g1v % v1 != 0)) continue;
                if (gm1v != 0 && (vm1 == 0 || gm1v % vm1 != 0)) continue;
                ZPoly lin{-sp, q};
                bool divided = false;
                while (true) {
                    auto quot = detail::divide_exact(g, lin);
                    if (!quot) break;
                    g = *quot;
                    out.push_back(lin);
                    divided = true;
                }
                if (divided) {
                    g1v = detail::eval(g, Int(1));
                    gm1v = detail::eval(g, Int(-1));
                }
                if (detail::deg(g) < 1) return;
            }
        }
}

// Numerator of the Cauchy root bound: all roots of g satisfy
// |r| <= (|lead| + max|coeff|) / |lead|.
Int cauchy_bound_num(const ZPoly& g) {
    Int lead = g.back() < 0 ? Int(-g.back()) : g.back();
    Int m = 0;
    for (const Int& c : g) {
        Int a = c < 0 ? Int(-c) : c;
        if (a > m) m = a;
    }
    return lead + m;
}

// One quadratic factor of g if any exists. g is primitive, positive leading
// coefficient, no rational roots, deg >= 4. Candidates are pinned by
// divisibility of the values at 0, 1 and -1, and pruned by the root bound
// (coefficients of a factor are symmetric functions of roots of g).
std::optional<ZPoly> find_quadratic_factor(const ZPoly& g) {
    const Int g1v = detail::eval(g, Int(1));
    const Int gm1v = detail::eval(g, Int(-1));
    const Int lead = g.back();
    const Int rb = cauchy_bound_num(g);  // |root| <= rb / lead
    // g has no rational roots, so neither value is zero.
    const std::vector<Int> leads = detail::positive_divisors(g.back());
    const std::vector<Int> consts = signed_divisors(g.front());
    const std::vector<Int> vals1 = signed_divisors(g1v);
    for (const Int& c2 : leads) {
        Int bound0 = c2 * rb * rb;                         // |c0| lead^2 <= c2 rb^2
        Int bound1 = 2 * c2 * rb;                          // |c1| lead <= 2 c2 rb
        Int bounds1 = c2 * (lead + rb) * (lead + rb);      // |cand(1)| lead^2 <= c2 (lead+rb)^2
        for (const Int& c0 : consts) {
            if ((c0 < 0 ? -c0 : c0) * lead * lead > bound0) break;  // magnitude-ascending
            for (const Int& s1 : vals1) {
                if ((s1 < 0 ? -s1 : s1) * lead * lead > bounds1) break;
                Int c1 = s1 - c2 - c0;
                if ((c1 < 0 ? -c1 : c1) * lead > bound1) continue;
                Int vm1 = c2 - c1 + c0;
                if (vm1 == 0 || gm1v % vm1 != 0) continue;
                Int disc = c1 * c1 - 4 * c2 * c0;
                if (is_square(disc)) continue;  // reducible candidate cannot divide g
                ZPoly cand{c0, c1, c2};
                if (detail::content(cand) != 1) continue;
                if (detail::divide_exact(g, cand)) return cand;
            }
        }
    }
    return std::nullopt;
}

// One cubic factor of a degree-6 g with no rational roots and no quadratic
// factors (the 3+3 split). Values at 0, 1, -1 pin the candidate; the value
// at 2 filters before trial division.
std::optional<ZPoly> find_cubic_factor(const ZPoly& g) {
    const Int g1v = detail::eval(g, Int(1));
    const Int gm1v = detail::eval(g, Int(-1));
    const Int g2v = detail::eval(g, Int(2));
    const Int lead = g.back();
    const Int rb = cauchy_bound_num(g);
    const std::vector<Int> leads = detail::positive_divisors(g.back());
    const std::vector<Int> consts = signed_divisors(g.front());
    const std::vector<Int> vals1 = signed_divisors(g1v);
    const std::vector<Int> valsm1 = signed_divisors(gm1v);
    const Int lp = lead + rb;
    for (const Int& c3 : leads) {
        Int bound0 = c3 * rb * rb * rb;      // |c0| lead^3 <= c3 rb^3
        Int bound1 = 3 * c3 * rb * rb;       // |c1| lead^2 <= 3 c3 rb^2
        Int bound2 = 3 * c3 * rb;            // |c2| lead <= 3 c3 rb
        Int boundv = c3 * lp * lp * lp;      // |cand(+-1)| lead^3 <= c3 (lead+rb)^3
        for (const Int& c0 : consts) {
            if ((c0 < 0 ? -c0 : c0) * lead * lead * lead > bound0) break;
            for (const Int& s1 : vals1) {
                if ((s1 < 0 ? -s1 : s1) * lead * lead * lead > boundv) break;
                for (const Int& sm1 : valsm1) {
                    if ((sm1 < 0 ? -sm1 : sm1) * lead * lead * lead > boundv) break;
                    // s1 = c3+c2+c1+c0, sm1 = -c3+c2-c1+c0
                    Int twice_c2 = s1 + sm1 - 2 * c0;
                    Int twice_c1 = s1 - sm1 - 2 * c3;
                    if (twice_c2 % 2 != 0 || twice_c1 % 2 != 0) continue;
                    Int c2 = twice_c2 / 2, c1 = twice_c1 / 2;
                    if ((c2 < 0 ? -c2 : c2) * lead > bound2) continue;
                    if ((c1 < 0 ? -c1 : c1) * lead * lead > bound1) continue;
                    Int v2 = 8 * c3 + 4 * c2 + 2 * c1 + c0;
                    if (v2 == 0 || g2v % v2 != 0) continue;
                    ZPoly cand{c0, c1, c2, c3};
                    if (detail::content(cand) != 1) continue;
                    if (detail::divide_exact(g, cand)) return cand;
                }
            }
        }
    }
    return std::nullopt;
}

void factor_univariate(ZPoly g, std::vector<ZPoly>& out) {
    if (detail::deg(g) < 1) return;
    strip_rational_roots(g, out);
    while (detail::deg(g) >= 4) {
        auto q = find_quadratic_factor(g);
        if (!q) break;
        out.push_back(*q);
        g = *detail::divide_exact(g, *q);
    }
    if (detail::deg(g) == 6) {
        auto c = find_cubic_factor(g);
        if (c) {
            out.push_back(*c);
            g = *detail::divide_exact(g, *c);
        }
    }
    if (detail::deg(g) >= 1) out.push_back(g);  // irreducible remainder
}

BinaryForm homogenize(const ZPoly& p, int degree) {
    // p[j] is the coefficient of t^j = (x/y)^j; form index i holds x^(d-i) y^i.
    std::vector<Rat> c(static_cast<std::size_t>(degree) + 1, Rat(0));
    for (std::size_t j = 0; j < p.size(); ++j) c[static_cast<std::size_t>(degree) - j] = Rat(p[j]);
    return BinaryForm(std::move(c));
}

}  // namespace

FormFactorization factor_over_Z(const BinaryForm& F) {
    if (F.is_zero()) throw Error("cannot factor the zero form");
    if (F.degree() > 6) throw UnsupportedDegree("factorization supports degree <= 6");
    auto prim = F.primitive();
    FormFactorization out;
    out.content = prim.content;

    const std::vector<Int> c = prim.form.primitive_int_coeffs();
    const int d = prim.form.degree();

    std::vector<BinaryForm> flat;
    int y_mult = 0;
    while (y_mult <= d && c[static_cast<std::size_t>(y_mult)] == 0) ++y_mult;
    for (int i = 0; i < y_mult; ++i) flat.push_back(BinaryForm({0, 1}));  // y

    ZPoly g;  // remaining part, as F'(t,1)
    for (int j = 0; j <= d - y_mult; ++j) g.push_back(c[static_cast<std::size_t>(d - j)]);
    detail::trim(g);
    std::size_t x_mult = 0;
    while (x_mult < g.size() && g[x_mult] == 0) ++x_mult;
    g.erase(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(x_mult));
    for (std::size_t i = 0; i < x_mult; ++i) flat.push_back(BinaryForm({1, 0}));  // x

    std::vector<ZPoly> parts;
    factor_univariate(g, parts);
    for (const ZPoly& p : parts) flat.push_back(homogenize(p, detail::deg(p)));

    std::sort(flat.begin(), flat.end(), [](const BinaryForm& a, const BinaryForm& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    for (const BinaryForm& f : flat) {
        if (!out.factors.empty() && out.factors.back().first == f)
            ++out.factors.back().second;
        else
            out.factors.emplace_back(f, 1);
    }
    return out;
}

}  // namespace binform
