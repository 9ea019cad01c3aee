#include "binform/binary_form.hpp"

#include "binform/covariants.hpp"
#include "intpoly.hpp"

#include <algorithm>
#include <set>

namespace binform {

bool verify_automorphism(const BinaryForm& F, const Mat2Q& T) {
    if (T.det() == 0) return false;
    return substitute(F, T) == F;
}

bool verify_automorphism(const BinaryForm& F, const Mat2E& T) {
    if (T.det() == QuadExt(Rat(0))) return false;
    std::vector<QuadExt> c(F.coeffs().begin(), F.coeffs().end());
    return substitute_coeffs(c, T) == c;
}

namespace {

// Squarefree test for degrees 5 and 6: non-zero iff the form has no repeated
// projective root. y-multiplicity is read off the vanishing leading
// coefficients; the affine part goes through the resultant.
Rat squarefree_indicator(const BinaryForm& F) {
    std::vector<Int> c = F.primitive_int_coeffs();
    std::size_t lead_zeros = 0;
    while (lead_zeros < c.size() && c[lead_zeros] == 0) ++lead_zeros;
    if (lead_zeros >= 2) return 0;  // y^2 divides F
    // Dehomogenize the part after the y^k factor: t^j coefficient is c[d-j].
    detail::ZPoly f(c.rbegin(), c.rend());
    detail::trim(f);
    if (detail::deg(f) <= 1) return 1;
    detail::ZPoly fp = detail::derivative(f);
    return Rat(detail::resultant(f, fp));
}

}  // namespace

Rat discriminant(const BinaryForm& F) {
    const int d = F.degree();
    if (d < 2 || d > 6) throw UnsupportedDegree();
    const auto& c = F.coeffs();
    switch (d) {
        case 2: {
            const Rat &a = c[0], &b = c[1], &cc = c[2];
            return b * b - 4 * a * cc;
        }
        case 3: {
            const Rat &b3 = c[0], &b2 = c[1], &b1 = c[2], &b0 = c[3];
            return 18 * b3 * b2 * b1 * b0 - 4 * b2 * b2 * b2 * b0 + b2 * b2 * b1 * b1 -
                   4 * b3 * b1 * b1 * b1 - 27 * b3 * b3 * b0 * b0;
        }
        case 4: {
            Rat I = invariant_I(F), J = invariant_J(F);
            return (4 * I * I * I - J * J) / 27;
        }
        default:
            return squarefree_indicator(F);
    }
}

std::vector<ProjRootQ> rational_proj_roots(const BinaryForm& F) {
    if (F.is_zero()) throw Error("zero form has no root set");
    std::vector<Int> c = F.primitive_int_coeffs();
    const int d = F.degree();

    std::set<ProjRootQ> roots;
    if (c[0] == 0) roots.insert(ProjRootQ::at_infinity());

    detail::ZPoly f;  // F(t,1): coefficient of t^j is c[d-j]
    for (int j = 0; j <= d; ++j) f.push_back(c[static_cast<std::size_t>(d - j)]);
    detail::trim(f);
    if (f.empty()) return {roots.begin(), roots.end()};

    std::size_t k = 0;
    while (k < f.size() && f[k] == 0) ++k;
    if (k > 0) {
        roots.insert(ProjRootQ::affine(0));
        f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
    }
    if (detail::deg(f) >= 1) {
        for (const Int& p : detail::positive_divisors(f.front()))
            for (const Int& q : detail::positive_divisors(f.back())) {
                if (gcd(p, q) != 1) continue;
                for (int s : {1, -1}) {
                    Rat cand(s * p, q);
                    detail::QPoly fq(f.begin(), f.end());
                    if (detail::eval(fq, cand) == 0) roots.insert(ProjRootQ::affine(cand));
                }
            }
    }
    return {roots.begin(), roots.end()};
}

Mat2Q leading_shift(const BinaryForm& F) {
    if (F.is_zero()) throw Error("zero form has no leading coefficient");
    if (F.lead() != 0) return Mat2Q::identity();
    if (F.trail() != 0) return Mat2Q(0, 1, 1, 0);
    for (Rat k = 1;; k += 1) {
        if (F.eval(Rat(1), k) != 0) return Mat2Q(1, 0, k, 1);
    }
}

std::string BinaryForm::str(const std::string& x, const std::string& y) const {
    if (is_zero()) return "0";
    const int d = degree();
    std::string out;
    for (int i = 0; i <= d; ++i) {
        const Rat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rat a = c < 0 ? Rat(-c) : c;
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        const int xe = d - i, ye = i;
        std::string mono;
        if (xe > 0) mono += x + (xe > 1 ? "^" + std::to_string(xe) : "");
        if (ye > 0) {
            if (!mono.empty()) mono += "*";
            mono += y + (ye > 1 ? "^" + std::to_string(ye) : "");
        }
        if (mono.empty())
            out += to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += to_string(a) + "*" + mono;
    }
    return out;
}

}  // namespace binform
