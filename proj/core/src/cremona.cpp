#include "binform/cremona.hpp"

#include "ball.hpp"
#include "binform/covariants.hpp"

namespace binform {

namespace {

using detail::b_add;
using detail::b_exact;
using detail::b_mul;
using detail::b_sub;

// f(px + qy, rx + sy) for a quadratic with ball coefficients and an exact
// rational matrix.
CremonaCovariant substitute_quadratic(const CremonaCovariant& f, const Mat2Q& T) {
    ComplexBox p = b_exact(T.t1), q = b_exact(T.t2), r = b_exact(T.t3), s = b_exact(T.t4);
    CremonaCovariant out;
    // x^2: A p^2 + B p r + C r^2
    out.a = b_add(b_add(b_mul(f.a, b_mul(p, p)), b_mul(f.b, b_mul(p, r))), b_mul(f.c, b_mul(r, r)));
    // xy: 2 A p q + B (p s + q r) + 2 C r s
    ComplexBox two = b_exact(Rat(2));
    out.b = b_add(b_add(b_mul(two, b_mul(f.a, b_mul(p, q))),
                        b_mul(f.b, b_add(b_mul(p, s), b_mul(q, r)))),
                  b_mul(two, b_mul(f.c, b_mul(r, s))));
    // y^2: A q^2 + B q s + C s^2
    out.c = b_add(b_add(b_mul(f.a, b_mul(q, q)), b_mul(f.b, b_mul(q, s))), b_mul(f.c, b_mul(s, s)));
    return out;
}

ComplexBox disc_of(const CremonaCovariant& f) {
    ComplexBox four = detail::b_exact(Rat(4));
    return b_sub(b_mul(f.b, f.b), b_mul(four, b_mul(f.a, f.c)));
}

// Coefficients of the product of the three quadratics (degree 6).
std::array<ComplexBox, 7> product_coeffs(const std::array<CremonaCovariant, 3>& cov) {
    std::array<ComplexBox, 7> acc{};
    for (auto& v : acc) v = detail::b_exact(Rat(0));
    std::array<std::array<ComplexBox, 3>, 3> q;
    for (int i = 0; i < 3; ++i) q[static_cast<std::size_t>(i)] = {cov[static_cast<std::size_t>(i)].a,
                                                                  cov[static_cast<std::size_t>(i)].b,
                                                                  cov[static_cast<std::size_t>(i)].c};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                ComplexBox term = b_mul(q[0][static_cast<std::size_t>(i)],
                                        b_mul(q[1][static_cast<std::size_t>(j)], q[2][static_cast<std::size_t>(k)]));
                std::size_t idx = static_cast<std::size_t>(i + j + k);
                acc[idx] = b_add(acc[idx], term);
            }
    return acc;
}

}  // namespace

CremonaSet cremona_covariants_numeric(const BinaryForm& F, int precision_bits) {
    if (F.degree() != 4) throw UnsupportedDegree("cremona covariants require degree 4");
    BinaryForm prim = F.primitive().form;
    if (discriminant(prim) == 0) throw DegenerateForm();

    Mat2Q S = leading_shift(prim);
    BinaryForm G = substitute(prim, S);
    Mat2Q Sinv = S.inverse();
    BinaryForm F6 = sextic_covariant(prim);

    for (int bits = std::max(precision_bits, 128); bits <= kMaxPrecisionBits; bits *= 2) {
        LabeledRoots lab = complex_roots(G, bits);
        const auto& th = lab.roots;
        ComplexBox a4 = detail::b_exact(G.lead());

        // Pairings (12|34), (13|24), (14|23) of the labeled roots.
        static constexpr int P[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        CremonaSet out;
        out.chi = lab.chi;
        out.bits = lab.bits;
        for (int i = 0; i < 3; ++i) {
            const ComplexBox &t1 = th[static_cast<std::size_t>(P[i][0])], &t2 = th[static_cast<std::size_t>(P[i][1])],
                             &t3 = th[static_cast<std::size_t>(P[i][2])], &t4 = th[static_cast<std::size_t>(P[i][3])];
            ComplexBox sum12 = b_add(t1, t2), sum34 = b_add(t3, t4);
            ComplexBox prod12 = b_mul(t1, t2), prod34 = b_mul(t3, t4);
            CremonaCovariant c;
            c.a = b_mul(a4, b_sub(sum12, sum34));
            c.b = b_mul(detail::b_exact(Rat(2)), b_mul(a4, b_sub(prod34, prod12)));
            c.c = b_mul(a4, b_sub(b_mul(prod12, sum34), b_mul(prod34, sum12)));
            // Covariants of the shifted form, pulled back to the original
            // variables. When a shift was needed the labels are those of the
            // shifted form's roots.
            c = substitute_quadratic(c, Sinv);
            c.disc = disc_of(c);
            out.cov[static_cast<std::size_t>(i)] = c;
        }

        bool discs_ok = true;
        for (const auto& c : out.cov)
            if (c.disc.contains_zero()) discs_ok = false;
        if (!discs_ok) continue;

        // The product of the three covariants reproduces the sextic
        // covariant up to sign (the labeling orientation fixes the sign; with
        // this labeling the product comes out as -F6).
        auto prod = product_coeffs(out.cov);
        for (int sign : {-1, 1}) {
            bool match = true;
            for (int k = 0; k <= 6 && match; ++k) {
                ComplexBox diff =
                    b_sub(prod[static_cast<std::size_t>(k)], detail::b_exact(sign * F6[k]));
                if (!(detail::mag(diff) <= diff.rad)) match = false;
            }
            if (match) return out;
        }
    }
    throw PrecisionExhausted("cremona covariants not certified at maximum precision");
}

}  // namespace binform
