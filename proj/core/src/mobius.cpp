#include "binform/mobius.hpp"

#include "ball.hpp"
#include "binform/reconstruct.hpp"

#include <algorithm>
#include <optional>

namespace binform {

namespace {

using detail::b_add;
using detail::b_div;
using detail::b_exact;
using detail::b_mul;
using detail::b_neg;
using detail::b_sub;

// Projective point of P^1(C) as a pair of balls (u : v).
struct ProjPoint {
    ComplexBox u, v;
};

std::vector<ProjPoint> projective_roots(const LabeledRoots& lab) {
    std::vector<ProjPoint> pts;
    ComplexBox one = b_exact(Rat(1)), zero = b_exact(Rat(0));
    for (const ComplexBox& r : lab.roots) pts.push_back({r, one});
    if (lab.infinite_root) pts.push_back({one, zero});
    return pts;
}

// cross(P, Q) = u_P v_Q - v_P u_Q; zero iff the projective points coincide.
ComplexBox cross(const ProjPoint& p, const ProjPoint& q) {
    return b_sub(b_mul(p.u, q.v), b_mul(p.v, q.u));
}

// The matrix sending (e1, e2, e1+e2) to the frame (p1, p2, p3), up to scale:
// columns det[p3,p2]*p1 and det[p1,p3]*p2.
BoxMat2 frame_matrix(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
    ComplexBox alpha = cross(p3, p2);
    ComplexBox beta = cross(p1, p3);
    return BoxMat2{b_mul(alpha, p1.u), b_mul(beta, p2.u), b_mul(alpha, p1.v), b_mul(beta, p2.v)};
}

BoxMat2 adjugate(const BoxMat2& m) { return BoxMat2{m.t4, b_neg(m.t2), b_neg(m.t3), m.t1}; }

BoxMat2 mul(const BoxMat2& x, const BoxMat2& y) {
    return BoxMat2{b_add(b_mul(x.t1, y.t1), b_mul(x.t2, y.t3)),
                   b_add(b_mul(x.t1, y.t2), b_mul(x.t2, y.t4)),
                   b_add(b_mul(x.t3, y.t1), b_mul(x.t4, y.t3)),
                   b_add(b_mul(x.t3, y.t2), b_mul(x.t4, y.t4))};
}

ProjPoint apply(const BoxMat2& m, const ProjPoint& p) {
    return ProjPoint{b_add(b_mul(m.t1, p.u), b_mul(m.t2, p.v)),
                     b_add(b_mul(m.t3, p.u), b_mul(m.t4, p.v))};
}

// Index of the unique target point the image may coincide with: nullopt for
// "ambiguous, escalate"; -1 for "certainly none".
std::optional<int> match_target(const ProjPoint& image, const std::vector<ProjPoint>& targets) {
    int hit = -1;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        ComplexBox c = cross(image, targets[t]);
        if (!(detail::mag_lower(c) > 0)) {  // may vanish
            if (hit >= 0) return std::nullopt;
            hit = static_cast<int>(t);
        }
    }
    return hit;
}

// Largest-modulus entry normalized to 1 (the spec'd canonical projective
// representative).
std::optional<BoxMat2> normalize(const BoxMat2& m) {
    const ComplexBox* entries[4] = {&m.t1, &m.t2, &m.t3, &m.t4};
    int best = 0;
    NReal best_mag = -1;
    for (int i = 0; i < 4; ++i) {
        NReal v = detail::mag(*entries[i]);
        if (v > best_mag) {
            best_mag = v;
            best = i;
        }
    }
    const ComplexBox& pivot = *entries[best];
    if (!(detail::mag_lower(pivot) > 0)) return std::nullopt;
    return BoxMat2{b_div(m.t1, pivot), b_div(m.t2, pivot), b_div(m.t3, pivot), b_div(m.t4, pivot)};
}

// Entrywise "possibly equal" for normalized representatives.
bool possibly_equal(const BoxMat2& a, const BoxMat2& b) {
    return !(detail::mag_lower(b_sub(a.t1, b.t1)) > 0) && !(detail::mag_lower(b_sub(a.t2, b.t2)) > 0) &&
           !(detail::mag_lower(b_sub(a.t3, b.t3)) > 0) && !(detail::mag_lower(b_sub(a.t4, b.t4)) > 0);
}

struct SearchResult {
    std::vector<MobiusElement> elements;
};

// Core search: maps sending the first three roots of `src` to every ordered
// triple of roots of `dst`, kept when the whole root set maps bijectively.
// nullopt = an ambiguity required more precision.
std::optional<SearchResult> mobius_search(const std::vector<ProjPoint>& src,
                                          const std::vector<ProjPoint>& dst) {
    const std::size_t n = src.size();
    SearchResult out;
    BoxMat2 base_adj = adjugate(frame_matrix(src[0], src[1], src[2]));

    std::vector<int> idx(dst.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);

    for (int a : idx)
        for (int b : idx) {
            if (b == a) continue;
            for (int c : idx) {
                if (c == a || c == b) continue;
                BoxMat2 T = mul(frame_matrix(dst[static_cast<std::size_t>(a)],
                                             dst[static_cast<std::size_t>(b)],
                                             dst[static_cast<std::size_t>(c)]),
                                base_adj);
                std::vector<int> perm(n, -1);
                std::vector<bool> taken(dst.size(), false);
                bool ok = true;
                for (std::size_t s = 0; s < n && ok; ++s) {
                    auto hit = match_target(apply(T, src[s]), dst);
                    if (!hit) return std::nullopt;  // ambiguous match
                    if (*hit < 0 || taken[static_cast<std::size_t>(*hit)]) {
                        ok = false;
                        break;
                    }
                    taken[static_cast<std::size_t>(*hit)] = true;
                    perm[s] = *hit;
                }
                if (!ok) continue;
                auto norm = normalize(T);
                if (!norm) return std::nullopt;
                bool dup = false;
                for (const MobiusElement& e : out.elements)
                    if (possibly_equal(e.matrix, *norm)) {
                        dup = true;
                        break;
                    }
                if (!dup) out.elements.push_back({*norm, std::move(perm)});
            }
        }
    return out;
}

std::vector<ProjPoint> roots_of(const BinaryForm& F, int bits) {
    return projective_roots(complex_roots(F, bits));
}

}  // namespace

std::vector<MobiusElement> pgl_automorphisms_numeric(const BinaryForm& F, int precision_bits) {
    const int d = F.degree();
    if (d != 3 && d != 4) throw UnsupportedDegree("PGL automorphism search requires degree 3 or 4");
    if (discriminant(F) == 0) throw DegenerateForm();

    const int expected = aut_pgl_class(F).upsilon;
    for (int bits = std::max(precision_bits, 128); bits <= kMaxPrecisionBits; bits *= 2) {
        std::vector<ProjPoint> pts = roots_of(F, bits);
        auto res = mobius_search(pts, pts);
        if (!res) continue;
        // Certified-numeric result cross-checked against the exact
        // classification; a mismatch means unresolved clustering.
        if (static_cast<int>(res->elements.size()) != expected) continue;
        return std::move(res->elements);
    }
    throw PrecisionExhausted("PGL automorphism search not certified at maximum precision");
}

int cross_mobius_count(const BinaryForm& F1, const BinaryForm& F2, int precision_bits) {
    if (F1.degree() != F2.degree()) return 0;
    const int d = F1.degree();
    if (d != 3 && d != 4) throw UnsupportedDegree("Mobius search requires degree 3 or 4");
    if (discriminant(F1) == 0 || discriminant(F2) == 0) throw DegenerateForm();
    if (d == 3) return 6;  // PGL2(C) is 3-transitive

    const int expected_nonzero = aut_pgl_class(F2).upsilon;
    for (int bits = std::max(precision_bits, 128); bits <= kMaxPrecisionBits; bits *= 2) {
        std::vector<ProjPoint> src = roots_of(F1, bits);
        std::vector<ProjPoint> dst = roots_of(F2, bits);
        auto res = mobius_search(src, dst);
        if (!res) continue;
        int count = static_cast<int>(res->elements.size());
        // Non-empty transporter sets are cosets of Aut*_C(F2).
        if (count != 0 && count != expected_nonzero) continue;
        return count;
    }
    throw PrecisionExhausted("cross-form Mobius search not certified at maximum precision");
}

namespace {

// Exact d-th roots of unity as balls (d = 3 or 4).
std::vector<ComplexBox> roots_of_unity(int d) {
    std::vector<ComplexBox> out;
    ComplexBox one = b_exact(Rat(1));
    if (d == 4) {
        ComplexBox i = detail::b_muli(one);
        out = {one, i, b_neg(one), b_neg(i)};
    } else if (d == 3) {
        ComplexBox half = b_exact(Rat(1, 2));
        ComplexBox s3 = detail::b_sqrt_pos(b_exact(Rat(3)));
        ComplexBox im = detail::b_muli(b_mul(half, s3));  // i sqrt(3)/2
        out = {one, b_add(b_neg(half), im), b_sub(b_neg(half), im)};
    } else {
        throw UnsupportedDegree("roots of unity only needed for degrees 3 and 4");
    }
    return out;
}

// Principal d-th root of a ball certified away from zero.
ComplexBox principal_root(const ComplexBox& z, int d) {
    using boost::multiprecision::atan2;
    using boost::multiprecision::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    using boost::multiprecision::sin;
    NReal lo = detail::mag_lower(z);
    if (!(lo > 0)) throw PrecisionExhausted("d-th root of an enclosure containing zero");
    NReal r = detail::mag(z);
    NReal theta = atan2(z.im, z.re);
    NReal rr = exp(log(r) / d);
    NReal tt = theta / d;
    ComplexBox out;
    out.re = rr * cos(tt);
    out.im = rr * sin(tt);
    // Relative error of the root is about a d-th of the relative ball width.
    out.rad = rr * (z.rad / lo + detail::slack_unit() * 64);
    detail::absorb_rounding(out);
    return out;
}

}  // namespace

std::vector<ComplexBox> numeric_substitute(const std::vector<Rat>& coeffs, const BoxMat2& T) {
    const std::size_t n = coeffs.size();
    std::vector<std::vector<ComplexBox>> pow1(n), pow2(n);
    pow1[0] = {b_exact(Rat(1))};
    pow2[0] = {b_exact(Rat(1))};
    for (std::size_t k = 1; k < n; ++k) {
        auto step = [k](const std::vector<ComplexBox>& prev, const ComplexBox& u, const ComplexBox& v) {
            std::vector<ComplexBox> cur(k + 1, b_exact(Rat(0)));
            for (std::size_t j = 0; j < prev.size(); ++j) {
                cur[j] = b_add(cur[j], b_mul(prev[j], u));
                cur[j + 1] = b_add(cur[j + 1], b_mul(prev[j], v));
            }
            return cur;
        };
        pow1[k] = step(pow1[k - 1], T.t1, T.t2);
        pow2[k] = step(pow2[k - 1], T.t3, T.t4);
    }
    std::vector<ComplexBox> out(n, b_exact(Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs[i] == 0) continue;
        ComplexBox ci = b_exact(coeffs[i]);
        const auto& a = pow1[n - 1 - i];
        const auto& b = pow2[i];
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                out[j + k] = b_add(out[j + k], b_mul(ci, b_mul(a[j], b[k])));
    }
    return out;
}

PGLLiftSet pgl_lifted_automorphisms(const BinaryForm& F, int precision_bits, const Int& height_bound) {
    const int d = F.degree();
    BinaryForm prim = F.primitive().form;
    std::vector<MobiusElement> pgl = pgl_automorphisms_numeric(prim, precision_bits);

    const std::vector<Rat>& pc = prim.coeffs();
    std::size_t ref = 0;
    for (std::size_t i = 1; i < pc.size(); ++i) {
        Rat best = pc[ref] < 0 ? Rat(-pc[ref]) : pc[ref];
        Rat cur = pc[i] < 0 ? Rat(-pc[i]) : pc[i];
        if (cur > best) ref = i;
    }

    std::vector<ComplexBox> mus = roots_of_unity(d);
    PGLLiftSet out;

    for (const MobiusElement& e : pgl) {
        std::vector<ComplexBox> sub = numeric_substitute(pc, e.matrix);
        // F_{lambda T} = lambda^d F_T = F requires lambda^d = F[ref]/F_T[ref].
        ComplexBox kappa = b_div(b_exact(pc[ref]), sub[ref]);
        ComplexBox lambda0 = principal_root(kappa, d);

        PGLLift lift;
        lift.base = BoxMat2{b_mul(lambda0, e.matrix.t1), b_mul(lambda0, e.matrix.t2),
                            b_mul(lambda0, e.matrix.t3), b_mul(lambda0, e.matrix.t4)};
        for (const ComplexBox& mu : mus) {
            ComplexBox lam = b_mul(lambda0, mu);
            const ComplexBox* entries[4] = {&e.matrix.t1, &e.matrix.t2, &e.matrix.t3, &e.matrix.t4};
            Rat vals[4];
            ComplexBox scaled_entries[4];
            bool all = true;
            for (int i = 0; i < 4 && all; ++i) {
                scaled_entries[i] = b_mul(lam, *entries[i]);
                auto rec = rational_reconstruct(scaled_entries[i], height_bound);
                if (!rec) {
                    all = false;
                    // A plausibly real entry that failed reconstruction may
                    // just exceed the height bound.
                    if (boost::multiprecision::fabs(scaled_entries[i].im) <= scaled_entries[i].rad)
                        out.height_bound_exceeded = true;
                } else {
                    vals[i] = *rec;
                }
            }
            if (!all) continue;
            Mat2Q cand(vals[0], vals[1], vals[2], vals[3]);
            if (cand.det() != 0 && verify_automorphism(prim, cand)) {
                lift.exact = cand;
                lift.base = BoxMat2{scaled_entries[0], scaled_entries[1], scaled_entries[2],
                                    scaled_entries[3]};
                break;
            }
        }
        out.lifts.push_back(std::move(lift));
    }
    return out;
}

AutGroupResult rational_automorphisms_bruteforce(const BinaryForm& F, int precision_bits,
                                                 const Int& height_bound) {
    const int d = F.degree();
    BinaryForm prim = F.primitive().form;
    PGLLiftSet lifted = pgl_lifted_automorphisms(prim, precision_bits, height_bound);

    std::vector<Mat2Q> found;
    for (const PGLLift& lift : lifted.lifts) {
        if (!lift.exact) continue;
        found.push_back(*lift.exact);
        if (d % 2 == 0) found.push_back(-*lift.exact);  // mu_d^{d/2} = -1 lift
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    AutGroupResult out;
    out.elements = std::move(found);
    out.verified = true;
    out.height_bound_exceeded = lifted.height_bound_exceeded;
    if (out.elements.empty() || !is_group(out.elements))
        throw Error("internal: brute-force automorphism set is not a group");
    out.tag = classify_group(out.elements);
    out.generators = out.elements;  // a generating set; minimality not needed
    return out;
}

}  // namespace binform
