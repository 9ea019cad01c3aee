#include "binform/roots.hpp"

#include "ball.hpp"
#include "intpoly.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <optional>

namespace binform {

bool ComplexBox::contains_zero() const { return detail::mag_lower(*this) <= 0; }

std::string ComplexBox::str(unsigned digits) const {
    std::string s = re.str(digits);
    if (!(im == 0)) s += (im < 0 ? " - " : " + ") + boost::multiprecision::abs(im).str(digits) + "*i";
    return s + " (+/- " + rad.str(6) + ")";
}

namespace {

using detail::ZPoly;

struct PairedRoots {
    std::vector<std::size_t> real_idx;  // ascending root order
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (upper half, lower half)
};

// Certified strict comparison of real ball values; nullopt when the balls
// overlap.
std::optional<bool> ball_greater(const NReal& a, const NReal& ra, const NReal& b, const NReal& rb) {
    if (a - ra > b + rb) return true;
    if (b - rb > a + ra) return false;
    return std::nullopt;
}

// Match discs against the exact isolating intervals, snap the matched discs
// onto the real axis, and conjugate-pair the rest. nullopt = escalate.
std::optional<PairedRoots> classify_discs(std::vector<ComplexBox>& boxes, const SturmChain& sturm,
                                          std::vector<RootInterval> intervals) {
    using boost::multiprecision::fabs;
    const std::size_t n = boxes.size();

    if (n > 1) {
        // Refine intervals below the smallest gap between discs, so each
        // interval can overlap at most one disc.
        NReal min_gap = -1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                // b_sub folds both radii into the result, so mag_lower is
                // already the gap between the disc boundaries.
                NReal gap = detail::mag_lower(detail::b_sub(boxes[i], boxes[j]));
                if (min_gap < 0 || gap < min_gap) min_gap = gap;
            }
        if (!(min_gap > 0)) return std::nullopt;
        double g = min_gap.convert_to<double>();
        if (!(g > 0)) return std::nullopt;
        Rat width = Rat(g) / 4;
        for (auto& iv : intervals) sturm.refine(iv, width);
    }

    PairedRoots out;
    std::vector<bool> used(n, false);
    for (const auto& iv : intervals) {
        NReal lo = NReal(num(iv.lo)) / NReal(den(iv.lo));
        NReal hi = NReal(num(iv.hi)) / NReal(den(iv.hi));
        NReal pad = (fabs(lo) + fabs(hi) + 1) * detail::slack_unit();
        lo -= pad;
        hi += pad;
        int found = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            bool axis = fabs(boxes[i].im) <= boxes[i].rad;
            bool overlap = boxes[i].re + boxes[i].rad >= lo && boxes[i].re - boxes[i].rad <= hi;
            if (axis && overlap) {
                if (found >= 0) return std::nullopt;
                found = static_cast<int>(i);
            }
        }
        if (found < 0) return std::nullopt;
        std::size_t fi = static_cast<std::size_t>(found);
        used[fi] = true;
        if (iv.exact()) {
            boxes[fi] = detail::b_exact(iv.lo);  // exact rational root
        } else {
            boxes[fi].rad += fabs(boxes[fi].im);
            boxes[fi].im = 0;
        }
        out.real_idx.push_back(fi);
    }

    std::vector<bool> paired = used;
    for (std::size_t i = 0; i < n; ++i) {
        if (paired[i]) continue;
        if (!(fabs(boxes[i].im) > boxes[i].rad)) return std::nullopt;  // axis state undecided
        if (boxes[i].im < 0) continue;
        ComplexBox conj = detail::b_conj(boxes[i]);
        int mate = -1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || paired[j]) continue;
            // Potential overlap of the conjugated disc with disc j; the
            // conjugate root must land in exactly one disc.
            if (!(detail::mag_lower(detail::b_sub(conj, boxes[j])) > 0)) {
                if (mate >= 0) return std::nullopt;
                mate = static_cast<int>(j);
            }
        }
        if (mate < 0) return std::nullopt;
        std::size_t mj = static_cast<std::size_t>(mate);
        if (!(boxes[mj].im < 0)) return std::nullopt;
        paired[i] = paired[mj] = true;
        out.pairs.emplace_back(i, mj);
    }
    for (bool u : paired)
        if (!u) return std::nullopt;
    return out;
}

// ---------------------------------------------------------------------------
// Precision-templated refinement kernel: Aberth iteration plus Weierstrass
// inclusion discs. The union of the discs D(z_i, d*|W_i|) contains every
// root, and pairwise disjoint discs contain exactly one root each.
// ---------------------------------------------------------------------------

template <unsigned Bits>
struct Kernel {
    using R = boost::multiprecision::number<
        boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>,
        boost::multiprecision::et_off>;

    struct C {
        R re{0}, im{0};
    };

    static C add(const C& a, const C& b) { return {a.re + b.re, a.im + b.im}; }
    static C sub(const C& a, const C& b) { return {a.re - b.re, a.im - b.im}; }
    static C mul(const C& a, const C& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    static C div(const C& a, const C& b) {
        R d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    static R abs(const C& a) {
        using boost::multiprecision::sqrt;
        return sqrt(a.re * a.re + a.im * a.im);
    }

    static R eps() { return boost::multiprecision::ldexp(R(1), -static_cast<int>(Bits) + 4); }

    struct Disc {
        C z;
        R rad;
    };

    // Horner evaluation with a coarse running error bound; generous constants
    // on every step since only |p| + err is ever used, upward.
    static void eval_with_error(const std::vector<C>& cf, const C& z, C& val, R& err) {
        R az = abs(z) * (1 + eps());
        val = cf.back();
        err = abs(val) * eps();
        for (std::size_t k = cf.size() - 1; k-- > 0;) {
            val = add(mul(val, z), cf[k]);
            err = err * az + (abs(val) + abs(cf[k])) * eps() * 8;
        }
    }

    static C eval_plain(const std::vector<C>& cf, const C& z) {
        C val = cf.back();
        for (std::size_t k = cf.size() - 1; k-- > 0;) val = add(mul(val, z), cf[k]);
        return val;
    }

    static std::optional<std::vector<Disc>> solve(const ZPoly& f) {
        const int d = detail::deg(f);
        std::vector<C> cf, cfd;
        cf.reserve(f.size());
        for (const Int& c : f) cf.push_back({R(c), R(0)});
        for (std::size_t i = 1; i < f.size(); ++i) cfd.push_back({R(f[i] * Int(i)), R(0)});

        if (d == 1) {
            C root = div(C{-cf[0].re, -cf[0].im}, cf[1]);
            R rad = (abs(root) + 1) * eps() * 16;
            return std::vector<Disc>{{root, rad}};
        }

        R lead = abs(cf.back());
        R maxc = 0;
        for (const C& c : cf) maxc = std::max(maxc, abs(c));
        R radius = 1 + maxc / lead;

        std::vector<C> z(static_cast<std::size_t>(d));
        const double tau = 6.283185307179586;
        for (int i = 0; i < d; ++i) {
            double ang = tau * (i + 0.2628) / d + 0.4;
            z[static_cast<std::size_t>(i)] = {radius * R(std::cos(ang)), radius * R(std::sin(ang))};
        }

        const R target = boost::multiprecision::ldexp(R(1), -static_cast<int>(Bits) + 12);
        const R tiny = boost::multiprecision::ldexp(R(1), -static_cast<int>(Bits) / 2);
        const int max_iters = 80 + 40 * d;
        for (int it = 0; it < max_iters; ++it) {
            R worst = 0;
            for (int i = 0; i < d; ++i) {
                C zi = z[static_cast<std::size_t>(i)];
                C p = eval_plain(cf, zi);
                C dp = eval_plain(cfd, zi);
                if (abs(p) == 0) continue;
                if (abs(dp) == 0) {
                    z[static_cast<std::size_t>(i)].re += tiny;
                    worst = 1;
                    continue;
                }
                C nwt = div(p, dp);
                C s{R(0), R(0)};
                for (int j = 0; j < d; ++j) {
                    if (j == i) continue;
                    C diff = sub(zi, z[static_cast<std::size_t>(j)]);
                    if (abs(diff) == 0) diff.re = tiny;
                    s = add(s, div(C{R(1), R(0)}, diff));
                }
                C denom = sub(C{R(1), R(0)}, mul(nwt, s));
                C corr = abs(denom) > tiny ? div(nwt, denom) : nwt;
                z[static_cast<std::size_t>(i)] = sub(zi, corr);
                worst = std::max(worst, abs(corr) / (abs(zi) + 1));
            }
            if (worst < target) break;
        }

        std::vector<Disc> out(static_cast<std::size_t>(d));
        R lead_lo = lead * (1 - eps() * 8);
        for (int i = 0; i < d; ++i) {
            C zi = z[static_cast<std::size_t>(i)];
            C val;
            R err;
            eval_with_error(cf, zi, val, err);
            R denom = lead_lo;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                denom *= abs(sub(zi, z[static_cast<std::size_t>(j)])) * (1 - eps() * 8);
            }
            if (!(denom > 0)) return std::nullopt;
            R rad = R(d) * (abs(val) + err) / denom * (1 + eps() * 64);
            out[static_cast<std::size_t>(i)] = {zi, rad};
        }

        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                const auto &di = out[static_cast<std::size_t>(i)], &dj = out[static_cast<std::size_t>(j)];
                if (!(abs(sub(di.z, dj.z)) * (1 - eps() * 8) > di.rad + dj.rad)) return std::nullopt;
            }
        return out;
    }

    static ComplexBox to_box(const Disc& disc) {
        ComplexBox out;
        out.re = NReal(disc.z.re);
        out.im = NReal(disc.z.im);
        out.rad = NReal(disc.rad);
        detail::absorb_rounding(out);
        out.rad += (boost::multiprecision::fabs(out.re) + boost::multiprecision::fabs(out.im) + 1) *
                   detail::slack_unit();
        return out;
    }
};

// Exact test for the chi = 0 labeling tie: both conjugate pairs share one
// real part iff the depressed quartic is biquadratic with both roots in
// t = x^2 real and negative.
bool quartic_pairs_tied(const BinaryForm& F) {
    const Rat &a4 = F[0], &a3 = F[1], &a2 = F[2], &a1 = F[3], &a0 = F[4];
    Rat B = a3 / a4, C = a2 / a4, D = a1 / a4, E = a0 / a4;
    Rat s = -B / 4;
    Rat s2 = s * s, s3 = s2 * s, s4 = s2 * s2;
    Rat p = C + 6 * s2 + 3 * s * B;
    Rat q = D + 2 * s * C + 3 * s2 * B + 4 * s3;
    Rat r = E + s * D + s2 * C + s3 * B + s4;
    if (q != 0) return false;
    return p * p - 4 * r > 0 && p > 0 && r > 0;
}

// One ladder step at a fixed precision.
template <unsigned Bits>
std::optional<std::vector<ComplexBox>> attempt(const ZPoly& f, const SturmChain& sturm,
                                               const std::vector<RootInterval>& intervals,
                                               bool bean_quartic, bool tie) {
    auto discs = Kernel<Bits>::solve(f);
    if (!discs) return std::nullopt;
    std::vector<ComplexBox> boxes;
    boxes.reserve(discs->size());
    for (const auto& d : *discs) boxes.push_back(Kernel<Bits>::to_box(d));

    auto classified = classify_discs(boxes, sturm, intervals);
    if (!classified) return std::nullopt;
    const auto& cls = *classified;

    std::vector<std::size_t> reals(cls.real_idx.rbegin(), cls.real_idx.rend());  // descending
    std::vector<std::pair<std::size_t, std::size_t>> pairs = cls.pairs;

    if (pairs.size() > 1) {
        const bool im_tiebreak_allowed = !bean_quartic || tie;
        for (std::size_t a = 0; a < pairs.size(); ++a)
            for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                const ComplexBox& pa = boxes[pairs[a].first];
                const ComplexBox& pb = boxes[pairs[b].first];
                std::optional<bool> a_first;
                if (bean_quartic && tie) {
                    a_first = ball_greater(pa.im, pa.rad, pb.im, pb.rad);
                } else {
                    a_first = ball_greater(pa.re, pa.rad, pb.re, pb.rad);
                    if (!a_first && im_tiebreak_allowed)
                        a_first = ball_greater(pa.im, pa.rad, pb.im, pb.rad);
                }
                if (!a_first) return std::nullopt;
                if (!*a_first) std::swap(pairs[a], pairs[b]);
            }
    }

    std::vector<ComplexBox> ordered;
    if (bean_quartic) {
        const int chi = static_cast<int>(reals.size());
        if (chi == 4) {
            for (std::size_t i : reals) ordered.push_back(boxes[i]);
        } else if (chi == 2) {
            ordered.push_back(boxes[reals[0]]);
            ordered.push_back(boxes[reals[1]]);
            ordered.push_back(boxes[pairs[0].first]);  // Im theta3 > 0
            ordered.push_back(boxes[pairs[0].second]);
        } else {
            ordered.push_back(boxes[pairs[0].first]);   // Im theta1 > 0
            ordered.push_back(boxes[pairs[0].second]);
            ordered.push_back(boxes[pairs[1].second]);  // Im theta3 < 0
            ordered.push_back(boxes[pairs[1].first]);
        }
    } else {
        for (std::size_t i : reals) ordered.push_back(boxes[i]);
        for (const auto& [up, down] : pairs) {
            ordered.push_back(boxes[up]);
            ordered.push_back(boxes[down]);
        }
    }
    return ordered;
}

}  // namespace

LabeledRoots complex_roots(const BinaryForm& F, int precision_bits) {
    const int d = F.degree();
    if (d < 2 || d > 6) throw UnsupportedDegree();
    if (discriminant(F) == 0) throw DegenerateForm();

    std::vector<Int> c = F.primitive_int_coeffs();
    LabeledRoots out;
    out.infinite_root = c[0] == 0;

    ZPoly f(c.rbegin(), c.rend());
    detail::trim(f);
    if (detail::deg(f) < 1) throw Error("form is a power of y");

    SturmChain sturm(f);
    std::vector<RootInterval> intervals = sturm.isolate();
    out.chi = static_cast<int>(intervals.size());

    const bool bean = d == 4 && !out.infinite_root;
    const bool tie = bean && out.chi == 0 && quartic_pairs_tied(F);

    for (int bits : {128, 256, 512, 1024, 2048, 4096}) {
        if (bits < precision_bits) continue;
        std::optional<std::vector<ComplexBox>> got;
        switch (bits) {
            case 128: got = attempt<128>(f, sturm, intervals, bean, tie); break;
            case 256: got = attempt<256>(f, sturm, intervals, bean, tie); break;
            case 512: got = attempt<512>(f, sturm, intervals, bean, tie); break;
            case 1024: got = attempt<1024>(f, sturm, intervals, bean, tie); break;
            case 2048: got = attempt<2048>(f, sturm, intervals, bean, tie); break;
            default: got = attempt<4096>(f, sturm, intervals, bean, tie); break;
        }
        if (got) {
            out.roots = std::move(*got);
            out.bits = bits;
            return out;
        }
    }
    throw PrecisionExhausted();
}

}  // namespace binform
