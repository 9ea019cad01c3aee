#include "binform/autgroup.hpp"

#include "ball.hpp"
#include "binform/cremona.hpp"
#include "binform/factor.hpp"

#include <algorithm>
#include <set>

namespace binform {

std::string to_string(GroupTag tag) {
    switch (tag) {
        case GroupTag::Trivial: return "trivial";
        case GroupTag::C2: return "C2";
        case GroupTag::C3: return "C3";
        case GroupTag::C4: return "C4";
        case GroupTag::C2xC2: return "C2xC2";
        case GroupTag::D3: return "D3";
        case GroupTag::D4: return "D4";
    }
    return "?";
}

std::string to_string(PGLClass::Tag tag) {
    switch (tag) {
        case PGLClass::S3: return "S3";
        case PGLClass::V4: return "V4";
        case PGLClass::D4: return "D4";
        case PGLClass::A4: return "A4";
    }
    return "?";
}

Mat2Q mat_M(const BinaryForm& f) {
    if (f.degree() != 2) throw UnsupportedDegree("mat_M requires a quadratic");
    const Rat &a = f[0], &b = f[1], &c = f[2];
    return Mat2Q(b, 2 * c, -2 * a, -b);
}

Mat2E mat_N(const BinaryForm& f) {
    if (f.degree() != 2) throw UnsupportedDegree("mat_N requires a quadratic");
    Rat d = discriminant(f);
    if (d == 0) throw DegenerateForm("mat_N of a degenerate quadratic");
    const Rat &a = f[0], &b = f[1], &c = f[2];
    QuadExt s = QuadExt::sqrt_of(-3 * d);
    QuadExt scale = QuadExt(Rat(1) / (2 * d));
    return Mat2E(scale * (QuadExt(b) * s - QuadExt(d)), scale * (QuadExt(2 * c) * s),
                 scale * (QuadExt(-2 * a) * s), scale * (QuadExt(-b) * s - QuadExt(d)));
}

Mat2Q mat_T(const BinaryForm& F, const Rat& theta) {
    if (F.degree() != 3) throw UnsupportedDegree("mat_T requires a cubic");
    Rat d = discriminant(F);
    if (d == 0) throw DegenerateForm();
    Mat2Q mj = mat_M(julia_covariant(F, theta));  // throws NotARoot
    Mat2Q mq = mat_M(hessian(F));
    return Rat(-1) / (6 * d) * (mj * mq);
}

Mat2E mat_U(const BinaryForm& f) {
    if (f.degree() != 2) throw UnsupportedDegree("mat_U requires a quadratic");
    Rat d = discriminant(f);
    if (d == 0) throw DegenerateForm("mat_U of a degenerate quadratic");
    QuadExt s = QuadExt::sqrt_of(d < 0 ? Rat(-d) : d);
    Mat2Q m = mat_M(f);
    return Mat2E(QuadExt(m.t1) / s, QuadExt(m.t2) / s, QuadExt(m.t3) / s, QuadExt(m.t4) / s);
}

std::optional<Mat2Q> to_rational(const Mat2E& m) {
    if (!m.t1.is_rational() || !m.t2.is_rational() || !m.t3.is_rational() || !m.t4.is_rational())
        return std::nullopt;
    return Mat2Q(m.t1.rational_value(), m.t2.rational_value(), m.t3.rational_value(),
                 m.t4.rational_value());
}

bool is_group(const std::vector<Mat2Q>& elements) {
    std::set<Mat2Q> s(elements.begin(), elements.end());
    for (const auto& a : elements) {
        if (a.det() == 0) return false;
        if (!s.count(a.inverse())) return false;
        for (const auto& b : elements)
            if (!s.count(a * b)) return false;
    }
    return s.count(Mat2Q::identity()) > 0;
}

namespace {

int element_order(const Mat2Q& m) {
    Mat2Q acc = m;
    for (int k = 1; k <= 8; ++k) {
        if (acc == Mat2Q::identity()) return k;
        acc = acc * m;
    }
    return 0;
}

std::vector<Mat2Q> sorted_elements(std::vector<Mat2Q> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

AutGroupResult finish(GroupTag tag, std::vector<Mat2Q> gens, std::vector<Mat2Q> elems,
                      const BinaryForm& prim) {
    AutGroupResult out;
    out.tag = tag;
    out.generators = std::move(gens);
    out.elements = sorted_elements(std::move(elems));
    for (const auto& e : out.elements)
        if (!verify_automorphism(prim, e))
            throw Error("internal: classified automorphism failed exact verification");
    if (!is_group(out.elements)) throw Error("internal: automorphism set is not closed");
    out.verified = true;
    return out;
}

}  // namespace

GroupTag classify_group(const std::vector<Mat2Q>& elements) {
    switch (elements.size()) {
        case 1: return GroupTag::Trivial;
        case 2: return GroupTag::C2;
        case 3: return GroupTag::C3;
        case 4: {
            for (const auto& e : elements)
                if (element_order(e) == 4) return GroupTag::C4;
            return GroupTag::C2xC2;
        }
        case 6: return GroupTag::D3;
        case 8: return GroupTag::D4;
        default: throw Error("unexpected automorphism group order " + std::to_string(elements.size()));
    }
}

AutGroupResult aut_cubic(const BinaryForm& F) {
    if (F.degree() != 3) throw UnsupportedDegree("aut_cubic requires degree 3");
    BinaryForm prim = F.primitive().form;
    if (discriminant(prim) == 0) throw DegenerateForm();

    Mat2Q S = leading_shift(prim);
    BinaryForm G = substitute(prim, S);
    Rat disc = discriminant(G);  // equals disc(prim): det S = +-1, weight 6

    std::vector<Rat> thetas;
    for (const ProjRootQ& r : rational_proj_roots(G)) {
        if (r.infinite) throw Error("internal: shifted cubic still has a root at infinity");
        thetas.push_back(r.value);
    }

    std::vector<Mat2Q> elems{Mat2Q::identity()};
    std::vector<Mat2Q> gens;
    GroupTag tag = GroupTag::Trivial;

    auto rational_N = [&]() {
        auto nq = to_rational(mat_N(hessian(G)));
        if (!nq) throw Error("internal: N expected to be rational");
        return *nq;
    };

    if (thetas.empty()) {
        if (is_square(disc)) {
            Mat2Q N = rational_N();
            elems.push_back(N);
            elems.push_back(N * N);
            gens = {N};
            tag = GroupTag::C3;
        }
    } else if (thetas.size() == 1) {
        Mat2Q T = mat_T(G, thetas[0]);
        elems.push_back(T);
        gens = {T};
        tag = GroupTag::C2;
    } else if (thetas.size() == 3) {
        Mat2Q N = rational_N();
        elems.push_back(N);
        elems.push_back(N * N);
        for (const Rat& th : thetas) elems.push_back(mat_T(G, th));
        gens = {N, mat_T(G, thetas[0])};
        tag = GroupTag::D3;
    } else {
        throw Error("internal: cubic with two rational roots");
    }

    // Aut F = S Aut(F_S) S^{-1}.
    Mat2Q Sinv = S.inverse();
    for (auto& e : elems) e = S * e * Sinv;
    for (auto& g : gens) g = S * g * Sinv;
    return finish(tag, std::move(gens), std::move(elems), prim);
}

AutGroupResult aut_quartic(const BinaryForm& F) {
    if (F.degree() != 4) throw UnsupportedDegree("aut_quartic requires degree 4");
    BinaryForm prim = F.primitive().form;
    if (discriminant(prim) == 0) throw DegenerateForm();

    std::vector<SigFactor> sig = significant_quadratic_factors(prim);
    std::vector<SigFactor> good;
    for (const auto& s : sig)
        if (s.rationally_good) good.push_back(s);

    const Mat2Q I = Mat2Q::identity();
    std::vector<Mat2Q> elems{I, -I};
    std::vector<Mat2Q> gens{-I};
    GroupTag tag = GroupTag::C2;

    auto rational_U = [](const SigFactor& s) {
        auto u = to_rational(mat_U(s.form));
        if (!u) throw Error("internal: U expected to be rational for a rationally good factor");
        return *u;
    };

    if (good.size() == 1) {
        Mat2Q U = rational_U(good[0]);
        elems.push_back(U);
        elems.push_back(-U);
        gens = {U, -I};
        tag = good[0].disc < 0 ? GroupTag::C4 : GroupTag::C2xC2;
    } else if (good.size() == 3) {
        for (const auto& s : good) {
            Mat2Q U = rational_U(s);
            elems.push_back(U);
            elems.push_back(-U);
        }
        gens = {rational_U(good[0]), rational_U(good[1])};
        tag = GroupTag::D4;
    } else if (!good.empty()) {
        throw Error("internal: exactly two rationally good significant factors cannot occur");
    }

    return finish(tag, std::move(gens), std::move(elems), prim);
}

PGLClass aut_pgl_class(const BinaryForm& F) {
    const int d = F.degree();
    if (d != 3 && d != 4) throw UnsupportedDegree("PGL class requires degree 3 or 4");
    if (discriminant(F) == 0) throw DegenerateForm();
    if (d == 3) return {PGLClass::S3, 6};
    if (invariant_I(F) == 0) return {PGLClass::A4, 12};
    if (invariant_J(F) == 0) return {PGLClass::D4, 8};
    return {PGLClass::V4, 4};
}

namespace {

// Real part of a ball known (by theory) to enclose a real value.
ComplexBox realify(const ComplexBox& b) {
    ComplexBox out = b;
    out.rad += boost::multiprecision::fabs(out.im);
    out.im = 0;
    return out;
}

ComplexBox quadext_to_ball(const QuadExt& v) {
    ComplexBox base = detail::b_exact(v.base());
    if (v.is_rational()) return base;
    ComplexBox coeff = detail::b_exact(v.coeff());
    Int m = v.radicand();
    ComplexBox root;
    if (m > 0) {
        root = detail::b_sqrt_pos(detail::b_exact(Rat(m)));
    } else {
        root = detail::b_muli(detail::b_sqrt_pos(detail::b_exact(Rat(-m))));
    }
    return detail::b_add(base, detail::b_mul(coeff, root));
}

bool ball_matches(const BoxMat2& a, const Mat2E& exact) {
    const QuadExt* es[4] = {&exact.t1, &exact.t2, &exact.t3, &exact.t4};
    const ComplexBox* bs[4] = {&a.t1, &a.t2, &a.t3, &a.t4};
    for (int i = 0; i < 4; ++i) {
        ComplexBox e = quadext_to_ball(*es[i]);
        if (detail::mag_lower(detail::b_sub(e, *bs[i])) > 0) return false;  // certainly different
    }
    return true;
}

BoxMat2 negate(const BoxMat2& m) {
    return {detail::b_neg(m.t1), detail::b_neg(m.t2), detail::b_neg(m.t3), detail::b_neg(m.t4)};
}

}  // namespace

namespace {

std::vector<RealAutElement> real_quartic_attempt(const BinaryForm& prim, const CremonaSet& cre,
                                                 const std::vector<SigFactor>& sig);

}  // namespace

std::vector<RealAutElement> aut_real_quartic(const BinaryForm& F, int precision_bits) {
    if (F.degree() != 4) throw UnsupportedDegree("aut_real_quartic requires degree 4");
    BinaryForm prim = F.primitive().form;
    if (discriminant(prim) == 0) throw DegenerateForm();

    std::vector<SigFactor> sig = significant_quadratic_factors(prim);
    for (int bits = std::max(precision_bits, 128); bits <= kMaxPrecisionBits; bits *= 2) {
        CremonaSet cre = cremona_covariants_numeric(prim, bits);
        try {
            return real_quartic_attempt(prim, cre, sig);
        } catch (const PrecisionExhausted&) {
            continue;  // margins of the derived balls were too wide; escalate
        }
    }
    throw PrecisionExhausted("real automorphisms not certified at maximum precision");
}

namespace {

std::vector<RealAutElement> real_quartic_attempt(const BinaryForm& prim, const CremonaSet& cre,
                                                 const std::vector<SigFactor>& sig) {
    const int chi = cre.chi;

    std::vector<RealAutElement> out;
    auto push_identity = [&](bool negated) {
        RealAutElement e;
        ComplexBox one = detail::b_exact(Rat(negated ? -1 : 1));
        ComplexBox zero = detail::b_exact(Rat(0));
        e.numeric = {one, zero, zero, negated ? one : detail::b_exact(Rat(1))};
        e.exact = negated ? -to_quadext(Mat2Q::identity()) : to_quadext(Mat2Q::identity());
        e.exact_verified = true;
        out.push_back(std::move(e));
    };
    push_identity(false);
    push_identity(true);

    // Which covariants contribute, per the chi case split.
    std::vector<std::pair<int, bool>> wanted;  // (index, multiply by mu4)
    if (chi == 4) {
        for (int i = 0; i < 3; ++i) wanted.emplace_back(i, false);
    } else if (chi == 2) {
        wanted.emplace_back(0, false);
    } else {
        wanted.emplace_back(0, false);
        wanted.emplace_back(1, true);
        wanted.emplace_back(2, true);
    }

    for (auto [idx, needs_mu4] : wanted) {
        const CremonaCovariant& c = cre.cov[static_cast<std::size_t>(idx)];
        // |D| as a certified positive real ball.
        ComplexBox d_real = realify(c.disc);
        bool d_negative = d_real.re < 0;
        if (d_negative) d_real = detail::b_neg(d_real);
        ComplexBox scale = detail::b_sqrt_pos(d_real);

        // M entries of the covariant; for the mu4 elements the entries are
        // purely imaginary and i*M is real.
        ComplexBox two = detail::b_exact(Rat(2));
        BoxMat2 m{c.b, detail::b_mul(two, c.c), detail::b_neg(detail::b_mul(two, c.a)),
                  detail::b_neg(c.b)};
        if (needs_mu4) m = {detail::b_muli(m.t1), detail::b_muli(m.t2), detail::b_muli(m.t3),
                            detail::b_muli(m.t4)};
        BoxMat2 u{detail::b_div(m.t1, scale), detail::b_div(m.t2, scale),
                  detail::b_div(m.t3, scale), detail::b_div(m.t4, scale)};
        u = {realify(u.t1), realify(u.t2), realify(u.t3), realify(u.t4)};

        RealAutElement e;
        e.numeric = u;
        e.mu4 = needs_mu4 || d_negative;
        e.covariant_index = idx;
        for (const SigFactor& s : sig) {
            Mat2E cand = mat_U(s.form);
            for (const Mat2E& m2 : {cand, -cand}) {
                if (ball_matches(u, m2) && verify_automorphism(prim, m2)) {
                    e.exact = m2;
                    e.exact_verified = true;
                    break;
                }
            }
            if (e.exact) break;
        }
        out.push_back(e);

        RealAutElement neg = e;
        neg.numeric = negate(e.numeric);
        if (neg.exact) neg.exact = -*neg.exact;
        out.push_back(std::move(neg));
    }
    return out;
}

}  // namespace

}  // namespace binform
