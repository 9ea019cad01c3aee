#include "binform/fields.hpp"

#include "binform/covariants.hpp"
#include "binform/factor.hpp"
#include "intpoly.hpp"

#include <algorithm>

namespace binform {

std::string GaloisClass::str() const {
    switch (tag) {
        case CubicSplit: return "split";
        case CubicC2Red: return "C2 (reducible)";
        case CubicC3: return "C3";
        case CubicS3: return "S3";
        case QuarticS4: return "S4";
        case QuarticA4: return "A4";
        case QuarticD4: return "D4";
        case QuarticC4: return "C4";
        case QuarticV4: return "V4";
        case QuarticSplit: return "split";
        case QuarticQuadTwoLin: return "quadratic x linear x linear";
        case QuarticTwoQuad: return "quadratic x quadratic";
        case QuarticLinCubic: return "linear x cubic";
    }
    return "?";
}

namespace {

struct QuarticAnalysis {
    GaloisClass cls;
    // Square classes whose square roots generate the quadratic subfields of
    // the splitting field (complete for every quartic Galois class; see the
    // per-case derivations below).
    std::vector<Rat> quad_subfield_classes;
    bool mu4_in_F() const {
        for (const Rat& c : quad_subfield_classes)
            if (c != 0 && is_square(-c)) return true;
        return false;
    }
};

// Add a square class if non-zero and not already represented.
void add_class(std::vector<Rat>& classes, const Rat& c) {
    if (c == 0 || is_square(c)) return;
    for (const Rat& e : classes)
        if (same_square_class(e, c)) return;
    classes.push_back(c);
}

void close_under_products(std::vector<Rat>& classes) {
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) add_class(classes, classes[i] * classes[j]);
}

// Rational roots of the resolvent cubic y^3 - c y^2 + (bd - 4e) y
// - (b^2 e - 4 c e + d^2) of the monic quartic x^4 + bx^3 + cx^2 + dx + e;
// its roots are the pair sums theta_i theta_j + theta_k theta_l. Same
// discriminant as the quartic, so squarefree here.
std::vector<Rat> resolvent_rational_roots(const Rat& b, const Rat& c, const Rat& d, const Rat& e) {
    BinaryForm res({Rat(1), -c, b * d - 4 * e, -(b * b * e - 4 * c * e + d * d)});
    std::vector<Rat> roots;
    for (const ProjRootQ& r : rational_proj_roots(res))
        if (!r.infinite) roots.push_back(r.value);
    return roots;
}

QuarticAnalysis analyze_quartic(const BinaryForm& F) {
    BinaryForm prim = F.primitive().form;
    Rat disc = discriminant(prim);
    if (disc == 0) throw DegenerateForm();

    FormFactorization fac = factor_over_Z(prim);
    std::vector<BinaryForm> flat = fac.flatten();
    std::vector<int> degs;
    for (const auto& f : flat) degs.push_back(f.degree());
    std::sort(degs.begin(), degs.end());

    QuarticAnalysis out;
    if (degs == std::vector<int>{1, 1, 1, 1}) {
        out.cls = {GaloisClass::QuarticSplit, 1};
        return out;
    }
    if (degs == std::vector<int>{1, 1, 2}) {
        for (const auto& f : flat)
            if (f.degree() == 2) add_class(out.quad_subfield_classes, discriminant(f));
        out.cls = {GaloisClass::QuarticQuadTwoLin, 2};
        return out;
    }
    if (degs == std::vector<int>{2, 2}) {
        Rat d1 = discriminant(flat[0]), d2 = discriminant(flat[1]);
        add_class(out.quad_subfield_classes, d1);
        add_class(out.quad_subfield_classes, d2);
        add_class(out.quad_subfield_classes, d1 * d2);
        int deg = same_square_class(d1, d2) ? 2 : 4;
        out.cls = {GaloisClass::QuarticTwoQuad, deg};
        return out;
    }
    if (degs == std::vector<int>{1, 3}) {
        const BinaryForm& cubic = flat[0].degree() == 3 ? flat[0] : flat[1];
        Rat dc = discriminant(cubic);
        // disc(F) and disc(cubic) agree up to the square of a resultant, so
        // either generates the same quadratic subfield.
        bool c3 = is_square(dc);
        if (!c3) add_class(out.quad_subfield_classes, dc);
        out.cls = {GaloisClass::QuarticLinCubic, c3 ? 3 : 6};
        return out;
    }

    // Irreducible quartic; the leading coefficient cannot vanish.
    Rat a4 = prim.lead();
    Rat b = prim[1] / a4, c = prim[2] / a4, d = prim[3] / a4, e = prim[4] / a4;
    std::vector<Rat> zs = resolvent_rational_roots(b, c, d, e);

    if (zs.empty()) {
        if (is_square(disc)) {
            // A4 has no index-2 subgroup: no quadratic subfield at all.
            out.cls = {GaloisClass::QuarticA4, 12};
        } else {
            add_class(out.quad_subfield_classes, disc);
            out.cls = {GaloisClass::QuarticS4, 24};
        }
        return out;
    }
    if (zs.size() == 3) {
        // V4: each pairing contributes theta_i+theta_j-theta_k-theta_l and
        // theta_i theta_j - theta_k theta_l, whose squares are rational.
        for (const Rat& z : zs) {
            add_class(out.quad_subfield_classes, z * z - 4 * e);
            add_class(out.quad_subfield_classes, b * b - 4 * (c - z));
        }
        close_under_products(out.quad_subfield_classes);
        out.cls = {GaloisClass::QuarticV4, 4};
        return out;
    }
    if (zs.size() != 1) throw Error("internal: resolvent cubic with two rational roots");

    // One rational resolvent root: C4 or D4, separated by the standard
    // squares-in-Q(sqrt(disc)) test (Kappe & Warren, Amer. Math. Monthly 96,
    // 1989): the group is C4 iff both z^2 - 4e and b^2 - 4(c - z) become
    // squares over Q(sqrt(disc)).
    const Rat z = zs[0];
    auto square_in_Qsqrt_disc = [&](const Rat& r) {
        return r == 0 || is_square(r) || is_square(r * disc);
    };
    Rat dv = z * z - 4 * e;
    Rat du = b * b - 4 * (c - z);
    add_class(out.quad_subfield_classes, disc);
    add_class(out.quad_subfield_classes, dv);
    add_class(out.quad_subfield_classes, du);
    close_under_products(out.quad_subfield_classes);
    if (square_in_Qsqrt_disc(dv) && square_in_Qsqrt_disc(du)) {
        // C4: the unique quadratic subfield is Q(sqrt(disc)).
        out.quad_subfield_classes.clear();
        add_class(out.quad_subfield_classes, disc);
        out.cls = {GaloisClass::QuarticC4, 4};
    } else {
        out.cls = {GaloisClass::QuarticD4, 8};
    }
    return out;
}

}  // namespace

GaloisClass cubic_galois(const BinaryForm& F) {
    if (F.degree() != 3) throw UnsupportedDegree("cubic_galois requires degree 3");
    BinaryForm prim = F.primitive().form;
    Rat disc = discriminant(prim);
    if (disc == 0) throw DegenerateForm();

    FormFactorization fac = factor_over_Z(prim);
    std::vector<int> degs;
    for (const auto& f : fac.flatten()) degs.push_back(f.degree());
    std::sort(degs.begin(), degs.end());
    if (degs == std::vector<int>{1, 1, 1}) return {GaloisClass::CubicSplit, 1};
    if (degs == std::vector<int>{1, 2}) return {GaloisClass::CubicC2Red, 2};
    if (is_square(disc)) return {GaloisClass::CubicC3, 3};
    return {GaloisClass::CubicS3, 6};
}

GaloisClass quartic_galois(const BinaryForm& F) {
    if (F.degree() != 4) throw UnsupportedDegree("quartic_galois requires degree 4");
    return analyze_quartic(F).cls;
}

int cubic_line_field_degree(const BinaryForm& F) {
    if (F.degree() != 3) throw UnsupportedDegree("cubic line field requires degree 3");
    BinaryForm prim = F.primitive().form;
    Rat disc = discriminant(prim);
    if (disc == 0) throw DegenerateForm();

    GaloisClass cls = cubic_galois(prim);
    switch (cls.tag) {
        case GaloisClass::CubicSplit:
            return 2;  // K = Q(mu_3)
        case GaloisClass::CubicC2Red: {
            FormFactorization fac = factor_over_Z(prim);
            Rat delta = 0;
            for (const auto& f : fac.flatten())
                if (f.degree() == 2) delta = discriminant(f);
            return is_square(-3 * delta) ? 2 : 4;
        }
        case GaloisClass::CubicC3:
            return 6;  // cyclic cubic fields are totally real, mu_3 missing
        default:
            return is_square(-3 * disc) ? 6 : 12;
    }
}

QuarticFieldDegree quartic_line_field_degree(const BinaryForm& F) {
    if (F.degree() != 4) throw UnsupportedDegree("quartic line field requires degree 4");
    BinaryForm prim = F.primitive().form;
    Rat disc = discriminant(prim);
    if (disc == 0) throw DegenerateForm();
    const bool lines_bound = invariant_I(prim) != 0 && invariant_J(prim) != 0;

    QuarticAnalysis an = analyze_quartic(prim);
    switch (an.cls.tag) {
        case GaloisClass::QuarticS4:
            // mu_4 lies in the splitting field iff disc is minus a square.
            return {is_square(-disc) ? 24 : 48, true, lines_bound};
        case GaloisClass::QuarticA4:
            return {24, true, lines_bound};
        default: {
            int base = an.cls.splitting_degree;
            return {an.mu4_in_F() ? base : 2 * base, true, lines_bound};
        }
    }
}

}  // namespace binform
