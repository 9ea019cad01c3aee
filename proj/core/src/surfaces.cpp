#include "binform/surfaces.hpp"

#include "ball.hpp"
#include "binform/factor.hpp"
#include "binform/fields.hpp"

#include <algorithm>

namespace binform {

namespace {

bool proportional(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) return false;
    BinaryForm pa = a.primitive().form, pb = b.primitive().form;
    return pa == pb || pa == Rat(-1) * pb;
}

}  // namespace

int upsilon(const BinaryForm& F1, const BinaryForm& F2, int precision_bits) {
    if (F1.degree() != F2.degree()) return 0;
    const int d = F1.degree();
    if (d != 3 && d != 4) throw UnsupportedDegree("upsilon requires degree 3 or 4");
    if (discriminant(F1) == 0 || discriminant(F2) == 0) throw DegenerateForm();
    if (d == 3) return 6;
    if (proportional(F1, F2)) return aut_pgl_class(F1).upsilon;
    return cross_mobius_count(F1, F2, precision_bits);
}

int line_count(const BinaryForm& F1, const BinaryForm& F2, int precision_bits) {
    if (F1.degree() != F2.degree()) return 0;
    const int d = F1.degree();
    return d * (d + upsilon(F1, F2, precision_bits));
}

namespace {

// Root bookkeeping: exact rational value when known, plus the degree of the
// irreducible factor the root belongs to.
struct RootInfo {
    HomogPoint point;
    int factor_degree = 0;        // 0: unknown
    int factor_index = -1;        // index into the factorization
    bool rational = false;
};

HomogPoint exact_point(const Rat& u, const Rat& v) {
    HomogPoint p;
    p.exact = true;
    p.u_exact = u;
    p.v_exact = v;
    p.u = detail::b_exact(u);
    p.v = detail::b_exact(v);
    return p;
}

ComplexBox ball_eval_form(const BinaryForm& f, const ComplexBox& u, const ComplexBox& v) {
    const int d = f.degree();
    ComplexBox acc = detail::b_exact(Rat(0));
    for (int i = 0; i <= d; ++i) {
        if (f[i] == 0) continue;
        ComplexBox term = detail::b_exact(f[i]);
        for (int k = 0; k < d - i; ++k) term = detail::b_mul(term, u);
        for (int k = 0; k < i; ++k) term = detail::b_mul(term, v);
        acc = detail::b_add(acc, term);
    }
    return acc;
}

// Field degree of Q(psi_j, psi_k) when cheaply exact; otherwise the bound
// [splitting field : Q].
void root_line_field(const RootInfo& a, const RootInfo& b, bool same_root,
                     const std::vector<BinaryForm>& flat, int splitting_degree, Line& line) {
    line.field_degree_exact = true;
    if (a.rational && b.rational) {
        line.field_degree = 1;
        return;
    }
    if (a.rational || b.rational) {
        const RootInfo& other = a.rational ? b : a;
        if (other.factor_degree > 0) {
            line.field_degree = other.factor_degree;
            return;
        }
    } else if (a.factor_degree > 0 && b.factor_degree > 0) {
        const BinaryForm& fa = flat[static_cast<std::size_t>(a.factor_index)];
        const BinaryForm& fb = flat[static_cast<std::size_t>(b.factor_index)];
        if (same_root) {
            line.field_degree = a.factor_degree;
            return;
        }
        if (a.factor_index == b.factor_index) {
            if (a.factor_degree == 2) {  // both roots of one quadratic
                line.field_degree = 2;
                return;
            }
            if (a.factor_degree == 3) {  // two roots of one cubic span its splitting field
                line.field_degree = is_square(discriminant(fa)) ? 3 : 6;
                return;
            }
            // two roots of an irreducible quartic: bound only
        } else if (a.factor_degree == 2 && b.factor_degree == 2) {
            line.field_degree = same_square_class(discriminant(fa), discriminant(fb)) ? 2 : 4;
            return;
        }
    }
    line.field_degree = splitting_degree;
    line.field_degree_exact = false;  // upper bound only
}

}  // namespace

std::vector<Line> enumerate_lines(const BinaryForm& F, int precision_bits) {
    const int d = F.degree();
    if (d != 3 && d != 4) throw UnsupportedDegree("line enumeration requires degree 3 or 4");
    BinaryForm prim = F.primitive().form;
    if (discriminant(prim) == 0) throw DegenerateForm();

    LabeledRoots lab = complex_roots(prim, precision_bits);
    FormFactorization fac = factor_over_Z(prim);
    std::vector<BinaryForm> flat = fac.flatten();

    // Assemble projective roots with exactness and factor attribution.
    std::vector<RootInfo> roots;
    for (const ComplexBox& r : lab.roots) {
        RootInfo info;
        info.point.exact = false;
        info.point.u = r;
        info.point.v = detail::b_exact(Rat(1));
        // attribute to the unique factor whose value enclosure vanishes
        int hits = 0;
        for (std::size_t fi = 0; fi < flat.size(); ++fi) {
            ComplexBox val = ball_eval_form(flat[fi], info.point.u, info.point.v);
            if (val.contains_zero()) {
                ++hits;
                info.factor_index = static_cast<int>(fi);
                info.factor_degree = flat[fi].degree();
            }
        }
        if (hits != 1) {
            info.factor_index = -1;
            info.factor_degree = 0;  // ambiguous; fall back to bounds
        }
        if (info.factor_degree == 1) {
            const BinaryForm& lin = flat[static_cast<std::size_t>(info.factor_index)];
            // a x + b y = 0 -> root (-b : a)
            info.point = exact_point(-lin[1], lin[0]);
            info.rational = true;
            info.factor_degree = 1;
        }
        roots.push_back(std::move(info));
    }
    if (lab.infinite_root) {
        RootInfo info;
        info.point = exact_point(1, 0);
        info.rational = true;
        info.factor_degree = 1;
        for (std::size_t fi = 0; fi < flat.size(); ++fi)
            if (flat[fi] == BinaryForm({0, 1})) info.factor_index = static_cast<int>(fi);
        roots.push_back(std::move(info));
    }
    if (static_cast<int>(roots.size()) != d) throw Error("internal: root count mismatch");

    GaloisClass gal = d == 3 ? cubic_galois(prim) : quartic_galois(prim);
    const int splitting_degree = gal.splitting_degree;

    std::vector<Line> out;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            Line line;
            line.kind = Line::RootLine;
            line.j = j;
            line.k = k;
            line.psi_j = roots[static_cast<std::size_t>(j)].point;
            line.psi_k = roots[static_cast<std::size_t>(k)].point;
            line.exact = line.psi_j.exact && line.psi_k.exact;
            root_line_field(roots[static_cast<std::size_t>(j)], roots[static_cast<std::size_t>(k)],
                            j == k, flat, splitting_degree, line);
            out.push_back(std::move(line));
        }

    // Automorphism lines: d scalar lifts of every PGL automorphism.
    PGLLiftSet lifted = pgl_lifted_automorphisms(prim, precision_bits);
    const int ups = aut_pgl_class(prim).upsilon;
    if (static_cast<int>(lifted.lifts.size()) != ups)
        throw Error("internal: PGL lift count disagrees with the classification");

    const bool ij_nonzero =
        d == 3 || (invariant_I(prim) != 0 && invariant_J(prim) != 0);
    std::optional<int> field_bound;
    if (d == 3)
        field_bound = cubic_line_field_degree(prim);
    else if (ij_nonzero)
        field_bound = quartic_line_field_degree(prim).degree;

    for (const PGLLift& lift : lifted.lifts) {
        // Numeric fixedness check of the base lift.
        std::vector<ComplexBox> subbed = numeric_substitute(prim.coeffs(), lift.base);
        for (int i = 0; i <= d; ++i) {
            ComplexBox diff = detail::b_sub(subbed[static_cast<std::size_t>(i)],
                                            detail::b_exact(prim[i]));
            if (detail::mag_lower(diff) > 0)
                throw Error("internal: automorphism line base fails numeric fixedness");
        }
        if (lift.exact && !verify_automorphism(prim, *lift.exact))
            throw Error("internal: exact automorphism line base fails verification");

        for (int k = 0; k < d; ++k) {
            Line line;
            line.kind = Line::AutLine;
            line.kernel_power = k;
            line.base_exact = lift.exact;
            line.base_numeric = lift.base;
            line.exact = lift.exact.has_value();
            if (lift.exact) {
                line.field_degree_exact = true;
                if (k == 0 || (d == 4 && k == 2)) {
                    line.field_degree = 1;  // rational matrix, possibly times -1
                } else {
                    line.field_degree = 2;  // adjoin mu_3 or mu_4
                }
            } else if (field_bound) {
                line.field_degree = *field_bound;
                line.field_degree_exact = false;
            }  // else: no claim (I*J = 0 extra automorphisms)
            out.push_back(std::move(line));
        }
    }

    if (static_cast<int>(out.size()) != d * (d + ups))
        throw Error("internal: line total disagrees with d(d + upsilon)");
    return out;
}

}  // namespace binform
