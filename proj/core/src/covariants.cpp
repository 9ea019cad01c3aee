#include "binform/covariants.hpp"

#include "binform/factor.hpp"

#include <algorithm>

namespace binform {

namespace {

void require_degree(const BinaryForm& F, int d, const char* what) {
    if (F.degree() != d) throw UnsupportedDegree(std::string(what) + " requires degree " + std::to_string(d));
}

}  // namespace

BinaryForm hessian(const BinaryForm& F) {
    require_degree(F, 3, "hessian");
    const Rat &b3 = F[0], &b2 = F[1], &b1 = F[2], &b0 = F[3];
    return BinaryForm({b2 * b2 - 3 * b3 * b1, b2 * b1 - 9 * b3 * b0, b1 * b1 - 3 * b2 * b0});
}

Rat invariant_I(const BinaryForm& F) {
    require_degree(F, 4, "invariant I");
    const Rat &a4 = F[0], &a3 = F[1], &a2 = F[2], &a1 = F[3], &a0 = F[4];
    return 12 * a4 * a0 - 3 * a3 * a1 + a2 * a2;
}

Rat invariant_J(const BinaryForm& F) {
    require_degree(F, 4, "invariant J");
    const Rat &a4 = F[0], &a3 = F[1], &a2 = F[2], &a1 = F[3], &a0 = F[4];
    return 72 * a4 * a2 * a0 + 9 * a3 * a2 * a1 - 27 * a4 * a1 * a1 - 27 * a0 * a3 * a3 -
           2 * a2 * a2 * a2;
}

BinaryForm julia_covariant(const BinaryForm& F, const Rat& theta) {
    require_degree(F, 3, "julia covariant");
    if (F.lead() == 0) throw Error("julia covariant requires a non-zero leading coefficient");
    if (F.eval(theta, Rat(1)) != 0) throw NotARoot();
    const Rat &b3 = F[0], &b2 = F[1], &b1 = F[2], &b0 = F[3];
    const Rat t = theta, t2 = theta * theta;
    Rat h2 = 9 * b3 * b3 * t2 + 6 * b3 * b2 * t + 6 * b3 * b1 - b2 * b2;
    Rat h1 = 6 * b3 * b2 * t2 + 6 * (b2 * b2 - b3 * b1) * t + 2 * b2 * b1;
    Rat h0 = 3 * b3 * b1 * t2 + 3 * (b2 * b1 - 3 * b3 * b0) * t + 2 * b1 * b1 - 3 * b2 * b0;
    return BinaryForm({h2, h1, h0});
}

BinaryForm sextic_covariant(const BinaryForm& F) {
    require_degree(F, 4, "sextic covariant");
    const Rat &a4 = F[0], &a3 = F[1], &a2 = F[2], &a1 = F[3], &a0 = F[4];
    Rat c6 = a3 * a3 * a3 + 8 * a4 * a4 * a1 - 4 * a4 * a3 * a2;
    Rat c5 = 2 * (16 * a4 * a4 * a0 + 2 * a4 * a3 * a1 - 4 * a4 * a2 * a2 + a3 * a3 * a2);
    Rat c4 = 5 * (8 * a4 * a3 * a0 + a3 * a3 * a1 - 4 * a4 * a2 * a1);
    Rat c3 = 20 * (a3 * a3 * a0 - a4 * a1 * a1);
    Rat c2 = -5 * (8 * a4 * a1 * a0 + a3 * a1 * a1 - 4 * a3 * a2 * a0);
    Rat c1 = -2 * (16 * a4 * a0 * a0 + 2 * a3 * a1 * a0 - 4 * a2 * a2 * a0 + a2 * a1 * a1);
    Rat c0 = -(a1 * a1 * a1 + 8 * a3 * a0 * a0 - 4 * a2 * a1 * a0);
    return BinaryForm({c6, c5, c4, c3, c2, c1, c0});
}

bool is_klein_form(const BinaryForm& G) {
    require_degree(G, 6, "klein form test");
    const Rat &g6 = G[0], &g5 = G[1], &g4 = G[2], &g3 = G[3], &g2 = G[4], &g1 = G[5], &g0 = G[6];
    return 10 * g6 * g2 - 5 * g5 * g3 + 2 * g4 * g4 == 0 &&
           25 * g6 * g1 - 5 * g5 * g2 + g3 * g4 == 0 &&
           50 * g6 * g0 - 2 * g2 * g4 + g3 * g3 == 0;
}

std::vector<SigFactor> significant_quadratic_factors(const BinaryForm& F) {
    require_degree(F, 4, "significant factors");
    if (discriminant(F) == 0) throw DegenerateForm();

    BinaryForm F6 = sextic_covariant(F).primitive().form;
    FormFactorization fac = factor_over_Z(F6);

    std::vector<BinaryForm> flat = fac.flatten();  // squarefree: 6 simple roots
    std::vector<std::pair<BinaryForm, BinaryForm>> candidates;  // (quadratic, cofactor)
    auto product_except = [&flat](std::size_t skip1, std::size_t skip2) {
        BinaryForm acc({Rat(1)});
        for (std::size_t k = 0; k < flat.size(); ++k)
            if (k != skip1 && k != skip2) acc = acc * flat[k];
        return acc;
    };
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (flat[i].degree() == 2) candidates.emplace_back(flat[i], product_except(i, i));
        if (flat[i].degree() != 1) continue;
        for (std::size_t j = i + 1; j < flat.size(); ++j)
            if (flat[j].degree() == 1)
                candidates.emplace_back(flat[i] * flat[j], product_except(i, j));
    }

    std::vector<SigFactor> out;
    for (auto& [quad, cof] : candidates) {
        if (invariant_J(cof) != 0) continue;
        auto prim = quad.primitive();
        Rat disc = discriminant(prim.form);
        out.push_back(SigFactor{prim.form, disc, is_square(disc < 0 ? Rat(-disc) : disc)});
    }
    std::sort(out.begin(), out.end());
    if (out.size() > 3)
        throw Error("internal: more than three significant factors found");
    return out;
}

}  // namespace binform
