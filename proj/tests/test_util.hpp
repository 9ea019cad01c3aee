#pragma once

#include "binform/binary_form.hpp"
#include "binform/parse.hpp"

#include <random>

namespace binform::testutil {

inline BinaryForm F(const std::string& text) { return parse_form(text).form; }

inline BinaryForm random_form(std::mt19937_64& rng, int degree, int lo, int hi,
                              bool nonzero_disc = true) {
    std::uniform_int_distribution<int> d(lo, hi);
    while (true) {
        std::vector<Rat> c;
        for (int i = 0; i <= degree; ++i) c.emplace_back(d(rng));
        BinaryForm f(std::move(c));
        if (f.is_zero()) continue;
        if (nonzero_disc && discriminant(f) == 0) continue;
        return f;
    }
}

// Random unimodular integer matrix (product of shears, det = 1), optionally
// negated rows for det = -1.
inline Mat2Q random_unimodular(std::mt19937_64& rng, bool allow_det_minus1 = true) {
    std::uniform_int_distribution<int> shear(-3, 3);
    Mat2Q m = Mat2Q::identity();
    for (int i = 0; i < 3; ++i) {
        m = m * Mat2Q(1, shear(rng), 0, 1);
        m = m * Mat2Q(1, 0, shear(rng), 1);
    }
    if (allow_det_minus1 && (rng() & 1)) m = m * Mat2Q(0, 1, 1, 0);
    return m;
}

// Random integer matrix with determinant in {+-1, +-2}.
inline Mat2Q random_small_det(std::mt19937_64& rng) {
    Mat2Q m = random_unimodular(rng);
    switch (rng() % 3) {
        case 0: return m;                       // det +-1
        case 1: return m * Mat2Q(2, 0, 0, 1);   // det +-2
        default: return m * Mat2Q(1, 1, -1, 1); // det +-2
    }
}

}  // namespace binform::testutil
