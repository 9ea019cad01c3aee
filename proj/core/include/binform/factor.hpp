#pragma once

#include "binform/binary_form.hpp"

#include <utility>
#include <vector>

namespace binform {

// F = content * product(factors^multiplicity); each factor is a primitive
// integer form with positive first non-zero coefficient, irreducible over Q.
struct FormFactorization {
    Rat content = 1;
    std::vector<std::pair<BinaryForm, int>> factors;

    BinaryForm reassemble() const {
        BinaryForm acc({content});
        for (const auto& [f, m] : factors)
            for (int i = 0; i < m; ++i) acc = acc * f;
        return acc;
    }

    std::vector<BinaryForm> flatten() const {
        std::vector<BinaryForm> out;
        for (const auto& [f, m] : factors)
            for (int i = 0; i < m; ++i) out.push_back(f);
        return out;
    }
};

// Complete factorization into irreducible integer forms, Kronecker style:
// rational roots first, then divisor-constrained searches for quadratic and
// cubic factors. Exact; sized for forms of degree <= 6.
FormFactorization factor_over_Z(const BinaryForm& F);

}  // namespace binform
