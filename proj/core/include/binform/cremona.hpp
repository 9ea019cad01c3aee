#pragma once

#include "binform/binary_form.hpp"
#include "binform/roots.hpp"

#include <array>

namespace binform {

// One Cremona covariant A x^2 + B xy + C y^2 of a quartic, built from the
// labeled roots, with its discriminant D = B^2 - 4AC.
struct CremonaCovariant {
    ComplexBox a, b, c;
    ComplexBox disc;
};

struct CremonaSet {
    std::array<CremonaCovariant, 3> cov;  // labeled c_1, c_2, c_3
    int chi = 0;
    int bits = 0;
};

// The three Cremona covariants from certified labeled roots. Verifies
// numerically that c_1 c_2 c_3 reproduces the sextic covariant within the
// enclosure radii and that every D_i is certified non-zero; escalates the
// working precision otherwise.
CremonaSet cremona_covariants_numeric(const BinaryForm& F, int precision_bits = kDefaultPrecisionBits);

}  // namespace binform
