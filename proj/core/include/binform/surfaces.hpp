#pragma once

#include "binform/autgroup.hpp"
#include "binform/mobius.hpp"

#include <optional>
#include <vector>

namespace binform {

// Number of Mobius transformations carrying the root set of F1 onto the
// root set of F2. Cubic pairs always give 6; a form against itself uses the
// exact PGL classification; distinct quartic pairs go through the certified
// cross-form search. Degree mismatch returns 0.
int upsilon(const BinaryForm& F1, const BinaryForm& F2, int precision_bits = kDefaultPrecisionBits);

// d (d + upsilon): the number of lines on F1(x1,x2) - F2(x3,x4) = 0.
int line_count(const BinaryForm& F1, const BinaryForm& F2, int precision_bits = kDefaultPrecisionBits);

// Projective point (u : v), exact when the root is rational (or infinity).
struct HomogPoint {
    bool exact = false;
    Rat u_exact = 0, v_exact = 0;
    ComplexBox u, v;
};

// One line on X_F. Root lines are [s psi_j : s : t psi_k : t]; automorphism
// lines are [u : v : t1 u + t2 v : t3 u + t4 v] for the GL2 automorphism
// mu_d^kernel_power * base.
struct Line {
    enum Kind { RootLine, AutLine } kind;

    int j = -1, k = -1;  // root indices for root lines
    HomogPoint psi_j, psi_k;

    std::optional<Mat2Q> base_exact;
    BoxMat2 base_numeric;
    int kernel_power = 0;

    std::optional<int> field_degree;  // absent: no claim (I*J = 0 extra lines)
    bool field_degree_exact = false;  // true: exact degree; false: upper bound
    bool exact = false;               // exact parameterization
};

// All d^2 root lines and d*upsilon automorphism lines of X_F, with field of
// definition tags. The total always equals line_count(F, F).
std::vector<Line> enumerate_lines(const BinaryForm& F, int precision_bits = kDefaultPrecisionBits);

}  // namespace binform
