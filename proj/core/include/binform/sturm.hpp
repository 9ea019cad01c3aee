#pragma once

#include "binform/binary_form.hpp"
#include "binform/rational.hpp"

#include <vector>

namespace binform {

// Isolating interval for one real root: the root is the unique root in
// [lo, hi]; lo == hi marks an exactly known rational root.
struct RootInterval {
    Rat lo, hi;
    bool exact() const { return lo == hi; }
    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
};

// Sturm chain of a univariate integer polynomial (p[i] = coefficient of t^i).
// Counts and isolates distinct real roots, exactly.
class SturmChain {
public:
    explicit SturmChain(std::vector<Int> poly);

    int degree() const { return degree_; }
    // Number of distinct real roots.
    int count() const;
    // Number of distinct real roots in (a, b], a < b.
    int count_interval(const Rat& a, const Rat& b) const;

    // Disjoint isolating intervals in ascending order, one per distinct real
    // root, with non-root endpoints (or exact rational hits).
    std::vector<RootInterval> isolate() const;
    // Shrink an isolating interval below the requested width.
    void refine(RootInterval& iv, const Rat& width) const;

    Rat eval(const Rat& x) const;
    // All real roots lie strictly inside (-bound, bound).
    const Rat& cauchy_bound() const { return bound_; }

private:
    int variations(const Rat& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    std::vector<std::vector<Rat>> chain_;
    int degree_ = -1;
    Rat bound_ = 1;
};

// Exact count of real projective roots of F (degree 2..6, squarefree); used
// as chi(F) for quartics. The point at infinity counts when the leading
// coefficient vanishes.
int real_projective_root_count(const BinaryForm& F);

// chi(F) for a quartic with non-zero discriminant: 0, 2 or 4.
int chi(const BinaryForm& F);

}  // namespace binform
