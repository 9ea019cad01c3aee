#include "binform/sturm.hpp"

#include "intpoly.hpp"

#include <algorithm>

namespace binform {

namespace {

using detail::QPoly;

// Remainder of a by b over Q.
QPoly remainder(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        detail::trim(a);
    }
    return a;
}

// Scale to a primitive integer polynomial; the multiplier is positive, so
// sign sequences are preserved.
void normalize_positive(QPoly& p) {
    if (p.empty()) return;
    Rat c = rational_content(p);
    if (c < 0) c = -c;
    for (Rat& v : p) v /= c;
}

int sgn(const Rat& v) { return v.sign(); }

}  // namespace

SturmChain::SturmChain(std::vector<Int> poly) {
    detail::trim(poly);
    QPoly p0(poly.begin(), poly.end());
    degree_ = detail::deg(p0);
    if (degree_ < 0) throw Error("sturm chain of the zero polynomial");

    // Cauchy bound: 1 + max |c_i| / |lead|.
    Rat lead = p0.back();
    if (lead < 0) lead = -lead;
    Rat m = 0;
    for (const Rat& c : p0) {
        Rat a = c < 0 ? Rat(-c) : c;
        if (a > m) m = a;
    }
    bound_ = 1 + m / lead;

    chain_.push_back(p0);
    if (degree_ >= 1) {
        QPoly p1;
        for (std::size_t i = 1; i < p0.size(); ++i) p1.push_back(p0[i] * Rat(static_cast<int>(i)));
        normalize_positive(p1);
        chain_.push_back(p1);
        while (chain_.back().size() > 1) {
            QPoly r = remainder(chain_[chain_.size() - 2], chain_.back());
            if (r.empty()) break;  // non-squarefree input: chain ends at the gcd
            for (Rat& v : r) v = -v;
            normalize_positive(r);
            chain_.push_back(std::move(r));
        }
    }
}

Rat SturmChain::eval(const Rat& x) const { return detail::eval(chain_[0], x); }

int SturmChain::variations(const Rat& x) const {
    int count = 0, prev = 0;
    for (const QPoly& p : chain_) {
        int s = sgn(detail::eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::variations_at_pos_inf() const {
    int count = 0, prev = 0;
    for (const QPoly& p : chain_) {
        int s = sgn(p.back());
        if (prev != 0 && s != prev) ++count;
        if (s != 0) prev = s;
    }
    return count;
}

int SturmChain::variations_at_neg_inf() const {
    int count = 0, prev = 0;
    for (const QPoly& p : chain_) {
        int s = sgn(p.back());
        if ((detail::deg(p) % 2) == 1) s = -s;
        if (prev != 0 && s != prev) ++count;
        if (s != 0) prev = s;
    }
    return count;
}

int SturmChain::count() const {
    if (degree_ < 1) return 0;
    return variations_at_neg_inf() - variations_at_pos_inf();
}

int SturmChain::count_interval(const Rat& a, const Rat& b) const {
    if (degree_ < 1) return 0;
    return variations(a) - variations(b);
}

std::vector<RootInterval> SturmChain::isolate() const {
    std::vector<RootInterval> out;
    if (degree_ < 1 || count() == 0) return out;

    // Split points are nudged off roots so every interval (a, b] has
    // non-root endpoints.
    auto split_point = [this](const Rat& a, const Rat& b) {
        Rat m = (a + b) / 2;
        Rat step = (b - a) / 16;
        while (eval(m) == 0) m += step, step /= 2;  // total drift < (b-a)/8
        return m;
    };

    struct Seg {
        Rat a, b;
        int n;
    };
    std::vector<Seg> stack{{-bound_, bound_, count()}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            out.push_back({s.a, s.b});
            continue;
        }
        Rat m = split_point(s.a, s.b);
        int left = count_interval(s.a, m);
        stack.push_back({m, s.b, s.n - left});
        stack.push_back({s.a, m, left});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

void SturmChain::refine(RootInterval& iv, const Rat& width) const {
    while (!iv.exact() && iv.width() > width) {
        Rat m = (iv.lo + iv.hi) / 2;
        if (eval(m) == 0) {
            iv.lo = iv.hi = m;
            return;
        }
        if (count_interval(iv.lo, m) == 1)
            iv.hi = m;
        else
            iv.lo = m;
    }
}

int real_projective_root_count(const BinaryForm& F) {
    if (F.degree() < 2 || F.degree() > 6) throw UnsupportedDegree();
    std::vector<Int> c = F.primitive_int_coeffs();
    int at_infinity = c[0] == 0 ? 1 : 0;
    detail::ZPoly f(c.rbegin(), c.rend());
    detail::trim(f);
    if (f.empty()) throw Error("zero form");
    if (detail::deg(f) == 0) return at_infinity;
    return at_infinity + SturmChain(f).count();
}

int chi(const BinaryForm& F) {
    if (F.degree() != 4) throw UnsupportedDegree("chi requires degree 4");
    if (discriminant(F) == 0) throw DegenerateForm();
    return real_projective_root_count(F);
}

}  // namespace binform
