#pragma once

#include "binform/errors.hpp"
#include "binform/mat2.hpp"
#include "binform/quadext.hpp"
#include "binform/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace binform {

// Homogeneous form F(x,y) = sum coeffs[i] * x^(d-i) * y^i of degree d.
// Coefficients are exact rationals; the leading (x^d) coefficient is
// coeffs[0]. Degrees outside 2..6 are representable (factors are linear,
// products in tests go higher); analysis entry points enforce their own
// degree preconditions.
class BinaryForm {
public:
    BinaryForm() : coeffs_(1, Rat(0)) {}
    explicit BinaryForm(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.assign(1, Rat(0));
    }
    BinaryForm(std::initializer_list<Rat> coeffs) : BinaryForm(std::vector<Rat>(coeffs)) {}

    static BinaryForm from_ints(const std::vector<long long>& v) {
        std::vector<Rat> c(v.begin(), v.end());
        return BinaryForm(std::move(c));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const Rat& lead() const { return coeffs_.front(); }
    const Rat& trail() const { return coeffs_.back(); }

    bool is_zero() const {
        for (const Rat& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_integral() const {
        for (const Rat& c : coeffs_)
            if (den(c) != 1) return false;
        return true;
    }

    template <class S>
    S eval(const S& x, const S& y) const {
        // Horner in x; each step folds in one more power of y.
        S acc = S(coeffs_[0]);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) acc = acc * x + S(coeffs_[i]) * pow_of(y, i);
        return acc;
    }

    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
        std::vector<Rat> out(f.coeffs_.size() + g.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
        return BinaryForm(std::move(out));
    }

    friend BinaryForm operator*(const Rat& c, const BinaryForm& f) {
        std::vector<Rat> out = f.coeffs_;
        for (Rat& v : out) v *= c;
        return BinaryForm(std::move(out));
    }

    friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
        const auto& big = f.coeffs_.size() >= g.coeffs_.size() ? f.coeffs_ : g.coeffs_;
        const auto& small = f.coeffs_.size() >= g.coeffs_.size() ? g.coeffs_ : f.coeffs_;
        if (big.size() != small.size()) throw Error("adding forms of different degree");
        std::vector<Rat> out = big;
        for (std::size_t i = 0; i < small.size(); ++i) out[i] += small[i];
        return BinaryForm(std::move(out));
    }

    friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + (Rat(-1) * g); }

    friend bool operator==(const BinaryForm& f, const BinaryForm& g) { return f.coeffs_ == g.coeffs_; }
    friend bool operator!=(const BinaryForm& f, const BinaryForm& g) { return !(f == g); }
    friend bool operator<(const BinaryForm& f, const BinaryForm& g) { return f.coeffs_ < g.coeffs_; }

    // F = content * primitive, primitive with integer coefficients, gcd 1,
    // positive first non-zero coefficient. Defined after the class.
    struct Primitive;
    Primitive primitive() const;

    // Integer coefficient vector of the primitive model (c0..cd).
    std::vector<Int> primitive_int_coeffs() const;

    std::string str(const std::string& x = "x", const std::string& y = "y") const;

private:
    template <class S>
    static S pow_of(const S& v, std::size_t k) {
        S r = S(1);
        for (std::size_t i = 0; i < k; ++i) r = r * v;
        return r;
    }

    std::vector<Rat> coeffs_;
};

struct BinaryForm::Primitive {
    Rat content;
    BinaryForm form;
};

inline BinaryForm::Primitive BinaryForm::primitive() const {
    if (is_zero()) return {Rat(0), *this};
    Rat c = rational_content(coeffs_);
    std::vector<Rat> out = coeffs_;
    for (Rat& v : out) v /= c;
    return {c, BinaryForm(std::move(out))};
}

inline std::vector<Int> BinaryForm::primitive_int_coeffs() const {
    Primitive p = primitive();
    std::vector<Int> out;
    out.reserve(p.form.coeffs().size());
    for (const Rat& v : p.form.coeffs()) out.push_back(num(v));
    return out;
}

// F_T(x,y) = F(t1 x + t2 y, t3 x + t4 y), expanded exactly. Generic over the
// scalar so QuadExt matrices can be verified exactly too.
template <class S>
std::vector<S> substitute_coeffs(const std::vector<S>& c, const Mat2<S>& T) {
    if (T.det() == S(0)) throw SingularMatrix();
    const std::size_t n = c.size();  // degree + 1
    // pow1[k] = (t1 x + t2 y)^k, pow2[k] = (t3 x + t4 y)^k as coefficient rows.
    std::vector<std::vector<S>> pow1(n), pow2(n);
    pow1[0] = {S(1)};
    pow2[0] = {S(1)};
    for (std::size_t k = 1; k < n; ++k) {
        auto step = [k](const std::vector<S>& prev, const S& u, const S& v) {
            std::vector<S> cur(k + 1, S(0));
            for (std::size_t j = 0; j < prev.size(); ++j) {
                cur[j] = cur[j] + prev[j] * u;
                cur[j + 1] = cur[j + 1] + prev[j] * v;
            }
            return cur;
        };
        pow1[k] = step(pow1[k - 1], T.t1, T.t2);
        pow2[k] = step(pow2[k - 1], T.t3, T.t4);
    }
    std::vector<S> out(n, S(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] == S(0)) continue;
        const auto& a = pow1[n - 1 - i];
        const auto& b = pow2[i];
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k) out[j + k] = out[j + k] + c[i] * a[j] * b[k];
    }
    return out;
}

inline BinaryForm substitute(const BinaryForm& F, const Mat2Q& T) {
    return BinaryForm(substitute_coeffs(F.coeffs(), T));
}

inline std::vector<QuadExt> substitute(const BinaryForm& F, const Mat2E& T) {
    std::vector<QuadExt> c(F.coeffs().begin(), F.coeffs().end());
    return substitute_coeffs(c, T);
}

// Exact true iff F_T = F. For QuadExt matrices the comparison is exact in
// the extension field.
bool verify_automorphism(const BinaryForm& F, const Mat2Q& T);
bool verify_automorphism(const BinaryForm& F, const Mat2E& T);

// Discriminant with fixed per-degree normalization:
//   deg 2: b^2 - 4ac
//   deg 3: 18*b3*b2*b1*b0 - 4*b2^3*b0 + b2^2*b1^2 - 4*b3*b1^3 - 27*b3^2*b0^2
//   deg 4: (4 I^3 - J^2)/27
//   deg 5,6: squarefree zero-test (resultant based); only the vanishing of
//   the value is meaningful.
Rat discriminant(const BinaryForm& F);

// Projective point of P^1(Q): finite value or the point at infinity.
struct ProjRootQ {
    bool infinite = false;
    Rat value = 0;

    static ProjRootQ at_infinity() { return {true, 0}; }
    static ProjRootQ affine(Rat v) { return {false, std::move(v)}; }

    friend bool operator==(const ProjRootQ& a, const ProjRootQ& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator<(const ProjRootQ& a, const ProjRootQ& b) {
        if (a.infinite != b.infinite) return b.infinite;  // finite values first
        return a.value < b.value;
    }
    std::string str() const { return infinite ? "inf" : to_string(value); }
};

// All projective roots of F in P^1(Q), deduplicated and sorted.
std::vector<ProjRootQ> rational_proj_roots(const BinaryForm& F);

// Smallest unimodular change of variables making the leading coefficient
// non-zero: identity when lead != 0, otherwise the swap (0,1;1,0) when it
// works, otherwise (1,0;k,1) (i.e. y -> y + k x) for the smallest k >= 1.
Mat2Q leading_shift(const BinaryForm& F);

}  // namespace binform
