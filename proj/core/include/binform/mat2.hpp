#pragma once

#include "binform/errors.hpp"
#include "binform/quadext.hpp"
#include "binform/rational.hpp"

#include <array>
#include <string>
#include <tuple>

namespace binform {

// 2x2 matrix (t1 t2; t3 t4) over one scalar domain (Rat or QuadExt).
template <class S>
struct Mat2 {
    S t1{}, t2{}, t3{}, t4{};

    Mat2() = default;
    Mat2(S a, S b, S c, S d)
        : t1(std::move(a)), t2(std::move(b)), t3(std::move(c)), t4(std::move(d)) {}

    static Mat2 identity() { return Mat2(S(1), S(0), S(0), S(1)); }

    S det() const { return t1 * t4 - t2 * t3; }
    S trace() const { return t1 + t4; }

    bool is_zero() const { return t1 == S(0) && t2 == S(0) && t3 == S(0) && t4 == S(0); }

    Mat2 inverse() const {
        S d = det();
        if (d == S(0)) throw SingularMatrix();
        return Mat2(t4 / d, S(0) - t2 / d, S(0) - t3 / d, t1 / d);
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(x.t1 * y.t1 + x.t2 * y.t3, x.t1 * y.t2 + x.t2 * y.t4,
                    x.t3 * y.t1 + x.t4 * y.t3, x.t3 * y.t2 + x.t4 * y.t4);
    }

    friend Mat2 operator*(const S& c, const Mat2& m) {
        return Mat2(c * m.t1, c * m.t2, c * m.t3, c * m.t4);
    }

    friend Mat2 operator-(const Mat2& m) { return Mat2(S(0) - m.t1, S(0) - m.t2, S(0) - m.t3, S(0) - m.t4); }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.t1 == y.t1 && x.t2 == y.t2 && x.t3 == y.t3 && x.t4 == y.t4;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    std::string str() const {
        auto ts = [](const S& v) {
            if constexpr (std::is_same_v<S, Rat>) return to_string(v);
            else return v.str();
        };
        return "(" + ts(t1) + ", " + ts(t2) + "; " + ts(t3) + ", " + ts(t4) + ")";
    }
};

using Mat2Q = Mat2<Rat>;
using Mat2E = Mat2<QuadExt>;

inline bool operator<(const Mat2Q& x, const Mat2Q& y) {
    return std::tie(x.t1, x.t2, x.t3, x.t4) < std::tie(y.t1, y.t2, y.t3, y.t4);
}

inline Mat2E to_quadext(const Mat2Q& m) {
    return Mat2E(QuadExt(m.t1), QuadExt(m.t2), QuadExt(m.t3), QuadExt(m.t4));
}

// Power for small non-negative exponents.
template <class S>
Mat2<S> pow(Mat2<S> base, int n) {
    Mat2<S> acc = Mat2<S>::identity();
    for (; n > 0; --n) acc = acc * base;
    return acc;
}

}  // namespace binform
