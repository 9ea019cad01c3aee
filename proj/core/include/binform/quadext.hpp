#pragma once

#include "binform/errors.hpp"
#include "binform/rational.hpp"

#include <string>

namespace binform {

// Element a + b*sqrt(m) of the quadratic extension Q(sqrt(m)); m squarefree,
// m != 0, 1 (m may be negative). Values with b = 0 compare equal to plain
// rationals regardless of m, so mixed-radicand arithmetic is permitted
// whenever one operand is rational.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), m_(0) {}
    QuadExt(Rat rational) : a_(std::move(rational)), b_(0), m_(0) {}  // NOLINT: implicit by design
    QuadExt(Rat a, Rat b, Int m) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
        normalize();
    }

    // sqrt(n) as a QuadExt (exact rational when n is a square).
    static QuadExt sqrt_of(const Rat& n) {
        if (n == 0) return QuadExt(0);
        if (is_square(n)) return QuadExt(sqrt_exact(n));
        // n = p/q: sqrt(n) = sqrt(p q)/q
        auto d = squarefree_decompose(num(n) * den(n));
        return QuadExt(0, Rat(d.root, den(n)), d.radicand);
    }

    const Rat& base() const { return a_; }
    const Rat& coeff() const { return b_; }
    const Int& radicand() const { return m_; }
    bool is_rational() const { return b_ == 0; }
    Rat rational_value() const { return a_; }  // valid when is_rational()

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExt conj() const { return QuadExt(a_, -b_, m_); }

    // a^2 - b^2 m; zero only for the zero element (m squarefree non-square).
    Rat norm() const { return a_ * a_ - b_ * b_ * m_; }

    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.m_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check_compatible(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.b_ != 0 ? x.m_ : y.m_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check_compatible(x, y);
        const Int& m = x.b_ != 0 ? x.m_ : y.m_;
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * m, x.a_ * y.b_ + x.b_ * y.a_, m);
    }

    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw Error("division by zero in quadratic extension");
        if (y.is_rational()) return QuadExt(x.a_ / y.a_, x.b_ / y.a_, x.m_);
        QuadExt num = x * y.conj();
        Rat n = y.norm();
        return QuadExt(num.a_ / n, num.b_ / n, num.m_);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
        return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const {
        if (is_rational()) return to_string(a_);
        std::string s;
        if (a_ != 0) s += to_string(a_) + (b_ > 0 ? " + " : " - ");
        else if (b_ < 0) s += "-";
        Rat ab = b_ < 0 ? Rat(-b_) : b_;
        if (ab != 1) s += to_string(ab) + "*";
        s += "sqrt(" + m_.str() + ")";
        return s;
    }

private:
    static void check_compatible(const QuadExt& x, const QuadExt& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.m_ != y.m_)
            throw Error("mixed radicands in quadratic extension arithmetic");
    }

    void normalize() {
        if (b_ == 0) {
            m_ = 0;
            return;
        }
        if (m_ == 0) {
            b_ = 0;
            return;
        }
        if (m_ == 1) {
            a_ += b_;
            b_ = 0;
            m_ = 0;
            return;
        }
        auto d = squarefree_decompose(m_);
        if (d.radicand == 1) {  // m was a positive square
            a_ += b_ * d.root;
            b_ = 0;
            m_ = 0;
            return;
        }
        b_ *= d.root;
        m_ = d.radicand;
    }

    Rat a_, b_;
    Int m_;
};

}  // namespace binform
