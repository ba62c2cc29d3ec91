#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ybx {

/// Error type thrown by every precondition violation in the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational; canonical form (lowest terms, positive
/// denominator) is maintained by the backend after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

/// Element of Q(i): re + im*i with exact rational parts.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long long n) : re_(n) {}  // NOLINT: implicit by design
    GaussRat(Rational re) : re_(std::move(re)) {}
    GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(0, 1); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    /// Squared modulus re^2 + im^2 (a nonnegative rational).
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }

    GaussRat inverse() const {
        if (is_zero())
            throw Error("division by zero in Q(i)");
        Rational n = norm2();
        return GaussRat(re_ / n, -im_ / n);
    }

    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        return a * b.inverse();
    }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// Total order used only for canonical sorting (not an algebraic order).
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        if (a.re_ != b.re_)
            return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline bool is_zero(const GaussRat& x) { return x.is_zero(); }

}  // namespace ybx
