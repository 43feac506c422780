#ifndef CFA_SCALAR_HPP
#define CFA_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfa {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational re + i*im. The base field of the whole library;
/// every computation downstream is exact, so equality is always literal.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(const Rational& re) : re_(re) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar ratio(long num, long den) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        return Scalar(Rational(num, den));
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }

    Scalar& operator*=(const Scalar& o) {
        if (im_ == 0 && o.im_ == 0) { re_ *= o.re_; return *this; }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        if (o.im_ == 0) { re_ /= o.re_; im_ /= o.re_; return *this; }
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational m = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order usable for canonical sorting (no algebraic meaning).
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Rendering like "2", "-1/2", "i", "-i", "2i", "1/2+3i".
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

/// "p/q" with the denominator always spelled out, e.g. "3/1", "-1/2".
std::string rational_str(const Rational& r);

/// Integer binomial coefficient C(m, k) for any integer m and k >= 0.
Integer binom(long m, long k);

/// Falling factorial m(m-1)...(m-k+1); equals 0 when 0 <= m < k.
Integer falling(long m, long k);

}  // namespace cfa

#endif
