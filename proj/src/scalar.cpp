#include "cfa/scalar.hpp"

#include <sstream>

namespace cfa {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

static std::string rational_pretty(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string Scalar::str() const {
    if (im_ == 0) return rational_pretty(re_);
    std::string imag;
    if (im_ == 1) imag = "i";
    else if (im_ == -1) imag = "-i";
    else imag = rational_pretty(im_) + "i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rational_pretty(re_) + "+" + imag;
    return rational_pretty(re_) + imag;
}

Integer binom(long m, long k) {
    if (k < 0) return 0;
    Integer num = 1, den = 1;
    for (long t = 0; t < k; ++t) {
        num *= Integer(m - t);
        den *= Integer(t + 1);
    }
    return num / den;
}

Integer falling(long m, long k) {
    Integer r = 1;
    for (long t = 0; t < k; ++t) r *= Integer(m - t);
    return r;
}

}  // namespace cfa
