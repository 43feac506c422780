#include "cfa/dpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cfa {

DPoly DPoly::monomial(const Scalar& c, int k) {
    DPoly p;
    if (c.is_zero()) return p;
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Scalar(0));
    p.coeffs_.back() = c;
    return p;
}

const Scalar& DPoly::leading() const {
    if (is_zero()) throw std::domain_error("DPoly: leading coefficient of zero");
    return coeffs_.back();
}

DPoly DPoly::operator-() const {
    DPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

DPoly& DPoly::operator+=(const DPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

DPoly& DPoly::operator-=(const DPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

DPoly operator*(const DPoly& a, const DPoly& b) {
    if (a.is_zero() || b.is_zero()) return DPoly();
    DPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (size_t k = 0; k < a.coeffs_.size(); ++k) {
        if (a.coeffs_[k].is_zero()) continue;
        for (size_t l = 0; l < b.coeffs_.size(); ++l)
            r.coeffs_[k + l] += a.coeffs_[k] * b.coeffs_[l];
    }
    r.normalize();
    return r;
}

DPoly DPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return DPoly();
    DPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

DPoly DPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : DPoly();
    DPoly r;
    r.coeffs_.assign(coeffs_.size() + static_cast<size_t>(k), Scalar(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) r.coeffs_[j + static_cast<size_t>(k)] = coeffs_[j];
    return r;
}

DPoly DPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Scalar(1) / leading());
}

DPoly DPoly::translated(const Scalar& c) const {
    // Horner: p(d + c) built from the top coefficient down.
    DPoly r;
    DPoly shift = DPoly::monomial(Scalar(1), 1) + DPoly(c);
    for (int k = degree(); k >= 0; --k) {
        r = r * shift;
        r += DPoly(coeffs_[static_cast<size_t>(k)]);
    }
    return r;
}

DPoly DPoly::negated_variable() const {
    DPoly r(*this);
    for (size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
    return r;
}

Scalar DPoly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x + coeffs_[static_cast<size_t>(k)];
    return acc;
}

std::pair<DPoly, DPoly> DPoly::divmod(const DPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("DPoly: division by zero polynomial");
    DPoly rem(*this), quot;
    int dd = divisor.degree();
    if (rem.degree() >= dd)
        quot.coeffs_.assign(static_cast<size_t>(rem.degree() - dd) + 1, Scalar(0));
    while (rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Scalar c = rem.leading() / divisor.leading();
        quot.coeffs_[static_cast<size_t>(k)] = c;
        rem -= divisor.scaled(c).shifted_up(k);
    }
    quot.normalize();
    return {quot, rem};
}

DPoly DPoly::gcd(DPoly a, DPoly b) {
    while (!b.is_zero()) {
        DPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string DPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = coeffs_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        if (!first && cs[0] != '-') os << "+";
        if (k == 0) {
            os << cs;
        } else {
            if (cs == "1") ;
            else if (cs == "-1") os << "-";
            else if (cs.find('+') != std::string::npos || (cs.find('-', 1) != std::string::npos))
                os << "(" << cs << ")";
            else os << cs;
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace cfa
