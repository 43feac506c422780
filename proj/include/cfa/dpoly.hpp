#ifndef CFA_DPOLY_HPP
#define CFA_DPOLY_HPP

#include <utility>
#include <vector>

#include "cfa/scalar.hpp"

namespace cfa {

/// Polynomial in the formal symbol d (the translation generator) with Scalar
/// coefficients, stored by ascending degree with trailing zeros stripped.
/// degree() of the zero polynomial is -1.
class DPoly {
public:
    DPoly() = default;
    explicit DPoly(const Scalar& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    explicit DPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static DPoly zero() { return DPoly(); }
    static DPoly one() { return DPoly(Scalar(1)); }
    /// c * d^k
    static DPoly monomial(const Scalar& c, int k);
    /// The polynomial d itself.
    static DPoly d() { return monomial(Scalar(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

    const Scalar& leading() const;
    Scalar coeff(int k) const {
        if (k < 0 || k > degree()) return Scalar(0);
        return coeffs_[static_cast<size_t>(k)];
    }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    DPoly operator-() const;
    DPoly& operator+=(const DPoly& o);
    DPoly& operator-=(const DPoly& o);
    friend DPoly operator+(DPoly a, const DPoly& b) { return a += b; }
    friend DPoly operator-(DPoly a, const DPoly& b) { return a -= b; }
    friend DPoly operator*(const DPoly& a, const DPoly& b);
    friend bool operator==(const DPoly& a, const DPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const DPoly& a, const DPoly& b) { return !(a == b); }

    DPoly scaled(const Scalar& c) const;
    /// Multiply by d^k.
    DPoly shifted_up(int k) const;
    /// Make the leading coefficient 1 (zero polynomial stays zero).
    DPoly monic() const;
    /// Substitute d -> d + c (Taylor shift).
    DPoly translated(const Scalar& c) const;
    /// Substitute d -> -d.
    DPoly negated_variable() const;
    /// Evaluate at a scalar point.
    Scalar eval(const Scalar& x) const;
    /// Truncate to the constant term (reduction modulo d, for torsion slots).
    DPoly constant_part() const { return DPoly(coeff(0)); }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor). Throws on zero divisor.
    std::pair<DPoly, DPoly> divmod(const DPoly& divisor) const;

    /// Monic gcd; gcd(0, 0) = 0.
    static DPoly gcd(DPoly a, DPoly b);

    /// Rendering such as "d^2+2d-1/2" with an arbitrary variable name.
    std::string str(const std::string& var = "d") const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Scalar> coeffs_;
};

}  // namespace cfa

#endif
