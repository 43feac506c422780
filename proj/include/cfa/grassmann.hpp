#ifndef CFA_GRASSMANN_HPP
#define CFA_GRASSMANN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfa/scalar.hpp"

namespace cfa {

/// Element of the Grassmann algebra on generators x1..xN. A monomial is a
/// strictly increasing index set, stored as a bitmask (bit k <-> x_{k+1});
/// coefficients are Scalars and zero coefficients are never stored.
class GrassmannElement {
public:
    GrassmannElement() = default;
    explicit GrassmannElement(int n) : n_(n) {}

    static GrassmannElement zero(int n) { return GrassmannElement(n); }
    static GrassmannElement unit(int n) { return monomial(n, 0, Scalar(1)); }
    static GrassmannElement generator(int n, int i);
    static GrassmannElement monomial(int n, uint32_t mask, const Scalar& c);

    int indeterminates() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<uint32_t, Scalar>& terms() const { return terms_; }
    Scalar coeff(uint32_t mask) const;

    /// 0 or 1 when every stored monomial has the same degree parity.
    std::optional<int> parity() const;
    /// Common total degree of all monomials, when homogeneous.
    std::optional<int> degree() const;

    GrassmannElement operator-() const;
    GrassmannElement& operator+=(const GrassmannElement& o);
    GrassmannElement& operator-=(const GrassmannElement& o);
    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
    friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GrassmannElement& a, const GrassmannElement& b) { return !(a == b); }

    GrassmannElement scaled(const Scalar& c) const;

    std::string str() const;

    /// Sign (-1)^inversions from sorting the concatenation of two disjoint
    /// ascending index sets; 0 if the sets intersect.
    static int merge_sign(uint32_t a, uint32_t b);

private:
    void add_term(uint32_t mask, const Scalar& c);
    int n_ = 0;
    std::map<uint32_t, Scalar> terms_;

    friend GrassmannElement gr_mul(const GrassmannElement&, const GrassmannElement&);
    friend GrassmannElement gr_derive(int, const GrassmannElement&);
};

/// Associative super-commutative product; both factors must live in the same
/// Grassmann algebra.
GrassmannElement gr_mul(const GrassmannElement& f, const GrassmannElement& g);

/// Odd derivation by x_i (1-based): derive(i, x_j) = delta_ij.
GrassmannElement gr_derive(int i, const GrassmannElement& f);

std::string grassmann_mask_str(uint32_t mask);

}  // namespace cfa

#endif
