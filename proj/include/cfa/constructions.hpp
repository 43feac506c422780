#ifndef CFA_CONSTRUCTIONS_HPP
#define CFA_CONSTRUCTIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "cfa/algebra.hpp"
#include "cfa/grassmann.hpp"
#include "cfa/lie.hpp"

namespace cfa {

/// Rank-1 algebra with L_(0)L = dL, L_(1)L = 2L.
ConformalSuperalgebra make_virasoro();

/// Current algebra on a Lie superalgebra: only 0-th products, a_(0)b = [a,b].
ConformalSuperalgebra make_current(const LieSuperalgebra& g);

/// Semidirect sum of the Virasoro algebra with a current algebra:
/// L_(0)a = da, L_(1)a = a, currents as in make_current; mirrored products
/// filled by skew-symmetry.
ConformalSuperalgebra make_semidirect_vir_current(const LieSuperalgebra& g);

/// Derivation-plus-function series on the Grassmann algebra in N variables;
/// rank (N+1) 2^N. Generators: monomial derivations named like "x12d3" and
/// monomials named "u", "x1", "x12", ...
ConformalSuperalgebra make_W(int n);

/// Divergence-free subalgebra of make_W(n); rank N 2^N, basis named s0, s1...
ConformalSuperalgebra make_S(int n);

/// Contact-type series on the Grassmann monomials; rank 2^N.
ConformalSuperalgebra make_K(int n);

/// The exceptional rank-32 subalgebra of make_K(6).
ConformalSuperalgebra make_CK6();

/// Index of a W-algebra generator: derivation part (mask, dir) for mask*d_dir
/// with dir in [1, n], or monomial part (mask, 0).
int w_generator_index(int n, uint32_t mask, int dir);

/// Divergence of a W-element presented in the generator basis of make_W(n);
/// the result lives in the free module over the 2^n Grassmann monomials.
std::vector<DPoly> divergence(int n, const std::vector<DPoly>& w_coeffs);

/// Columns spanning {D : div D = 0} inside make_W(n), Hermite-reduced.
PdMatrix divergence_kernel(int n);

// ---------------------------------------------------------------------------

/// Conformal endomorphism of a free rank-N module: a finitely supported
/// sequence n -> N x N matrix over C[d] of the n-th action on the basis,
/// together with an intrinsic parity used by the super-commutator.
class GcElement {
public:
    GcElement() = default;
    GcElement(int rank, int parity = 0) : rank_(rank), parity_(parity) {}

    int rank() const { return rank_; }
    int parity() const { return parity_; }
    bool is_zero() const;
    int support_bound() const { return static_cast<int>(mats_.size()); }
    int max_entry_degree() const;

    const PdMatrix* mat(int n) const;
    void set_mat(int n, PdMatrix m);

    GcElement operator-() const;
    GcElement& operator+=(const GcElement& o);
    friend GcElement operator+(GcElement a, const GcElement& b) { return a += b; }
    friend GcElement operator-(GcElement a, const GcElement& b) { return a += -b; }
    friend bool operator==(const GcElement& a, const GcElement& b);
    friend bool operator!=(const GcElement& a, const GcElement& b) { return !(a == b); }

    GcElement scaled(const Scalar& c) const;
    /// The action (d A)_(n) = -n A_(n-1).
    GcElement derived() const;
    GcElement poly_scaled(const DPoly& p) const;

    /// Apply A_(n) to a module element (vector of polynomials), using
    /// A_(n) d = d A_(n) + n A_(n-1).
    std::vector<DPoly> apply(int n, const std::vector<DPoly>& v) const;

    std::string str() const;

private:
    void trim();
    int rank_ = 0;
    int parity_ = 0;
    std::vector<PdMatrix> mats_;  // index n
};

/// (A_(m) B)_(n) = sum_{j=0}^m (-1)^{m+j} C(m,j) [A_(j), B_(m+n-j)], with the
/// super-commutator of the mode operators.
GcElement gc_nth_product(const GcElement& a, const GcElement& b, int m);

}  // namespace cfa

#endif
