#ifndef CFA_ALGEBRA_HPP
#define CFA_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfa/dpoly.hpp"
#include "cfa/linalg.hpp"
#include "cfa/scalar.hpp"

namespace cfa {

struct Generator {
    std::string name;
    int parity = 0;       // 0 even, 1 odd
    bool torsion = false; // torsion generators satisfy d * gen = 0
};

/// Sparse vector over the generator basis: sorted (generator index, coefficient).
using SparseVec = std::vector<std::pair<int, DPoly>>;

class ConformalSuperalgebra;

/// Element sum_i p_i(d) a^i of a conformal superalgebra. Coefficients on
/// torsion generators are kept reduced modulo d.
class Element {
public:
    Element() = default;
    Element(const ConformalSuperalgebra* alg, std::vector<DPoly> coeffs);

    static Element zero(const ConformalSuperalgebra& alg);
    static Element generator(const ConformalSuperalgebra& alg, int i);

    const ConformalSuperalgebra* algebra() const { return alg_; }
    const std::vector<DPoly>& coeffs() const { return c_; }
    const DPoly& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    bool is_zero() const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend bool operator==(const Element& a, const Element& b) { return a.alg_ == b.alg_ && a.c_ == b.c_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    Element scaled(const Scalar& s) const;
    /// Apply d (multiplication by the translation symbol).
    Element derived() const;
    /// Multiply by p(d).
    Element poly_scaled(const DPoly& p) const;

    /// Common parity of the support, when homogeneous.
    std::optional<int> parity() const;

    std::string str() const;
    SparseVec sparse() const;

private:
    void normalize();
    const ConformalSuperalgebra* alg_ = nullptr;
    std::vector<DPoly> c_;
    friend class ConformalSuperalgebra;
};

struct AxiomViolation {
    std::string kind;  // "order", "parity", "torsion", "skew", "jacobi", "sesquilinear"
    int i = -1, j = -1, k = -1;
    int m = -1, n = -1;
    std::string lhs, rhs;
    std::string str() const;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    long checks = 0;
    bool pass() const { return violations.empty(); }
    std::string str() const;
};

struct TableRow {
    int i, j, n;
    Element value;
};

/// Finite conformal superalgebra presented by structure constants on an
/// ordered generator set. Products of arbitrary elements are derived from the
/// generator table by bilinearity and the sesquilinearity rules
///   (d a)_(n) b = -n a_(n-1) b,   a_(n) (d b) = d(a_(n) b) + n a_(n-1) b.
/// Instances are immutable once finalized and safe to share across threads.
class ConformalSuperalgebra {
public:
    ConformalSuperalgebra(std::string name, std::vector<Generator> gens);

    // --- construction phase -------------------------------------------------
    /// Store a^i_(n) a^j = value. Only valid before finalize().
    void set_product(int i, int j, int n, const Element& value);
    void set_product(int i, int j, int n, const SparseVec& value);
    /// Fill every pair (j, i) that has no stored products from the stored
    /// (i, j) products via the skew-symmetry axiom. Pairs given explicitly are
    /// left alone (check_axioms will catch mismatches).
    void complete_by_skew();
    void finalize();

    // --- inspection ---------------------------------------------------------
    const std::string& name() const { return name_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    const Generator& generator_info(int i) const { return gens_[static_cast<size_t>(i)]; }
    int parity(int i) const { return gens_[static_cast<size_t>(i)].parity; }
    bool is_torsion(int i) const { return gens_[static_cast<size_t>(i)].torsion; }
    int generator_index(const std::string& name) const;  // -1 when absent
    Size size() const;
    bool finalized() const { return finalized_; }

    /// Smallest N with a^i_(n) a^j = 0 for all n >= N.
    int order_bound(int i, int j) const;
    int max_order() const { return max_order_; }
    int max_coeff_degree() const { return max_deg_; }
    /// n-window that can produce nonzero products on arbitrary elements of
    /// coefficient degree <= extra.
    int product_window(int extra = 0) const { return max_order_ + max_deg_ + extra; }

    const SparseVec* product(int i, int j, int n) const;
    Element product_element(int i, int j, int n) const;
    bool pair_productful(int i, int j) const { return order_bound(i, j) > 0; }

    /// All nonzero generator products ordered by (i, j, n).
    std::vector<TableRow> lambda_table() const;

    // --- products on elements ----------------------------------------------
    Element nth_product(const Element& x, const Element& y, int n) const;
    /// a^i_(m) x for arbitrary x.
    Element gen_act(int i, int m, const Element& x) const;
    /// x_(n) a^j for arbitrary x.
    Element act_on_gen(const Element& x, int j, int n) const;
    /// Skew-symmetry expansion: the value of a^j_(n) a^i predicted by the
    /// stored (i, j) products.
    Element skew_mirror(int i, int j, int n) const;

    /// Full axiom verification on generators (order bounds, parity of the
    /// table, torsion integrity, skew-symmetry, the Jacobi identity, and
    /// sesquilinearity re-asserted on d-shifted generators up to degree 3).
    /// Violations are data, not errors.
    AxiomReport check_axioms() const;

    std::string str() const;

private:
    Element normalized(std::vector<DPoly> c) const;
    void bump_bounds(int i, int j, int n, const DPoly& p);

    std::string name_;
    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
    // products_[i * ng + j] indexed by n; absent tail means zero.
    std::vector<std::vector<SparseVec>> products_;
    int max_order_ = 0;
    int max_deg_ = 0;
    bool finalized_ = false;
};

/// d^k/k! applied to an element (torsion coordinates die for k >= 1).
Element divided_power_d(const Element& x, int k);

Scalar scalar_from_integer(const Integer& n);

}  // namespace cfa

#endif
