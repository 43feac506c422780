#ifndef CFA_LIE_HPP
#define CFA_LIE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfa/linalg.hpp"
#include "cfa/scalar.hpp"

namespace cfa {

/// Finite-dimensional Lie superalgebra with an ordered basis and structure
/// constants [a, b] = sum c^k_{ab} e_k. Super-antisymmetry and the Jacobi
/// identity are verified at construction.
class LieSuperalgebra {
public:
    struct Basis {
        std::string name;
        int parity = 0;
    };

    LieSuperalgebra(std::string name, std::vector<Basis> basis);

    /// Set [e_i, e_j]; the opposite bracket is filled by super-antisymmetry.
    void set_bracket(int i, int j, const std::vector<Scalar>& value);
    /// Throws std::domain_error with a witness on antisymmetry/Jacobi failure.
    void validate() const;

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const Basis& basis(int i) const { return basis_[static_cast<size_t>(i)]; }
    int parity(int i) const { return basis_[static_cast<size_t>(i)].parity; }
    int index(const std::string& name) const;

    std::vector<Scalar> bracket(int i, int j) const;
    Scalar bracket_coeff(int i, int j, int k) const;

    /// Matrix of ad(e_i) in the chosen basis.
    ScalarMatrix ad(int i) const;
    /// Killing form (a|b) = trace(ad a . ad b) (supertrace for superalgebras).
    Scalar killing(int i, int j) const;

    // Stock examples used throughout the test and CLI surface.
    static LieSuperalgebra sl2();
    static LieSuperalgebra gl2();
    static LieSuperalgebra heisenberg3();
    static LieSuperalgebra borel_sl2();
    static LieSuperalgebra abelian(int n);

private:
    std::string name_;
    std::vector<Basis> basis_;
    std::map<std::pair<int, int>, std::vector<Scalar>> brackets_;
};

}  // namespace cfa

#endif
