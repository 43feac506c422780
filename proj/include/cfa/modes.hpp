#ifndef CFA_MODES_HPP
#define CFA_MODES_HPP

#include <string>
#include <vector>

#include "cfa/algebra.hpp"

namespace cfa {

class ConformalModule;

/// Truncated structure constants of the mode Lie superalgebra of a finite
/// free conformal superalgebra: basis elements are generator modes (g, m)
/// with m in a window [lo, hi] (torsion generators contribute only the mode
/// m = -1), brackets are expanded by
///   [a_(m), b_(n)] = sum_j C(m,j) (a_(j)b)_(m+n-j).
/// Pairs whose expansion has a nonzero coefficient falling outside the window
/// are flagged truncated and skipped (and counted) by consistency checks.
class ModeTable {
public:
    struct Mode {
        int gen;
        int m;
    };
    using Combination = std::vector<std::pair<int, Scalar>>;  // (mode index, coeff)

    ModeTable(const ConformalSuperalgebra& alg, int lo, int hi);

    const ConformalSuperalgebra& algebra() const { return *alg_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int num_modes() const { return static_cast<int>(modes_.size()); }
    const Mode& mode(int idx) const { return modes_[static_cast<size_t>(idx)]; }
    int mode_index(int gen, int m) const;  // -1 when absent
    int parity_of(int idx) const { return alg_->parity(modes_[static_cast<size_t>(idx)].gen); }

    const Combination* bracket(int xi, int yi) const;
    bool truncated(int xi, int yi) const;
    long truncated_pairs() const { return truncated_count_; }

    std::string str() const;

private:
    const ConformalSuperalgebra* alg_;
    int lo_, hi_;
    std::vector<Mode> modes_;
    std::vector<int> base_;  // per generator, offset of its mode block (-1 if none)
    std::vector<Combination> brackets_;
    std::vector<char> trunc_;
    long truncated_count_ = 0;

    friend ModeTable expand_modes(const ConformalSuperalgebra&, int, int);
};

ModeTable expand_modes(const ConformalSuperalgebra& alg, int lo, int hi);

struct ModeViolation {
    std::string kind;  // "antisymmetry" or "jacobi"
    int x, y, z;       // mode indices (z = -1 for pair checks)
    std::string detail;
};

struct ModeReport {
    std::vector<ModeViolation> violations;
    long checked = 0;
    long skipped = 0;  // triples skipped because of window truncation
    bool pass() const { return violations.empty(); }
};

/// Super-antisymmetry and super-Jacobi on all in-window triples whose
/// intermediate brackets stay in the window.
ModeReport jacobi_check(const ModeTable& table);

/// 1 + max{n : a^i_(n) a^j != 0}, and 0 when the pair commutes.
int locality_order(const ConformalSuperalgebra& alg, int i, int j);

/// Mode actions of a free conformal module: a_(m) v_(n) expanded like the
/// algebra brackets; torsion module coordinates contribute mode -1 only.
class ModuleModeTable {
public:
    using Combination = std::vector<std::pair<int, Scalar>>;

    ModuleModeTable(const ConformalModule& mod, const ModeTable& algebra_modes);

    int num_vector_modes() const { return static_cast<int>(vmodes_.size()); }
    const ModeTable::Mode& vector_mode(int idx) const { return vmodes_[static_cast<size_t>(idx)]; }
    int vector_mode_index(int basis, int n) const;

    /// Action of algebra mode x on vector mode v; nullptr if truncated.
    const Combination* action(int x, int v) const;
    bool truncated(int x, int v) const;

    /// Commutator consistency [a_(m), b_(n)] v = (bracket action) v in-window.
    ModeReport consistency_check() const;

private:
    const ConformalModule* mod_;
    const ModeTable* amodes_;
    std::vector<ModeTable::Mode> vmodes_;
    std::vector<int> vbase_;
    std::vector<Combination> actions_;
    std::vector<char> trunc_;
};

}  // namespace cfa

#endif
