#ifndef CFA_LINALG_HPP
#define CFA_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfa/dpoly.hpp"
#include "cfa/scalar.hpp"

namespace cfa {

/// Dense matrix over the scalar field, with exact Gaussian elimination.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Scalar(0)) {}

    static ScalarMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    bool is_zero() const;

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref();
    int rank() const;
    /// Basis of {x : Ax = 0}, as columns.
    std::vector<std::vector<Scalar>> kernel() const;
    /// One solution of Ax = b, if any.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Incremental sparse row echelon over the scalar field. Rows are sorted
/// (index, coeff) lists; insertion reduces against existing pivots and keeps
/// the row when a new pivot appears. Supports rank queries and kernel
/// back-substitution for very sparse systems.
class SparseEchelon {
public:
    using Row = std::vector<std::pair<int, Scalar>>;

    /// Reduce `row` against the echelon; if nonzero remains, store it as a new
    /// pivot row and return true.
    bool add_row(Row row);
    /// Reduce without inserting; returns the reduced row.
    Row reduce(Row row) const;
    int rank() const { return static_cast<int>(order_.size()); }
    bool contains_pivot(int idx) const { return pivot_row_.size() > static_cast<size_t>(idx) && pivot_row_[static_cast<size_t>(idx)] >= 0; }

    /// Kernel basis of the system on `n_unknowns` unknowns.
    std::vector<std::vector<Scalar>> kernel(int n_unknowns) const;

private:
    std::vector<Row> rows_;
    std::vector<int> pivot_row_;  // unknown index -> row position or -1
    std::vector<int> order_;      // insertion order of pivot rows
};

struct Size {
    long r = 0;  // free rank
    long d = 0;  // dimension over the base field of the torsion part
    friend bool operator==(const Size& a, const Size& b) { return a.r == b.r && a.d == b.d; }
    friend bool operator!=(const Size& a, const Size& b) { return !(a == b); }
    /// Lexicographic on (r, d); matches "smaller module" order.
    friend bool operator<(const Size& a, const Size& b) { return a.r != b.r ? a.r < b.r : a.d < b.d; }
    std::string str() const { return "(" + std::to_string(r) + "," + std::to_string(d) + ")"; }
};

/// Rectangular matrix over the polynomial ring C[d]. Columns usually encode
/// generators of a submodule of a free module.
class PdMatrix {
public:
    PdMatrix() = default;
    PdMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static PdMatrix identity(int n);
    static PdMatrix from_columns(int rows, const std::vector<std::vector<DPoly>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    DPoly& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const DPoly& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    std::vector<DPoly> column(int c) const;
    void append_column(const std::vector<DPoly>& col);

    friend bool operator==(const PdMatrix& a, const PdMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend PdMatrix operator*(const PdMatrix& a, const PdMatrix& b);

    bool is_zero() const;
    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<DPoly> a_;
};

/// Column-style Hermite normal form: echelon by rows top-down, monic pivots,
/// entries to the right of each pivot reduced modulo it, zero columns dropped.
/// The column span over C[d] is preserved.
PdMatrix hermite_form(const PdMatrix& m);

/// Smith normal form diagonal (monic invariant factors, divisibility chain).
std::vector<DPoly> smith_diagonal(PdMatrix m);

/// Size (r, d) of the module presented by `presentation`: rows = ambient free
/// rank, columns = relations.
Size size_of(const PdMatrix& presentation);

/// Express v in the column span of `basis` (preferably Hermite-reduced;
/// any matrix works). Returns the coefficient vector or nullopt.
std::optional<std::vector<DPoly>> solve_in_span(const PdMatrix& basis, const std::vector<DPoly>& v);

/// Repeated-solve helper: Hermite form and transform are computed once.
class SpanSolver {
public:
    explicit SpanSolver(PdMatrix basis);
    /// Coefficients of v in the original basis columns, or nullopt.
    std::optional<std::vector<DPoly>> solve(const std::vector<DPoly>& v) const;
    bool contains(const std::vector<DPoly>& v) const { return solve(v).has_value(); }
    const PdMatrix& hermite() const { return h_; }
    const PdMatrix& basis() const { return basis_; }

private:
    PdMatrix basis_, h_, u_;
    std::vector<int> pivot_rows_;
};

bool membership(const std::vector<DPoly>& v, const PdMatrix& basis);

/// Columns freely generating {x : Mx = 0}.
PdMatrix kernel(const PdMatrix& m);

/// Same column span, tested through mutual membership.
bool same_span(const PdMatrix& a, const PdMatrix& b);

}  // namespace cfa

#endif
