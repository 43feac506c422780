#include "cfa/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cfa {

ScalarMatrix ScalarMatrix::identity(int n) {
    ScalarMatrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
    return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw std::domain_error("ScalarMatrix: shape mismatch");
    ScalarMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<int> ScalarMatrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int k = r; k < rows_; ++k)
            if (!at(k, c).is_zero()) { p = k; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Scalar inv = Scalar(1) / at(r, c);
        for (int j = c; j < cols_; ++j) at(r, j) *= inv;
        for (int k = 0; k < rows_; ++k) {
            if (k == r || at(k, c).is_zero()) continue;
            Scalar f = at(k, c);
            for (int j = c; j < cols_; ++j) at(k, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int ScalarMatrix::rank() const {
    ScalarMatrix m(*this);
    return static_cast<int>(m.rref().size());
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel() const {
    ScalarMatrix m(*this);
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(cols_), Scalar(0));
        v[static_cast<size_t>(f)] = Scalar(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<size_t>(pivots[k])] = -m.at(static_cast<int>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> ScalarMatrix::solve(const std::vector<Scalar>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::domain_error("ScalarMatrix: rhs size mismatch");
    ScalarMatrix m(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        m.at(i, cols_) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = m.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Scalar> x(static_cast<size_t>(cols_), Scalar(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[static_cast<size_t>(pivots[k])] = m.at(static_cast<int>(k), cols_);
    return x;
}

// ---------------------------------------------------------------------------

static void sparse_axpy(SparseEchelon::Row& row, const Scalar& f, const SparseEchelon::Row& other) {
    // row += f * other, keeping sorted order and dropping zeros.
    SparseEchelon::Row out;
    out.reserve(row.size() + other.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
        if (j >= other.size() || (i < row.size() && row[i].first < other[j].first)) {
            out.push_back(row[i++]);
        } else if (i >= row.size() || other[j].first < row[i].first) {
            out.emplace_back(other[j].first, f * other[j].second);
            ++j;
        } else {
            Scalar c = row[i].second + f * other[j].second;
            if (!c.is_zero()) out.emplace_back(row[i].first, c);
            ++i;
            ++j;
        }
    }
    row = std::move(out);
}

SparseEchelon::Row SparseEchelon::reduce(Row row) const {
    Row out;
    while (!row.empty()) {
        int lead = row[0].first;
        if (static_cast<size_t>(lead) < pivot_row_.size() && pivot_row_[static_cast<size_t>(lead)] >= 0) {
            const Row& pr = rows_[static_cast<size_t>(pivot_row_[static_cast<size_t>(lead)])];
            sparse_axpy(row, -row[0].second, pr);  // pivot rows are normalized to 1
        } else {
            out.push_back(row[0]);
            row.erase(row.begin());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SparseEchelon::add_row(Row row) {
    std::sort(row.begin(), row.end());
    // merge duplicate indices defensively
    Row merged;
    for (auto& t : row) {
        if (!merged.empty() && merged.back().first == t.first) merged.back().second += t.second;
        else merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.second.is_zero(); }),
                 merged.end());
    row = std::move(merged);
    while (!row.empty()) {
        int lead = row[0].first;
        if (static_cast<size_t>(lead) < pivot_row_.size() && pivot_row_[static_cast<size_t>(lead)] >= 0) {
            const Row& pr = rows_[static_cast<size_t>(pivot_row_[static_cast<size_t>(lead)])];
            sparse_axpy(row, -row[0].second, pr);
            continue;
        }
        Scalar inv = Scalar(1) / row[0].second;
        for (auto& t : row) t.second *= inv;
        if (pivot_row_.size() <= static_cast<size_t>(lead)) pivot_row_.resize(static_cast<size_t>(lead) + 1, -1);
        pivot_row_[static_cast<size_t>(lead)] = static_cast<int>(rows_.size());
        order_.push_back(lead);
        rows_.push_back(std::move(row));
        return true;
    }
    return false;
}

std::vector<std::vector<Scalar>> SparseEchelon::kernel(int n_unknowns) const {
    std::vector<bool> is_pivot(static_cast<size_t>(n_unknowns), false);
    for (int p : order_)
        if (p < n_unknowns) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<int> pivots_desc = order_;
    std::sort(pivots_desc.begin(), pivots_desc.end(), std::greater<int>());
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < n_unknowns; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Scalar> x(static_cast<size_t>(n_unknowns), Scalar(0));
        x[static_cast<size_t>(f)] = Scalar(1);
        for (int p : pivots_desc) {
            const Row& row = rows_[static_cast<size_t>(pivot_row_[static_cast<size_t>(p)])];
            Scalar acc(0);
            for (auto& [idx, c] : row)
                if (idx != p && !x[static_cast<size_t>(idx)].is_zero()) acc += c * x[static_cast<size_t>(idx)];
            x[static_cast<size_t>(p)] = -acc;  // pivot coefficient is 1
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// ---------------------------------------------------------------------------

PdMatrix PdMatrix::identity(int n) {
    PdMatrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = DPoly::one();
    return m;
}

PdMatrix PdMatrix::from_columns(int rows, const std::vector<std::vector<DPoly>>& cols) {
    PdMatrix m(rows, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        if (static_cast<int>(cols[c].size()) != rows) throw std::domain_error("PdMatrix: column size mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = cols[c][static_cast<size_t>(r)];
    }
    return m;
}

std::vector<DPoly> PdMatrix::column(int c) const {
    std::vector<DPoly> v(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[static_cast<size_t>(r)] = at(r, c);
    return v;
}

void PdMatrix::append_column(const std::vector<DPoly>& col) {
    if (static_cast<int>(col.size()) != rows_) throw std::domain_error("PdMatrix: column size mismatch");
    PdMatrix m(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        m.at(r, cols_) = col[static_cast<size_t>(r)];
    }
    *this = std::move(m);
}

PdMatrix operator*(const PdMatrix& a, const PdMatrix& b) {
    if (a.cols_ != b.rows_) throw std::domain_error("PdMatrix: shape mismatch");
    PdMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

bool PdMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::string PdMatrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << "[ ";
        for (int c = 0; c < cols_; ++c) os << at(r, c).str() << (c + 1 < cols_ ? ", " : " ");
        os << "]\n";
    }
    return os.str();
}

namespace {

struct HnfWork {
    std::vector<std::vector<DPoly>> cols;   // working columns
    std::vector<std::vector<DPoly>> trans;  // transformation columns (identity-sized)
    int rows = 0;
    bool track = false;

    void axpy(int dst, int src, const DPoly& q) {
        // col_dst -= q * col_src
        for (int r = 0; r < rows; ++r) {
            if (cols[static_cast<size_t>(src)][static_cast<size_t>(r)].is_zero()) continue;
            cols[static_cast<size_t>(dst)][static_cast<size_t>(r)] -=
                q * cols[static_cast<size_t>(src)][static_cast<size_t>(r)];
        }
        if (track)
            for (size_t r = 0; r < trans[static_cast<size_t>(src)].size(); ++r) {
                if (trans[static_cast<size_t>(src)][r].is_zero()) continue;
                trans[static_cast<size_t>(dst)][r] -= q * trans[static_cast<size_t>(src)][r];
            }
    }
    void scale(int c, const Scalar& f) {
        for (auto& e : cols[static_cast<size_t>(c)]) e = e.scaled(f);
        if (track)
            for (auto& e : trans[static_cast<size_t>(c)]) e = e.scaled(f);
    }
    void swap_cols(int a, int b) {
        std::swap(cols[static_cast<size_t>(a)], cols[static_cast<size_t>(b)]);
        if (track) std::swap(trans[static_cast<size_t>(a)], trans[static_cast<size_t>(b)]);
    }
};

struct HnfResult {
    PdMatrix h;                   // Hermite form (zero columns dropped)
    std::vector<int> pivot_rows;  // pivot row of each kept column
    PdMatrix u;                   // original-coordinates transform of kept columns
    PdMatrix u_kernel;            // transform columns mapping to zero (kernel of M)
};

HnfResult hermite_with_transform(const PdMatrix& m, bool track) {
    HnfWork w;
    w.rows = m.rows();
    w.track = track;
    int nc = m.cols();
    w.cols.resize(static_cast<size_t>(nc));
    for (int c = 0; c < nc; ++c) w.cols[static_cast<size_t>(c)] = m.column(c);
    if (track) {
        w.trans.assign(static_cast<size_t>(nc), std::vector<DPoly>(static_cast<size_t>(nc)));
        for (int c = 0; c < nc; ++c) w.trans[static_cast<size_t>(c)][static_cast<size_t>(c)] = DPoly::one();
    }

    std::vector<int> pivot_rows;
    int next = 0;
    for (int r = 0; r < w.rows && next < nc; ++r) {
        // Euclidean elimination among active columns at row r.
        for (;;) {
            int best = -1;
            for (int c = next; c < nc; ++c) {
                const DPoly& e = w.cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
                if (e.is_zero()) continue;
                if (best < 0 || e.degree() < w.cols[static_cast<size_t>(best)][static_cast<size_t>(r)].degree())
                    best = c;
            }
            if (best < 0) break;
            bool others = false;
            const DPoly piv = w.cols[static_cast<size_t>(best)][static_cast<size_t>(r)];
            for (int c = next; c < nc; ++c) {
                if (c == best) continue;
                const DPoly& e = w.cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
                if (e.is_zero()) continue;
                others = true;
                w.axpy(c, best, e.divmod(piv).first);
            }
            if (!others) {
                w.swap_cols(next, best);
                w.scale(next, Scalar(1) / w.cols[static_cast<size_t>(next)][static_cast<size_t>(r)].leading());
                // Reduce earlier columns at this pivot row.
                for (int c = 0; c < next; ++c) {
                    const DPoly& e = w.cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
                    if (e.is_zero()) continue;
                    DPoly q = e.divmod(w.cols[static_cast<size_t>(next)][static_cast<size_t>(r)]).first;
                    if (!q.is_zero()) w.axpy(c, next, q);
                }
                pivot_rows.push_back(r);
                ++next;
                break;
            }
        }
    }

    HnfResult res;
    res.pivot_rows = pivot_rows;
    res.h = PdMatrix(w.rows, next);
    for (int c = 0; c < next; ++c)
        for (int r = 0; r < w.rows; ++r) res.h.at(r, c) = w.cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
    if (track) {
        res.u = PdMatrix(nc, next);
        for (int c = 0; c < next; ++c)
            for (int r = 0; r < nc; ++r) res.u.at(r, c) = w.trans[static_cast<size_t>(c)][static_cast<size_t>(r)];
        res.u_kernel = PdMatrix(nc, nc - next);
        for (int c = next; c < nc; ++c)
            for (int r = 0; r < nc; ++r) res.u_kernel.at(r, c - next) = w.trans[static_cast<size_t>(c)][static_cast<size_t>(r)];
    }
    return res;
}

}  // namespace

PdMatrix hermite_form(const PdMatrix& m) { return hermite_with_transform(m, false).h; }

PdMatrix kernel(const PdMatrix& m) { return hermite_with_transform(m, true).u_kernel; }

std::vector<DPoly> smith_diagonal(PdMatrix m) {
    std::vector<DPoly> diag;
    int t = 0;
    int nr = m.rows(), nc = m.cols();
    auto row_axpy = [&](int dst, int src, const DPoly& q) {
        for (int c = 0; c < nc; ++c)
            if (!m.at(src, c).is_zero()) m.at(dst, c) -= q * m.at(src, c);
    };
    auto col_axpy = [&](int dst, int src, const DPoly& q) {
        for (int r = 0; r < nr; ++r)
            if (!m.at(r, src).is_zero()) m.at(r, dst) -= q * m.at(r, src);
    };
    while (t < nr && t < nc) {
        int br = -1, bc = -1;
        for (int r = t; r < nr; ++r)
            for (int c = t; c < nc; ++c)
                if (!m.at(r, c).is_zero() &&
                    (br < 0 || m.at(r, c).degree() < m.at(br, bc).degree())) {
                    br = r;
                    bc = c;
                }
        if (br < 0) break;
        if (br != t)
            for (int c = 0; c < nc; ++c) std::swap(m.at(br, c), m.at(t, c));
        if (bc != t)
            for (int r = 0; r < nr; ++r) std::swap(m.at(r, bc), m.at(r, t));
        bool clean = true;
        for (int r = t + 1; r < nr; ++r) {
            if (m.at(r, t).is_zero()) continue;
            row_axpy(r, t, m.at(r, t).divmod(m.at(t, t)).first);
            if (!m.at(r, t).is_zero()) clean = false;
        }
        for (int c = t + 1; c < nc; ++c) {
            if (m.at(t, c).is_zero()) continue;
            col_axpy(c, t, m.at(t, c).divmod(m.at(t, t)).first);
            if (!m.at(t, c).is_zero()) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; repeat pivot hunt
        // Divisibility pass: the pivot must divide the rest of the submatrix.
        bool divides = true;
        for (int r = t + 1; r < nr && divides; ++r)
            for (int c = t + 1; c < nc && divides; ++c) {
                if (m.at(r, c).is_zero()) continue;
                if (!m.at(r, c).divmod(m.at(t, t)).second.is_zero()) {
                    for (int cc = 0; cc < nc; ++cc)
                        if (!m.at(r, cc).is_zero()) m.at(t, cc) += m.at(r, cc);
                    divides = false;
                }
            }
        if (!divides) continue;
        diag.push_back(m.at(t, t).monic());
        ++t;
    }
    return diag;
}

Size size_of(const PdMatrix& presentation) {
    std::vector<DPoly> diag = smith_diagonal(presentation);
    Size s;
    s.r = presentation.rows() - static_cast<long>(diag.size());
    for (const auto& e : diag) s.d += e.degree();
    return s;
}

SpanSolver::SpanSolver(PdMatrix basis) : basis_(std::move(basis)) {
    HnfResult res = hermite_with_transform(basis_, true);
    h_ = std::move(res.h);
    u_ = std::move(res.u);
    pivot_rows_ = std::move(res.pivot_rows);
}

std::optional<std::vector<DPoly>> SpanSolver::solve(const std::vector<DPoly>& v) const {
    if (static_cast<int>(v.size()) != basis_.rows()) throw std::domain_error("solve_in_span: dimension mismatch");
    std::vector<DPoly> w = v;
    std::vector<DPoly> q(static_cast<size_t>(h_.cols()));
    for (int j = 0; j < h_.cols(); ++j) {
        int r = pivot_rows_[static_cast<size_t>(j)];
        if (w[static_cast<size_t>(r)].is_zero()) continue;
        auto [quot, rem] = w[static_cast<size_t>(r)].divmod(h_.at(r, j));
        if (!rem.is_zero()) return std::nullopt;
        q[static_cast<size_t>(j)] = quot;
        for (int rr = 0; rr < basis_.rows(); ++rr)
            if (!h_.at(rr, j).is_zero()) w[static_cast<size_t>(rr)] -= quot * h_.at(rr, j);
    }
    for (const auto& e : w)
        if (!e.is_zero()) return std::nullopt;
    // Map Hermite-basis coefficients back to the caller's columns.
    std::vector<DPoly> x(static_cast<size_t>(basis_.cols()));
    for (int j = 0; j < u_.cols(); ++j) {
        if (q[static_cast<size_t>(j)].is_zero()) continue;
        for (int r = 0; r < basis_.cols(); ++r)
            if (!u_.at(r, j).is_zero()) x[static_cast<size_t>(r)] += q[static_cast<size_t>(j)] * u_.at(r, j);
    }
    return x;
}

std::optional<std::vector<DPoly>> solve_in_span(const PdMatrix& basis, const std::vector<DPoly>& v) {
    return SpanSolver(basis).solve(v);
}

bool membership(const std::vector<DPoly>& v, const PdMatrix& basis) {
    return solve_in_span(basis, v).has_value();
}

bool same_span(const PdMatrix& a, const PdMatrix& b) { return hermite_form(a) == hermite_form(b); }

}  // namespace cfa
