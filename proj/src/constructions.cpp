#include "cfa/constructions.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cfa {

ConformalSuperalgebra make_virasoro() {
    ConformalSuperalgebra vir("vir", {{"L", 0, false}});
    vir.set_product(0, 0, 0, SparseVec{{0, DPoly::d()}});
    vir.set_product(0, 0, 1, SparseVec{{0, DPoly(Scalar(2))}});
    vir.finalize();
    return vir;
}

ConformalSuperalgebra make_current(const LieSuperalgebra& g) {
    g.validate();
    std::vector<Generator> gens;
    for (int i = 0; i < g.dim(); ++i) gens.push_back({g.basis(i).name, g.parity(i), false});
    ConformalSuperalgebra r("current-" + g.name(), std::move(gens));
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j) {
            SparseVec v;
            for (int k = 0; k < g.dim(); ++k) {
                Scalar c = g.bracket_coeff(i, j, k);
                if (!c.is_zero()) v.emplace_back(k, DPoly(c));
            }
            if (!v.empty()) r.set_product(i, j, 0, v);
        }
    r.finalize();
    return r;
}

ConformalSuperalgebra make_semidirect_vir_current(const LieSuperalgebra& g) {
    g.validate();
    std::vector<Generator> gens{{"L", 0, false}};
    for (int i = 0; i < g.dim(); ++i) gens.push_back({g.basis(i).name, g.parity(i), false});
    ConformalSuperalgebra r("vir+current-" + g.name(), std::move(gens));
    r.set_product(0, 0, 0, SparseVec{{0, DPoly::d()}});
    r.set_product(0, 0, 1, SparseVec{{0, DPoly(Scalar(2))}});
    for (int a = 0; a < g.dim(); ++a) {
        r.set_product(0, 1 + a, 0, SparseVec{{1 + a, DPoly::d()}});
        r.set_product(0, 1 + a, 1, SparseVec{{1 + a, DPoly::one()}});
        for (int b = 0; b < g.dim(); ++b) {
            SparseVec v;
            for (int k = 0; k < g.dim(); ++k) {
                Scalar c = g.bracket_coeff(a, b, k);
                if (!c.is_zero()) v.emplace_back(1 + k, DPoly(c));
            }
            if (!v.empty()) r.set_product(1 + a, 1 + b, 0, v);
        }
    }
    r.complete_by_skew();
    r.finalize();
    return r;
}

// --- W series ----------------------------------------------------------------

int w_generator_index(int n, uint32_t mask, int dir) {
    if (dir == 0) return n * (1 << n) + static_cast<int>(mask);
    return (dir - 1) * (1 << n) + static_cast<int>(mask);
}


static std::string w_name(uint32_t mask, int dir) {
    std::string base;
    if (mask) {
        base = "x";
        uint32_t m = mask;
        while (m) {
            int q = std::countr_zero(m);
            m &= m - 1;
            base += std::to_string(q + 1);
        }
    }
    if (dir == 0) return mask ? base : "u";
    return base + "d" + std::to_string(dir);
}

/// Convert a Grassmann element into table coefficients on the monomial block
/// (dir = 0) or a derivation block (dir >= 1) of the W-series generator
/// layout, scaled by an optional DPoly.
static void emit_grassmann(int n, const GrassmannElement& e, int dir, const DPoly& factor, SparseVec& out) {
    for (const auto& [mask, c] : e.terms()) {
        DPoly p = factor.scaled(c);
        if (p.is_zero()) continue;
        out.emplace_back(w_generator_index(n, mask, dir), p);
    }
}

static SparseVec sorted_clean(SparseVec v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [g, p] : v) {
        if (p.is_zero()) continue;
        if (!out.empty() && out.back().first == g) out.back().second += p;
        else out.emplace_back(g, p);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& t) { return t.second.is_zero(); }),
              out.end());
    return out;
}

ConformalSuperalgebra make_W(int n) {
    if (n < 0 || n > 6) throw std::domain_error("make_W: N must be in [0, 6]");
    const int pow = 1 << n;
    std::vector<Generator> gens(static_cast<size_t>((n + 1) * pow));
    for (int dir = 1; dir <= n; ++dir)
        for (uint32_t mask = 0; mask < static_cast<uint32_t>(pow); ++mask)
            gens[static_cast<size_t>(w_generator_index(n, mask, dir))] =
                {w_name(mask, dir), (std::popcount(mask) + 1) & 1, false};
    for (uint32_t mask = 0; mask < static_cast<uint32_t>(pow); ++mask)
        gens[static_cast<size_t>(w_generator_index(n, mask, 0))] = {w_name(mask, 0), std::popcount(mask) & 1, false};

    ConformalSuperalgebra r("W" + std::to_string(n), std::move(gens));

    auto xi = [&](uint32_t mask) { return GrassmannElement::monomial(n, mask, Scalar(1)); };

    // Derivation-derivation: a_(0)b = [a, b].
    for (int i = 1; i <= n; ++i)
        for (uint32_t mp = 0; mp < static_cast<uint32_t>(pow); ++mp)
            for (int j = 1; j <= n; ++j)
                for (uint32_t mq = 0; mq < static_cast<uint32_t>(pow); ++mq) {
                    int pa = (std::popcount(mp) + 1) & 1;
                    int pb = (std::popcount(mq) + 1) & 1;
                    GrassmannElement t1 = gr_mul(xi(mp), gr_derive(i, xi(mq)));
                    GrassmannElement t2 = gr_mul(xi(mq), gr_derive(j, xi(mp)));
                    SparseVec v;
                    emit_grassmann(n, t1, j, DPoly::one(), v);
                    emit_grassmann(n, t2, i, DPoly((pa && pb) ? Scalar(1) : Scalar(-1)), v);
                    v = sorted_clean(v);
                    if (!v.empty())
                        r.set_product(w_generator_index(n, mp, i), w_generator_index(n, mq, j), 0, v);
                }

    // Derivation acting on a monomial: a_(0)f = a(f), a_(1)f = -(-1)^{p(a)p(f)} f a.
    for (int i = 1; i <= n; ++i)
        for (uint32_t mp = 0; mp < static_cast<uint32_t>(pow); ++mp)
            for (uint32_t mf = 0; mf < static_cast<uint32_t>(pow); ++mf) {
                int pa = (std::popcount(mp) + 1) & 1;
                int pf = std::popcount(mf) & 1;
                int ai = w_generator_index(n, mp, i);
                int fi = w_generator_index(n, mf, 0);
                SparseVec v0;
                emit_grassmann(n, gr_mul(xi(mp), gr_derive(i, xi(mf))), 0, DPoly::one(), v0);
                v0 = sorted_clean(v0);
                if (!v0.empty()) r.set_product(ai, fi, 0, v0);
                SparseVec v1;
                emit_grassmann(n, gr_mul(xi(mf), xi(mp)), i, DPoly((pa && pf) ? Scalar(1) : Scalar(-1)), v1);
                v1 = sorted_clean(v1);
                if (!v1.empty()) r.set_product(ai, fi, 1, v1);
            }

    // Monomial-monomial: f_(0)g = -d(fg), f_(1)g = -2 fg.
    for (uint32_t mf = 0; mf < static_cast<uint32_t>(pow); ++mf)
        for (uint32_t mg = 0; mg < static_cast<uint32_t>(pow); ++mg) {
            GrassmannElement prod = gr_mul(xi(mf), xi(mg));
            if (prod.is_zero()) continue;
            int fi = w_generator_index(n, mf, 0);
            int gi = w_generator_index(n, mg, 0);
            SparseVec v0, v1;
            emit_grassmann(n, prod, 0, DPoly::monomial(Scalar(-1), 1), v0);
            emit_grassmann(n, prod, 0, DPoly(Scalar(-2)), v1);
            r.set_product(fi, gi, 0, sorted_clean(v0));
            r.set_product(fi, gi, 1, sorted_clean(v1));
        }

    r.complete_by_skew();
    r.finalize();
    return r;
}

std::vector<DPoly> divergence(int n, const std::vector<DPoly>& w_coeffs) {
    const int pow = 1 << n;
    if (static_cast<int>(w_coeffs.size()) != (n + 1) * pow)
        throw std::domain_error("divergence: coefficient count mismatch");
    std::vector<DPoly> out(static_cast<size_t>(pow));
    // Sign is the parity of the derivation P d_i, i.e. deg P + 1: this is the
    // Berezin divergence pulled back to the free presentation, and the only
    // relative sign against the +df term whose kernel is bracket-closed.
    for (int dir = 1; dir <= n; ++dir)
        for (uint32_t mask = 0; mask < static_cast<uint32_t>(pow); ++mask) {
            const DPoly& p = w_coeffs[static_cast<size_t>(w_generator_index(n, mask, dir))];
            if (p.is_zero()) continue;
            GrassmannElement dP = gr_derive(dir, GrassmannElement::monomial(n, mask, Scalar(1)));
            bool odd = (std::popcount(mask) + 1) & 1;
            for (const auto& [m2, c] : dP.terms())
                out[static_cast<size_t>(m2)] += p.scaled(odd ? -c : c);
        }
    for (uint32_t mask = 0; mask < static_cast<uint32_t>(pow); ++mask) {
        const DPoly& p = w_coeffs[static_cast<size_t>(w_generator_index(n, mask, 0))];
        if (!p.is_zero()) out[static_cast<size_t>(mask)] += p.shifted_up(1);
    }
    return out;
}

PdMatrix divergence_kernel(int n) {
    const int pow = 1 << n;
    const int wrank = (n + 1) * pow;
    // Split columns by parity so that the kernel basis stays homogeneous.
    ConformalSuperalgebra w = make_W(n);
    PdMatrix basis(wrank, 0);
    for (int par = 0; par <= 1; ++par) {
        std::vector<int> cols;
        for (int gix = 0; gix < wrank; ++gix)
            if (w.parity(gix) == par) cols.push_back(gix);
        PdMatrix block(pow, static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            std::vector<DPoly> e(static_cast<size_t>(wrank));
            e[static_cast<size_t>(cols[c])] = DPoly::one();
            std::vector<DPoly> d = divergence(n, e);
            for (int rr = 0; rr < pow; ++rr) block.at(rr, static_cast<int>(c)) = d[static_cast<size_t>(rr)];
        }
        PdMatrix ker = hermite_form(kernel(block));
        for (int kc = 0; kc < ker.cols(); ++kc) {
            std::vector<DPoly> full(static_cast<size_t>(wrank));
            for (size_t c = 0; c < cols.size(); ++c) full[static_cast<size_t>(cols[c])] = ker.at(static_cast<int>(c), kc);
            basis.append_column(full);
        }
    }
    return basis;
}

/// Build a subalgebra on an explicit free basis of a host algebra: products
/// are computed in the host and re-expressed in the basis columns. A product
/// leaving the span is a closure failure and throws.
static ConformalSuperalgebra subalgebra_on_basis(const ConformalSuperalgebra& host, const PdMatrix& basis,
                                                 const std::vector<Generator>& gens, const std::string& name) {
    SpanSolver solver(basis);
    ConformalSuperalgebra r(name, gens);
    std::vector<Element> cols;
    for (int c = 0; c < basis.cols(); ++c) {
        std::vector<DPoly> v = basis.column(c);
        cols.push_back(Element(&host, v));
    }
    for (int i = 0; i < basis.cols(); ++i)
        for (int j = 0; j < basis.cols(); ++j) {
            int deg_i = 0, deg_j = 0;
            for (const auto& p : cols[static_cast<size_t>(i)].coeffs()) deg_i = std::max(deg_i, p.degree());
            for (const auto& p : cols[static_cast<size_t>(j)].coeffs()) deg_j = std::max(deg_j, p.degree());
            int window = host.max_order() + deg_i + deg_j;
            for (int m = 0; m < window; ++m) {
                Element prod = host.nth_product(cols[static_cast<size_t>(i)], cols[static_cast<size_t>(j)], m);
                if (prod.is_zero()) continue;
                auto q = solver.solve(prod.coeffs());
                if (!q)
                    throw std::domain_error(name + ": product (" + gens[static_cast<size_t>(i)].name + " " +
                                            std::to_string(m) + " " + gens[static_cast<size_t>(j)].name +
                                            ") leaves the span");
                SparseVec v;
                for (int k = 0; k < static_cast<int>(q->size()); ++k)
                    if (!(*q)[static_cast<size_t>(k)].is_zero()) v.emplace_back(k, (*q)[static_cast<size_t>(k)]);
                r.set_product(i, j, m, v);
            }
        }
    r.finalize();
    return r;
}

ConformalSuperalgebra make_S(int n) {
    if (n < 1 || n > 6) throw std::domain_error("make_S: N must be in [1, 6]");
    ConformalSuperalgebra w = make_W(n);
    PdMatrix basis = divergence_kernel(n);
    std::vector<Generator> gens;
    for (int c = 0; c < basis.cols(); ++c) {
        std::optional<int> par;
        for (int rr = 0; rr < basis.rows(); ++rr)
            if (!basis.at(rr, c).is_zero()) {
                if (par && *par != w.parity(rr)) throw std::logic_error("make_S: mixed-parity kernel column");
                par = w.parity(rr);
            }
        gens.push_back({"s" + std::to_string(c), par.value_or(0), false});
    }
    return subalgebra_on_basis(w, basis, gens, "S" + std::to_string(n));
}

// --- K series ----------------------------------------------------------------

ConformalSuperalgebra make_K(int n) {
    if (n < 0 || n > 6) throw std::domain_error("make_K: N must be in [0, 6]");
    const int pow = 1 << n;
    std::vector<Generator> gens(static_cast<size_t>(pow));
    for (uint32_t mask = 0; mask < static_cast<uint32_t>(pow); ++mask)
        gens[static_cast<size_t>(mask)] = {w_name(mask, 0), std::popcount(mask) & 1, false};
    ConformalSuperalgebra r("K" + std::to_string(n), std::move(gens));
    auto xi = [&](uint32_t mask) { return GrassmannElement::monomial(n, mask, Scalar(1)); };

    for (uint32_t mf = 0; mf < static_cast<uint32_t>(pow); ++mf)
        for (uint32_t mg = 0; mg < static_cast<uint32_t>(pow); ++mg) {
            int df = std::popcount(mf), dg = std::popcount(mg);
            // f_(0)g = (|f|/2 - 1) d (fg) + (1/2)(-1)^{|f|} sum_i (d_i f)(d_i g)
            auto emit_k = [](const GrassmannElement& e, const DPoly& factor, SparseVec& out) {
                for (const auto& [mask, c] : e.terms()) {
                    DPoly p = factor.scaled(c);
                    if (!p.is_zero()) out.emplace_back(static_cast<int>(mask), p);
                }
            };
            SparseVec v0;
            GrassmannElement prod = gr_mul(xi(mf), xi(mg));
            if (!prod.is_zero())
                emit_k(prod, DPoly::monomial(Scalar::ratio(df, 2) - Scalar(1), 1), v0);
            GrassmannElement pairing(n);
            for (int i = 1; i <= n; ++i)
                pairing += gr_mul(gr_derive(i, xi(mf)), gr_derive(i, xi(mg)));
            if (!pairing.is_zero()) {
                Scalar c = Scalar::ratio(1, 2);
                if (df & 1) c = -c;
                emit_k(pairing, DPoly(c), v0);
            }
            v0 = sorted_clean(v0);
            if (!v0.empty()) r.set_product(static_cast<int>(mf), static_cast<int>(mg), 0, v0);
            // f_(1)g = ((|f|+|g|)/2 - 2) fg
            if (!prod.is_zero()) {
                Scalar c = Scalar::ratio(df + dg, 2) - Scalar(2);
                if (!c.is_zero()) {
                    SparseVec v1;
                    emit_k(prod, DPoly(c), v1);
                    r.set_product(static_cast<int>(mf), static_cast<int>(mg), 1, sorted_clean(v1));
                }
            }
        }
    r.finalize();
    return r;
}

ConformalSuperalgebra make_CK6() {
    const int n = 6;
    const uint32_t top = (1u << n) - 1;
    ConformalSuperalgebra k6 = make_K(n);
    auto star = [&](uint32_t mask) {
        // (xi_{i1} xi_{i2} ...)^* = d_{i1} d_{i2} ... applied to the top form,
        // innermost factor first.
        GrassmannElement e = GrassmannElement::monomial(n, top, Scalar(1));
        for (int i = n; i >= 1; --i)
            if (mask & (1u << (i - 1))) e = gr_derive(i, e);
        return e;
    };
    const Scalar alpha = Scalar::i();

    std::vector<std::vector<DPoly>> cols;
    std::vector<Generator> gens;
    auto add_col = [&](uint32_t lead, const GrassmannElement& dual, int dpow, int parity) {
        std::vector<DPoly> col(static_cast<size_t>(1 << n));
        col[static_cast<size_t>(lead)] = DPoly::one();
        for (const auto& [mask, c] : dual.terms())
            col[static_cast<size_t>(mask)] += DPoly::monomial(alpha * c, dpow);
        std::string name = "c";
        uint32_t m = lead;
        if (m == 0) name = "c0";
        while (m) {
            int q = std::countr_zero(m);
            m &= m - 1;
            name += std::to_string(q + 1);
        }
        cols.push_back(std::move(col));
        gens.push_back({name, parity, false});
    };

    // The relative signs below are tied to the composition order inside
    // star(); this combination is the one whose span closes under all
    // products (verified exhaustively over the order and sign choices).
    add_col(0, star(0), 3, 0);  // 1 + a d^3 (top form)
    for (int i = 1; i <= n; ++i)
        add_col(1u << (i - 1), star(1u << (i - 1)), 2, 1);  // xi_i + a d^2 xi_i^*
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add_col((1u << (i - 1)) | (1u << (j - 1)), star((1u << (i - 1)) | (1u << (j - 1))), 1, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l) {
                uint32_t m = (1u << (i - 1)) | (1u << (j - 1)) | (1u << (l - 1));
                if (!(m & 1u)) continue;  // complementary triples are dependent; keep those with xi_1
                add_col(m, star(m), 0, 1);
            }

    PdMatrix basis = PdMatrix::from_columns(1 << n, cols);
    return subalgebra_on_basis(k6, basis, gens, "CK6");
}

// --- gc ----------------------------------------------------------------------

bool GcElement::is_zero() const {
    for (const auto& m : mats_)
        if (!m.is_zero()) return false;
    return true;
}

int GcElement::max_entry_degree() const {
    int d = 0;
    for (const auto& m : mats_)
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) d = std::max(d, m.at(r, c).degree());
    return d;
}

const PdMatrix* GcElement::mat(int n) const {
    if (n < 0 || n >= static_cast<int>(mats_.size())) return nullptr;
    return &mats_[static_cast<size_t>(n)];
}

void GcElement::set_mat(int n, PdMatrix m) {
    if (m.rows() != rank_ || m.cols() != rank_) throw std::domain_error("GcElement: matrix shape");
    if (static_cast<int>(mats_.size()) <= n) mats_.resize(static_cast<size_t>(n) + 1, PdMatrix(rank_, rank_));
    mats_[static_cast<size_t>(n)] = std::move(m);
    trim();
}

void GcElement::trim() {
    while (!mats_.empty() && mats_.back().is_zero()) mats_.pop_back();
}

GcElement GcElement::operator-() const {
    GcElement r(*this);
    for (auto& m : r.mats_)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).is_zero()) m.at(i, j) = -m.at(i, j);
    return r;
}

GcElement& GcElement::operator+=(const GcElement& o) {
    if (rank_ != o.rank_) throw std::domain_error("GcElement: rank mismatch");
    if (mats_.size() < o.mats_.size()) mats_.resize(o.mats_.size(), PdMatrix(rank_, rank_));
    for (size_t n = 0; n < o.mats_.size(); ++n)
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) mats_[n].at(i, j) += o.mats_[n].at(i, j);
    trim();
    return *this;
}

bool operator==(const GcElement& a, const GcElement& b) {
    if (a.rank_ != b.rank_) return false;
    GcElement d = a - b;
    return d.is_zero();
}

GcElement GcElement::scaled(const Scalar& c) const {
    GcElement r(*this);
    if (c.is_zero()) {
        r.mats_.clear();
        return r;
    }
    for (auto& m : r.mats_)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j).scaled(c);
    return r;
}

GcElement GcElement::derived() const {
    // (d A)_(n) = -n A_(n-1)
    GcElement r(rank_, parity_);
    for (int n = 1; n <= static_cast<int>(mats_.size()); ++n) {
        PdMatrix m(rank_, rank_);
        const PdMatrix& src = mats_[static_cast<size_t>(n - 1)];
        bool nz = false;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (!src.at(i, j).is_zero()) {
                    m.at(i, j) = src.at(i, j).scaled(Scalar(-n));
                    nz = true;
                }
        if (nz) r.set_mat(n, std::move(m));
    }
    return r;
}

GcElement GcElement::poly_scaled(const DPoly& p) const {
    GcElement acc(rank_, parity_);
    GcElement power(*this);
    for (int k = 0; k <= p.degree(); ++k) {
        if (!p.coeff(k).is_zero()) acc += power.scaled(p.coeff(k));
        if (k < p.degree()) power = power.derived();
    }
    return acc;
}

std::vector<DPoly> GcElement::apply(int n, const std::vector<DPoly>& v) const {
    if (static_cast<int>(v.size()) != rank_) throw std::domain_error("GcElement: vector size");
    // A_(n) d^t = sum_s C(t,s) (n)_s d^{t-s} A_(n-s)
    std::vector<DPoly> out(static_cast<size_t>(rank_));
    for (int b = 0; b < rank_; ++b) {
        const DPoly& q = v[static_cast<size_t>(b)];
        if (q.is_zero()) continue;
        for (int t = 0; t <= q.degree(); ++t) {
            Scalar qt = q.coeff(t);
            if (qt.is_zero()) continue;
            for (int s = 0; s <= std::min(t, n); ++s) {
                const PdMatrix* m = mat(n - s);
                if (!m) continue;
                Integer f = binom(t, s) * falling(n, s);
                if (f == 0) continue;
                Scalar c = qt * scalar_from_integer(f);
                for (int a = 0; a < rank_; ++a) {
                    const DPoly& e = m->at(a, b);
                    if (!e.is_zero()) out[static_cast<size_t>(a)] += e.shifted_up(t - s).scaled(c);
                }
            }
        }
    }
    return out;
}

std::string GcElement::str() const {
    std::ostringstream os;
    os << "gc" << rank_ << " element";
    for (int n = 0; n < static_cast<int>(mats_.size()); ++n) {
        if (mats_[static_cast<size_t>(n)].is_zero()) continue;
        os << "\n A_(" << n << ") =\n" << mats_[static_cast<size_t>(n)].str();
    }
    return os.str();
}

GcElement gc_nth_product(const GcElement& a, const GcElement& b, int m) {
    if (a.rank() != b.rank()) throw std::domain_error("gc_nth_product: rank mismatch");
    const int rank = a.rank();
    GcElement out(rank, (a.parity() + b.parity()) & 1);
    bool sign = a.parity() && b.parity();
    int nbound = a.support_bound() + b.support_bound() + a.max_entry_degree() + b.max_entry_degree() + 1;
    for (int n = 0; n < nbound; ++n) {
        PdMatrix mn(rank, rank);
        bool nz = false;
        for (int j = 0; j <= m; ++j) {
            Integer c = binom(m, j);
            if ((m + j) & 1) c = -c;
            Scalar cs = scalar_from_integer(c);
            for (int bcol = 0; bcol < rank; ++bcol) {
                std::vector<DPoly> e(static_cast<size_t>(rank));
                e[static_cast<size_t>(bcol)] = DPoly::one();
                std::vector<DPoly> ab = a.apply(j, b.apply(m + n - j, e));
                std::vector<DPoly> ba = b.apply(m + n - j, a.apply(j, e));
                for (int r = 0; r < rank; ++r) {
                    DPoly term = sign ? ab[static_cast<size_t>(r)] + ba[static_cast<size_t>(r)]
                                      : ab[static_cast<size_t>(r)] - ba[static_cast<size_t>(r)];
                    if (term.is_zero()) continue;
                    mn.at(r, bcol) += term.scaled(cs);
                    nz = true;
                }
            }
        }
        if (nz) out.set_mat(n, std::move(mn));
    }
    return out;
}

}  // namespace cfa
