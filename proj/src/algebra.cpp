#include "cfa/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace cfa {

Scalar scalar_from_integer(const Integer& n) { return Scalar(Rational(n)); }

// --- Element ----------------------------------------------------------------

Element::Element(const ConformalSuperalgebra* alg, std::vector<DPoly> coeffs)
    : alg_(alg), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != alg->num_generators())
        throw std::domain_error("Element: coefficient count != generator count");
    normalize();
}

void Element::normalize() {
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
        if (alg_->is_torsion(i)) c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)].constant_part();
}

Element Element::zero(const ConformalSuperalgebra& alg) {
    return Element(&alg, std::vector<DPoly>(static_cast<size_t>(alg.num_generators())));
}

Element Element::generator(const ConformalSuperalgebra& alg, int i) {
    std::vector<DPoly> c(static_cast<size_t>(alg.num_generators()));
    c[static_cast<size_t>(i)] = DPoly::one();
    return Element(&alg, std::move(c));
}

bool Element::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

Element Element::operator-() const {
    Element r(*this);
    for (auto& p : r.c_) p = -p;
    return r;
}

Element& Element::operator+=(const Element& o) {
    if (alg_ != o.alg_) throw std::domain_error("Element: mixed algebras");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (alg_ != o.alg_) throw std::domain_error("Element: mixed algebras");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Element Element::scaled(const Scalar& s) const {
    Element r(*this);
    for (auto& p : r.c_) p = p.scaled(s);
    return r;
}

Element Element::derived() const {
    Element r(*this);
    for (int i = 0; i < static_cast<int>(r.c_.size()); ++i) {
        if (alg_->is_torsion(i)) r.c_[static_cast<size_t>(i)] = DPoly();
        else r.c_[static_cast<size_t>(i)] = r.c_[static_cast<size_t>(i)].shifted_up(1);
    }
    return r;
}

Element Element::poly_scaled(const DPoly& p) const {
    Element r(*this);
    for (int i = 0; i < static_cast<int>(r.c_.size()); ++i) {
        r.c_[static_cast<size_t>(i)] = r.c_[static_cast<size_t>(i)] * p;
        if (alg_->is_torsion(i)) r.c_[static_cast<size_t>(i)] = r.c_[static_cast<size_t>(i)].constant_part();
    }
    return r;
}

std::optional<int> Element::parity() const {
    std::optional<int> p;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        int q = alg_->parity(i);
        if (!p) p = q;
        else if (*p != q) return std::nullopt;
    }
    return p ? p : std::optional<int>(0);
}

std::string Element::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        const DPoly& p = c_[static_cast<size_t>(i)];
        if (p.is_zero()) continue;
        std::string ps = p.str();
        if (!first) os << " + ";
        if (ps == "1") os << alg_->generator_info(i).name;
        else if (ps == "-1") os << "-" << alg_->generator_info(i).name;
        else if (p.degree() > 0 && p.coeffs().size() > 1)
            os << "(" << ps << ")" << alg_->generator_info(i).name;
        else os << ps << (p.degree() > 0 ? "" : "*") << alg_->generator_info(i).name;
        first = false;
    }
    return os.str();
}

SparseVec Element::sparse() const {
    SparseVec v;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
        if (!c_[static_cast<size_t>(i)].is_zero()) v.emplace_back(i, c_[static_cast<size_t>(i)]);
    return v;
}

Element divided_power_d(const Element& x, int k) {
    if (k == 0) return x;
    Integer f = 1;
    for (int t = 2; t <= k; ++t) f *= t;
    Element r = x;
    for (int t = 0; t < k; ++t) r = r.derived();
    return r.scaled(Scalar(1) / scalar_from_integer(f));
}

// --- ConformalSuperalgebra ---------------------------------------------------

ConformalSuperalgebra::ConformalSuperalgebra(std::string name, std::vector<Generator> gens)
    : name_(std::move(name)), gens_(std::move(gens)) {
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
        if (index_.count(gens_[static_cast<size_t>(i)].name))
            throw std::domain_error("ConformalSuperalgebra: duplicate generator " + gens_[static_cast<size_t>(i)].name);
        index_[gens_[static_cast<size_t>(i)].name] = i;
    }
    products_.assign(gens_.size() * gens_.size(), {});
}

int ConformalSuperalgebra::generator_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

Size ConformalSuperalgebra::size() const {
    Size s;
    for (const auto& g : gens_) {
        if (g.torsion) s.d += 1;
        else s.r += 1;
    }
    return s;
}

void ConformalSuperalgebra::bump_bounds(int /*i*/, int /*j*/, int n, const DPoly& p) {
    if (n + 1 > max_order_) max_order_ = n + 1;
    if (p.degree() > max_deg_) max_deg_ = p.degree();
}

void ConformalSuperalgebra::set_product(int i, int j, int n, const SparseVec& value) {
    if (finalized_) throw std::logic_error("ConformalSuperalgebra: frozen");
    int ng = num_generators();
    if (i < 0 || i >= ng || j < 0 || j >= ng || n < 0)
        throw std::domain_error("set_product: index out of range");
    for (const auto& [g, p] : value)
        if (g < 0 || g >= ng) throw std::domain_error("set_product: coefficient index out of range");
    auto& slot = products_[static_cast<size_t>(i) * gens_.size() + static_cast<size_t>(j)];
    if (static_cast<int>(slot.size()) <= n) slot.resize(static_cast<size_t>(n) + 1);
    SparseVec clean;
    for (const auto& [g, p] : value) {
        DPoly q = gens_[static_cast<size_t>(g)].torsion ? p.constant_part() : p;
        if (q.is_zero()) continue;
        bump_bounds(i, j, n, q);
        clean.emplace_back(g, q);
    }
    slot[static_cast<size_t>(n)] = std::move(clean);
}

void ConformalSuperalgebra::set_product(int i, int j, int n, const Element& value) {
    set_product(i, j, n, value.sparse());
}

Element ConformalSuperalgebra::skew_mirror(int i, int j, int n) const {
    // a^j_(n) a^i = (-1)^{p_i p_j} sum_k (-1)^{k+n+1} (d^k/k!) (a^i_(n+k) a^j)
    Element acc = Element::zero(*this);
    int bound = order_bound(i, j);
    for (int k = 0; n + k < bound; ++k) {
        const SparseVec* sv = product(i, j, n + k);
        if (!sv || sv->empty()) continue;
        Element term = divided_power_d(product_element(i, j, n + k), k);
        if ((k + n + 1) & 1) term = -term;
        acc += term;
    }
    if (parity(i) && parity(j)) acc = -acc;
    return acc;
}

void ConformalSuperalgebra::complete_by_skew() {
    int ng = num_generators();
    std::vector<std::pair<int, int>> given;
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j)
            if (!products_[static_cast<size_t>(i) * ng + static_cast<size_t>(j)].empty()) given.emplace_back(i, j);
    for (auto [i, j] : given) {
        if (i == j) continue;
        if (!products_[static_cast<size_t>(j) * ng + static_cast<size_t>(i)].empty()) continue;
        for (int n = 0; n < order_bound(i, j); ++n) {
            Element mirror = skew_mirror(i, j, n);
            if (!mirror.is_zero()) set_product(j, i, n, mirror);
        }
    }
}

void ConformalSuperalgebra::finalize() { finalized_ = true; }

int ConformalSuperalgebra::order_bound(int i, int j) const {
    const auto& slot = products_[static_cast<size_t>(i) * gens_.size() + static_cast<size_t>(j)];
    for (int n = static_cast<int>(slot.size()); n-- > 0;)
        if (!slot[static_cast<size_t>(n)].empty()) return n + 1;
    return 0;
}

const SparseVec* ConformalSuperalgebra::product(int i, int j, int n) const {
    const auto& slot = products_[static_cast<size_t>(i) * gens_.size() + static_cast<size_t>(j)];
    if (n < 0 || n >= static_cast<int>(slot.size())) return nullptr;
    return &slot[static_cast<size_t>(n)];
}

Element ConformalSuperalgebra::product_element(int i, int j, int n) const {
    std::vector<DPoly> c(static_cast<size_t>(num_generators()));
    if (const SparseVec* sv = product(i, j, n))
        for (const auto& [g, p] : *sv) c[static_cast<size_t>(g)] = p;
    return Element(this, std::move(c));
}

std::vector<TableRow> ConformalSuperalgebra::lambda_table() const {
    std::vector<TableRow> rows;
    for (int i = 0; i < num_generators(); ++i)
        for (int j = 0; j < num_generators(); ++j)
            for (int n = 0; n < order_bound(i, j); ++n) {
                const SparseVec* sv = product(i, j, n);
                if (sv && !sv->empty()) rows.push_back({i, j, n, product_element(i, j, n)});
            }
    return rows;
}

Element ConformalSuperalgebra::nth_product(const Element& x, const Element& y, int n) const {
    if (x.algebra() != this || y.algebra() != this)
        throw std::domain_error("nth_product: mixed algebras");
    std::vector<DPoly> acc(static_cast<size_t>(num_generators()));
    for (int gi = 0; gi < num_generators(); ++gi) {
        const DPoly& p = x.coeff(gi);
        if (p.is_zero()) continue;
        for (int gj = 0; gj < num_generators(); ++gj) {
            const DPoly& q = y.coeff(gj);
            if (q.is_zero()) continue;
            if (order_bound(gi, gj) == 0) continue;
            for (int k = 0; k <= p.degree() && k <= n; ++k) {
                Scalar pk = p.coeff(k);
                if (pk.is_zero()) continue;
                Integer fk = falling(n, k);
                if (fk == 0) continue;
                if (k & 1) fk = -fk;
                for (int l = 0; l <= q.degree(); ++l) {
                    Scalar ql = q.coeff(l);
                    if (ql.is_zero()) continue;
                    int smax = std::min(n - k, l);
                    for (int s = 0; s <= smax; ++s) {
                        const SparseVec* sv = product(gi, gj, n - k - s);
                        if (!sv || sv->empty()) continue;
                        Integer f2 = falling(n - k, s);
                        if (f2 == 0) continue;
                        Scalar c = pk * ql * scalar_from_integer(fk * binom(l, s) * f2);
                        for (const auto& [g, r] : *sv)
                            acc[static_cast<size_t>(g)] += r.shifted_up(l - s).scaled(c);
                    }
                }
            }
        }
    }
    return Element(this, std::move(acc));
}

Element ConformalSuperalgebra::gen_act(int i, int m, const Element& x) const {
    // a^i_(m) (d^l a^g) = sum_s C(l,s) (m)_s d^{l-s} (a^i_(m-s) a^g)
    std::vector<DPoly> acc(static_cast<size_t>(num_generators()));
    for (int g = 0; g < num_generators(); ++g) {
        const DPoly& q = x.coeff(g);
        if (q.is_zero()) continue;
        if (order_bound(i, g) == 0) continue;
        for (int l = 0; l <= q.degree(); ++l) {
            Scalar ql = q.coeff(l);
            if (ql.is_zero()) continue;
            for (int s = 0; s <= std::min(m, l); ++s) {
                const SparseVec* sv = product(i, g, m - s);
                if (!sv || sv->empty()) continue;
                Integer f = binom(l, s) * falling(m, s);
                if (f == 0) continue;
                Scalar c = ql * scalar_from_integer(f);
                for (const auto& [h, r] : *sv)
                    acc[static_cast<size_t>(h)] += r.shifted_up(l - s).scaled(c);
            }
        }
    }
    return Element(this, std::move(acc));
}

Element ConformalSuperalgebra::act_on_gen(const Element& x, int j, int n) const {
    // (d^k a^g)_(n) a^j = (-1)^k (n)_k a^g_(n-k) a^j
    std::vector<DPoly> acc(static_cast<size_t>(num_generators()));
    for (int g = 0; g < num_generators(); ++g) {
        const DPoly& p = x.coeff(g);
        if (p.is_zero()) continue;
        if (order_bound(g, j) == 0) continue;
        for (int k = 0; k <= std::min(p.degree(), n); ++k) {
            Scalar pk = p.coeff(k);
            if (pk.is_zero()) continue;
            const SparseVec* sv = product(g, j, n - k);
            if (!sv || sv->empty()) continue;
            Integer f = falling(n, k);
            if (f == 0) continue;
            if (k & 1) f = -f;
            Scalar c = pk * scalar_from_integer(f);
            for (const auto& [h, r] : *sv) acc[static_cast<size_t>(h)] += r.scaled(c);
        }
    }
    return Element(this, std::move(acc));
}

std::string AxiomViolation::str() const {
    std::ostringstream os;
    os << kind << " violation at (i=" << i;
    if (j >= 0) os << ", j=" << j;
    if (k >= 0) os << ", k=" << k;
    if (m >= 0) os << ", m=" << m;
    if (n >= 0) os << ", n=" << n;
    os << "): lhs = " << lhs << ", rhs = " << rhs;
    return os.str();
}

std::string AxiomReport::str() const {
    std::ostringstream os;
    os << (pass() ? "pass" : "FAIL") << " (" << checks << " checks, " << violations.size()
       << " violations)";
    for (const auto& v : violations) os << "\n  " << v.str();
    return os.str();
}

AxiomReport ConformalSuperalgebra::check_axioms() const {
    AxiomReport rep;
    int ng = num_generators();

    // Table integrity: parity of entries, torsion rows/columns, torsion slots.
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j) {
            int want = (parity(i) + parity(j)) & 1;
            for (int n = 0; n < order_bound(i, j); ++n) {
                const SparseVec* sv = product(i, j, n);
                if (!sv) continue;
                ++rep.checks;
                for (const auto& [g, p] : *sv) {
                    if (parity(g) != want)
                        rep.violations.push_back({"parity", i, j, g, -1, n,
                                                  product_element(i, j, n).str(),
                                                  "coefficient on generator of parity " + std::to_string(parity(g))});
                    if (is_torsion(g) && p.degree() > 0)
                        rep.violations.push_back({"order", i, j, g, -1, n, p.str(), "torsion slot carries d"});
                }
                if (!sv->empty() && (is_torsion(i) || is_torsion(j)))
                    rep.violations.push_back({"torsion", i, j, -1, -1, n,
                                              product_element(i, j, n).str(),
                                              "products involving a torsion generator must vanish"});
            }
        }

    // Skew-symmetry on all generator pairs.
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j) {
            int bound = std::max(order_bound(i, j), order_bound(j, i));
            for (int n = 0; n < bound; ++n) {
                ++rep.checks;
                Element lhs = product_element(j, i, n);
                Element rhs = skew_mirror(i, j, n);
                if (lhs != rhs)
                    rep.violations.push_back({"skew", j, i, -1, -1, n, lhs.str(), rhs.str()});
            }
        }

    // Jacobi identity on generator triples:
    //   a_(m)(b_(n)c) = sum_t C(m,t) (a_(t)b)_(m+n-t) c + (-1)^{p(a)p(b)} b_(n)(a_(m)c)
    // The (m,n) window is the union of the regions where each of the three
    // terms can be structurally nonzero; outside it the identity is 0 = 0.
    std::vector<int> maxord_row(static_cast<size_t>(ng), 0);
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j)
            maxord_row[static_cast<size_t>(i)] = std::max(maxord_row[static_cast<size_t>(i)], order_bound(i, j));
    const int nbig = 2 * max_order_ + 2 * max_deg_ + 2;
    std::vector<char> seen(static_cast<size_t>(nbig) * static_cast<size_t>(nbig));
    for (int j = 0; j < ng; ++j)
        for (int k = 0; k < ng; ++k) {
            std::vector<Element> bnc;  // b_(n)c cache, filled lazily below
            for (int i = 0; i < ng; ++i) {
                if (!pair_productful(j, k) && !pair_productful(i, j) && !pair_productful(i, k))
                    continue;
                bool sign = parity(i) && parity(j);
                const int lhs_m = maxord_row[static_cast<size_t>(i)] + max_deg_;
                const int lhs_n = order_bound(j, k);
                const int cross_m = order_bound(i, k);
                const int cross_n = maxord_row[static_cast<size_t>(j)] + max_deg_;
                const int mid_sum = order_bound(i, j) - 1 + max_order_ + max_deg_;
                std::vector<std::pair<int, int>> window;
                auto push = [&](int m, int n) {
                    char& cell = seen[static_cast<size_t>(m) * nbig + static_cast<size_t>(n)];
                    if (!cell) {
                        cell = 1;
                        window.emplace_back(m, n);
                    }
                };
                for (int m = 0; m < lhs_m; ++m)
                    for (int n = 0; n < lhs_n; ++n) push(m, n);
                for (int m = 0; m < cross_m; ++m)
                    for (int n = 0; n < cross_n; ++n) push(m, n);
                if (order_bound(i, j) > 0)
                    for (int m = 0; m <= mid_sum; ++m)
                        for (int n = 0; m + n <= mid_sum; ++n) push(m, n);
                for (auto [m, n] : window)
                    seen[static_cast<size_t>(m) * nbig + static_cast<size_t>(n)] = 0;
                int need_n = 0;
                for (auto [m, n] : window) need_n = std::max(need_n, n + 1);
                while (static_cast<int>(bnc.size()) < need_n)
                    bnc.push_back(product_element(j, k, static_cast<int>(bnc.size())));
                for (auto [m, n] : window) {
                    ++rep.checks;
                    Element lhs = gen_act(i, m, bnc[static_cast<size_t>(n)]);
                    Element rhs = Element::zero(*this);
                    for (int t = 0; t <= std::min(m, order_bound(i, j) - 1); ++t) {
                        Element term = act_on_gen(product_element(i, j, t), k, m + n - t);
                        if (term.is_zero()) continue;
                        rhs += term.scaled(scalar_from_integer(binom(m, t)));
                    }
                    Element cross = gen_act(j, n, product_element(i, k, m));
                    rhs += sign ? -cross : cross;
                    if (lhs != rhs)
                        rep.violations.push_back({"jacobi", i, j, k, m, n, lhs.str(), rhs.str()});
                }
            }
        }

    // Sesquilinearity re-asserted on d-shifted generators up to degree 3.
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j) {
            if (!pair_productful(i, j)) continue;
            for (int deg = 0; deg <= 3; ++deg) {
                Element x = Element::generator(*this, i);
                for (int t = 0; t < deg; ++t) x = x.derived();
                Element y = Element::generator(*this, j);
                int bound = order_bound(i, j) + deg + 1;
                for (int n = 0; n < bound; ++n) {
                    ++rep.checks;
                    Element dl = nth_product(x.derived(), y, n);
                    Element dr = (n == 0) ? Element::zero(*this) : nth_product(x, y, n - 1).scaled(Scalar(-n));
                    if (dl != dr)
                        rep.violations.push_back({"sesquilinear", i, j, -1, deg, n, dl.str(), dr.str()});
                    Element cl = nth_product(x, y.derived(), n);
                    Element cr = nth_product(x, y, n).derived();
                    if (n > 0) cr += nth_product(x, y, n - 1).scaled(Scalar(n));
                    if (cl != cr)
                        rep.violations.push_back({"sesquilinear", i, j, -1, deg, n, cl.str(), cr.str()});
                }
            }
        }

    return rep;
}

std::string ConformalSuperalgebra::str() const {
    std::ostringstream os;
    os << "algebra " << name_ << " (size " << size().str() << ")\n";
    for (const auto& row : lambda_table())
        os << "  [" << gens_[static_cast<size_t>(row.i)].name << " " << row.n << " "
           << gens_[static_cast<size_t>(row.j)].name << "] = " << row.value.str() << "\n";
    return os.str();
}

}  // namespace cfa
