#include "cfa/grassmann.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cfa {

GrassmannElement GrassmannElement::generator(int n, int i) {
    if (i < 1 || i > n) throw std::domain_error("Grassmann: generator index out of range");
    return monomial(n, 1u << (i - 1), Scalar(1));
}

GrassmannElement GrassmannElement::monomial(int n, uint32_t mask, const Scalar& c) {
    GrassmannElement e(n);
    if (mask >= (1u << n)) throw std::domain_error("Grassmann: monomial outside algebra");
    if (!c.is_zero()) e.terms_[mask] = c;
    return e;
}

Scalar GrassmannElement::coeff(uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> GrassmannElement::parity() const {
    std::optional<int> p;
    for (auto& [mask, c] : terms_) {
        int q = std::popcount(mask) & 1;
        if (!p) p = q;
        else if (*p != q) return std::nullopt;
    }
    return p ? p : std::optional<int>(0);
}

std::optional<int> GrassmannElement::degree() const {
    std::optional<int> d;
    for (auto& [mask, c] : terms_) {
        int q = std::popcount(mask);
        if (!d) d = q;
        else if (*d != q) return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement r(*this);
    for (auto& [mask, c] : r.terms_) c = -c;
    return r;
}

void GrassmannElement::add_term(uint32_t mask, const Scalar& c) {
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(mask, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
    if (n_ != o.n_) throw std::domain_error("Grassmann: mixed indeterminate counts");
    for (auto& [mask, c] : o.terms_) add_term(mask, c);
    return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
    if (n_ != o.n_) throw std::domain_error("Grassmann: mixed indeterminate counts");
    for (auto& [mask, c] : o.terms_) add_term(mask, -c);
    return *this;
}

GrassmannElement GrassmannElement::scaled(const Scalar& c) const {
    GrassmannElement r(n_);
    if (c.is_zero()) return r;
    for (auto& [mask, v] : terms_) r.terms_[mask] = v * c;
    return r;
}

int GrassmannElement::merge_sign(uint32_t a, uint32_t b) {
    if (a & b) return 0;
    // Count pairs (p in a, q in b) with p > q: each is one transposition when
    // sorting the concatenated word a|b.
    int inv = 0;
    uint32_t bb = b;
    while (bb) {
        int q = std::countr_zero(bb);
        bb &= bb - 1;
        inv += std::popcount(a >> (q + 1));
    }
    return (inv & 1) ? -1 : 1;
}

GrassmannElement gr_mul(const GrassmannElement& f, const GrassmannElement& g) {
    if (f.n_ != g.n_) throw std::domain_error("Grassmann: mixed indeterminate counts");
    GrassmannElement r(f.n_);
    for (auto& [ma, ca] : f.terms_) {
        for (auto& [mb, cb] : g.terms_) {
            int s = GrassmannElement::merge_sign(ma, mb);
            if (s == 0) continue;
            Scalar c = ca * cb;
            if (s < 0) c = -c;
            r.add_term(ma | mb, c);
        }
    }
    return r;
}

GrassmannElement gr_derive(int i, const GrassmannElement& f) {
    if (i < 1 || i > f.n_) throw std::domain_error("Grassmann: derivative index out of range");
    GrassmannElement r(f.n_);
    uint32_t bit = 1u << (i - 1);
    for (auto& [mask, c] : f.terms_) {
        if (!(mask & bit)) continue;
        // x_i sits at position popcount(lower bits) in the sorted monomial.
        int pos = std::popcount(mask & (bit - 1));
        r.add_term(mask & ~bit, (pos & 1) ? -c : c);
    }
    return r;
}

std::string grassmann_mask_str(uint32_t mask) {
    if (mask == 0) return "1";
    std::ostringstream os;
    uint32_t m = mask;
    while (m) {
        int q = std::countr_zero(m);
        m &= m - 1;
        os << "x" << (q + 1);
    }
    return os.str();
}

std::string GrassmannElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mask, c] : terms_) {
        std::string cs = c.str();
        if (!first && cs[0] != '-') os << "+";
        if (mask == 0) os << cs;
        else if (cs == "1") os << grassmann_mask_str(mask);
        else if (cs == "-1") os << "-" << grassmann_mask_str(mask);
        else os << cs << "*" << grassmann_mask_str(mask);
        first = false;
    }
    return os.str();
}

}  // namespace cfa
