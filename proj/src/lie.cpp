#include "cfa/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace cfa {

LieSuperalgebra::LieSuperalgebra(std::string name, std::vector<Basis> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {}

int LieSuperalgebra::index(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_[static_cast<size_t>(i)].name == name) return i;
    return -1;
}

void LieSuperalgebra::set_bracket(int i, int j, const std::vector<Scalar>& value) {
    if (static_cast<int>(value.size()) != dim()) throw std::domain_error("LieSuperalgebra: bracket size");
    bool nz = false;
    for (const auto& c : value) nz = nz || !c.is_zero();
    if (!nz) return;
    brackets_[{i, j}] = value;
    if (i != j) {
        // [b, a] = -(-1)^{p(a)p(b)} [a, b]
        std::vector<Scalar> mirror(value.size());
        bool flip = !(parity(i) && parity(j));
        for (size_t k = 0; k < value.size(); ++k) mirror[k] = flip ? -value[k] : value[k];
        brackets_[{j, i}] = mirror;
    }
}

std::vector<Scalar> LieSuperalgebra::bracket(int i, int j) const {
    auto it = brackets_.find({i, j});
    if (it != brackets_.end()) return it->second;
    return std::vector<Scalar>(static_cast<size_t>(dim()), Scalar(0));
}

Scalar LieSuperalgebra::bracket_coeff(int i, int j, int k) const {
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return Scalar(0);
    return it->second[static_cast<size_t>(k)];
}

void LieSuperalgebra::validate() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            std::vector<Scalar> ab = bracket(i, j), ba = bracket(j, i);
            bool flip = !(parity(i) && parity(j));
            for (int k = 0; k < dim(); ++k) {
                Scalar expect = flip ? -ab[static_cast<size_t>(k)] : ab[static_cast<size_t>(k)];
                if (ba[static_cast<size_t>(k)] != expect)
                    throw std::domain_error("LieSuperalgebra " + name_ + ": antisymmetry fails at (" +
                                            basis_[static_cast<size_t>(i)].name + "," + basis_[static_cast<size_t>(j)].name + ")");
                if ((parity(i) + parity(j)) % 2 != parity(k) && !ab[static_cast<size_t>(k)].is_zero())
                    throw std::domain_error("LieSuperalgebra " + name_ + ": parity fails at (" +
                                            basis_[static_cast<size_t>(i)].name + "," + basis_[static_cast<size_t>(j)].name + ")");
            }
        }
    // [a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)} [b,[a,c]]
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b)
            for (int c = 0; c < dim(); ++c) {
                std::vector<Scalar> lhs(static_cast<size_t>(dim()), Scalar(0));
                std::vector<Scalar> rhs(static_cast<size_t>(dim()), Scalar(0));
                for (int k = 0; k < dim(); ++k) {
                    Scalar f = bracket_coeff(b, c, k);
                    if (!f.is_zero())
                        for (int l = 0; l < dim(); ++l) lhs[static_cast<size_t>(l)] += f * bracket_coeff(a, k, l);
                    f = bracket_coeff(a, b, k);
                    if (!f.is_zero())
                        for (int l = 0; l < dim(); ++l) rhs[static_cast<size_t>(l)] += f * bracket_coeff(k, c, l);
                    f = bracket_coeff(a, c, k);
                    if (!f.is_zero()) {
                        Scalar g = (parity(a) && parity(b)) ? -f : f;
                        for (int l = 0; l < dim(); ++l) rhs[static_cast<size_t>(l)] += g * bracket_coeff(b, k, l);
                    }
                }
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "LieSuperalgebra " << name_ << ": Jacobi fails at (" << basis_[static_cast<size_t>(a)].name
                       << "," << basis_[static_cast<size_t>(b)].name << "," << basis_[static_cast<size_t>(c)].name << ")";
                    throw std::domain_error(os.str());
                }
            }
}

ScalarMatrix LieSuperalgebra::ad(int i) const {
    ScalarMatrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j)
        for (int k = 0; k < dim(); ++k) m.at(k, j) = bracket_coeff(i, j, k);
    return m;
}

Scalar LieSuperalgebra::killing(int i, int j) const {
    ScalarMatrix m = ad(i) * ad(j);
    Scalar tr(0);
    for (int k = 0; k < dim(); ++k) {
        if (parity(k)) tr -= m.at(k, k);  // supertrace
        else tr += m.at(k, k);
    }
    return tr;
}

LieSuperalgebra LieSuperalgebra::sl2() {
    LieSuperalgebra g("sl2", {{"e", 0}, {"h", 0}, {"f", 0}});
    g.set_bracket(1, 0, {Scalar(2), Scalar(0), Scalar(0)});   // [h,e] = 2e
    g.set_bracket(1, 2, {Scalar(0), Scalar(0), Scalar(-2)});  // [h,f] = -2f
    g.set_bracket(0, 2, {Scalar(0), Scalar(1), Scalar(0)});   // [e,f] = h
    return g;
}

LieSuperalgebra LieSuperalgebra::gl2() {
    LieSuperalgebra g("gl2", {{"e", 0}, {"h", 0}, {"f", 0}, {"z", 0}});
    g.set_bracket(1, 0, {Scalar(2), Scalar(0), Scalar(0), Scalar(0)});
    g.set_bracket(1, 2, {Scalar(0), Scalar(0), Scalar(-2), Scalar(0)});
    g.set_bracket(0, 2, {Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
    return g;
}

LieSuperalgebra LieSuperalgebra::heisenberg3() {
    LieSuperalgebra g("h3", {{"p", 0}, {"q", 0}, {"z", 0}});
    g.set_bracket(0, 1, {Scalar(0), Scalar(0), Scalar(1)});  // [p,q] = z
    return g;
}

LieSuperalgebra LieSuperalgebra::borel_sl2() {
    LieSuperalgebra g("borel-sl2", {{"h", 0}, {"e", 0}});
    g.set_bracket(0, 1, {Scalar(0), Scalar(2)});  // [h,e] = 2e
    return g;
}

LieSuperalgebra LieSuperalgebra::abelian(int n) {
    std::vector<Basis> b;
    for (int i = 1; i <= n; ++i) b.push_back({"a" + std::to_string(i), 0});
    return LieSuperalgebra("abelian" + std::to_string(n), b);
}

}  // namespace cfa
