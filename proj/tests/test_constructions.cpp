#include <doctest.h>

#include "cfa/constructions.hpp"
#include "test_support.hpp"

using namespace cfa;

TEST_CASE("W ranks and axioms") {
    CHECK(make_W(0).size() == Size{1, 0});
    ConformalSuperalgebra w1 = make_W(1);
    CHECK(w1.size() == Size{4, 0});
    CHECK(w1.check_axioms().pass());
    ConformalSuperalgebra w2 = make_W(2);
    CHECK(w2.size() == Size{12, 0});
    CHECK(w2.check_axioms().pass());
}

TEST_CASE("W0 and K0 reproduce the rank-1 table under L = -u") {
    for (ConformalSuperalgebra alg : {make_W(0), make_K(0)}) {
        CHECK(alg.size() == Size{1, 0});
        Element l = -Element::generator(alg, 0);
        CHECK(alg.nth_product(l, l, 0) == l.derived());
        CHECK(alg.nth_product(l, l, 1) == l.scaled(Scalar(2)));
        CHECK(alg.nth_product(l, l, 2).is_zero());
        CHECK(alg.check_axioms().pass());
    }
}

TEST_CASE("K ranks, axioms, unit row") {
    ConformalSuperalgebra k1 = make_K(1);
    CHECK(k1.size() == Size{2, 0});
    CHECK(k1.check_axioms().pass());
    ConformalSuperalgebra k2 = make_K(2);
    CHECK(k2.size() == Size{4, 0});
    CHECK(k2.check_axioms().pass());
    ConformalSuperalgebra k3 = make_K(3);
    CHECK(k3.size() == Size{8, 0});
    // unit monomial: u_(0)u = -d u, u_(1)u = -2u
    int u = k3.generator_index("u");
    Element uu = Element::generator(k3, u);
    CHECK(k3.nth_product(uu, uu, 0) == -uu.derived());
    CHECK(k3.nth_product(uu, uu, 1) == uu.scaled(Scalar(-2)));
    CHECK(k3.check_axioms().pass());
}

TEST_CASE("divergence examples") {
    int n = 2;
    const int rank = 3 * (1 << n);
    std::vector<DPoly> e(static_cast<size_t>(rank));
    // div(d_1) = 0
    e[static_cast<size_t>(w_generator_index(n, 0, 1))] = DPoly::one();
    for (const auto& p : divergence(n, e)) CHECK(p.is_zero());
    // div(x1 d_1) = 1: the sign reads the parity of the derivation x1 d_1
    // (even), the only convention compatible with div(u) = +d u and
    // bracket-closure of the kernel.
    std::fill(e.begin(), e.end(), DPoly());
    e[static_cast<size_t>(w_generator_index(n, 0b01, 1))] = DPoly::one();
    auto dv = divergence(n, e);
    CHECK(dv[0] == DPoly(Scalar(1)));
    // div(u) = d
    std::fill(e.begin(), e.end(), DPoly());
    e[static_cast<size_t>(w_generator_index(n, 0, 0))] = DPoly::one();
    dv = divergence(n, e);
    CHECK(dv[0] == DPoly::d());
}

TEST_CASE("S series: kernel of the divergence") {
    ConformalSuperalgebra s1 = make_S(1);
    CHECK(s1.size() == Size{2, 0});
    CHECK(s1.check_axioms().pass());

    ConformalSuperalgebra s2 = make_S(2);
    CHECK(s2.size() == Size{8, 0});
    CHECK(s2.check_axioms().pass());

    // Every basis column of S_N is divergence free.
    PdMatrix basis = divergence_kernel(2);
    CHECK(basis.cols() == 8);
    for (int c = 0; c < basis.cols(); ++c)
        for (const auto& p : divergence(2, basis.column(c))) CHECK(p.is_zero());
}

TEST_CASE("CK6 closes on its 32 spanning columns") {
    ConformalSuperalgebra ck = make_CK6();
    CHECK(ck.size() == Size{32, 0});
    CHECK(ck.num_generators() == 32);
}
