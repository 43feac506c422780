#include <doctest.h>

#include "cfa/algebra.hpp"
#include "cfa/constructions.hpp"
#include "cfa/lie.hpp"
#include "test_support.hpp"

using namespace cfa;

namespace {

/// The broken table used throughout as the negative fixture: L_(1)L = 3L.
ConformalSuperalgebra corrupted_vir() {
    ConformalSuperalgebra r("vir-corrupt", {{"L", 0, false}});
    r.set_product(0, 0, 0, SparseVec{{0, DPoly::d()}});
    r.set_product(0, 0, 1, SparseVec{{0, DPoly(Scalar(3))}});
    r.finalize();
    return r;
}

Element random_element(test_support::Rng& rng, const ConformalSuperalgebra& alg, int maxdeg) {
    std::vector<DPoly> c;
    for (int i = 0; i < alg.num_generators(); ++i) c.push_back(test_support::random_dpoly(rng, maxdeg));
    return Element(&alg, c);
}

}  // namespace

TEST_CASE("virasoro table and sesquilinear extension") {
    ConformalSuperalgebra vir = make_virasoro();
    Element l = Element::generator(vir, 0);
    CHECK(vir.size() == Size{1, 0});

    CHECK(vir.nth_product(l, l, 1) == l.scaled(Scalar(2)));
    CHECK(vir.nth_product(l, l, 0) == l.derived());
    CHECK(vir.nth_product(l, l, 2).is_zero());

    // (dL)_(1)L = -L_(0)L = -dL
    CHECK(vir.nth_product(l.derived(), l, 1) == -l.derived());
    // L_(1)(dL) = d(L_(1)L) + L_(0)L = 3dL
    CHECK(vir.nth_product(l, l.derived(), 1) == l.derived().scaled(Scalar(3)));

    CHECK(vir.lambda_table().size() == 2);
    CHECK(vir.check_axioms().pass());
}

TEST_CASE("axiom checker flags the corrupted table") {
    ConformalSuperalgebra bad = corrupted_vir();
    AxiomReport rep = bad.check_axioms();
    CHECK_FALSE(rep.pass());
    bool witness = false;
    for (const auto& v : rep.violations)
        if (v.kind == "jacobi" && v.i == 0 && v.j == 0 && v.k == 0 && v.m == 1 && v.n == 1) {
            witness = true;
            CHECK(v.lhs == "9*L");
            CHECK(v.rhs == "12*L");
        }
    CHECK(witness);
}

TEST_CASE("zero algebra is commutative and passes") {
    ConformalSuperalgebra z("zero2", {{"a", 0, false}, {"b", 0, false}});
    z.finalize();
    CHECK(z.check_axioms().pass());
    CHECK(z.lambda_table().empty());
}

TEST_CASE("current algebra on sl2") {
    ConformalSuperalgebra r = make_current(LieSuperalgebra::sl2());
    CHECK(r.size() == Size{3, 0});
    auto table = r.lambda_table();
    CHECK(table.size() == 6);  // ad-action of sl2 has 6 nonzero ordered brackets
    for (const auto& row : table) CHECK(row.n == 0);
    int e = r.generator_index("e"), f = r.generator_index("f"), h = r.generator_index("h");
    CHECK(r.nth_product(Element::generator(r, e), Element::generator(r, f), 0) ==
          Element::generator(r, h));
    CHECK(r.check_axioms().pass());
}

TEST_CASE("semidirect product of virasoro with a current algebra") {
    ConformalSuperalgebra r = make_semidirect_vir_current(LieSuperalgebra::sl2());
    CHECK(r.size() == Size{4, 0});
    int L = r.generator_index("L"), e = r.generator_index("e");
    Element el = Element::generator(r, e), ll = Element::generator(r, L);
    CHECK(r.nth_product(ll, el, 1) == el);
    CHECK(r.nth_product(ll, el, 0) == el.derived());
    // Skew-symmetry forces e_(0)L = 0 and e_(1)L = e.
    CHECK(r.nth_product(el, ll, 0).is_zero());
    CHECK(r.nth_product(el, ll, 1) == el);
    CHECK(r.check_axioms().pass());
}

TEST_CASE("derivation property and skew involution on random elements") {
    test_support::Rng rng(test_support::seed_from_env(301));
    std::vector<ConformalSuperalgebra> algebras;
    algebras.push_back(make_virasoro());
    algebras.push_back(make_current(LieSuperalgebra::sl2()));
    algebras.push_back(make_semidirect_vir_current(LieSuperalgebra::borel_sl2()));
    for (const auto& alg : algebras) {
        for (int trial = 0; trial < 25; ++trial) {
            Element x = random_element(rng, alg, 2);
            Element y = random_element(rng, alg, 2);
            int window = alg.product_window(4);
            for (int n = 0; n < window; ++n) {
                // d is a derivation of every product
                Element lhs = alg.nth_product(x, y, n).derived();
                Element rhs = alg.nth_product(x.derived(), y, n) + alg.nth_product(x, y.derived(), n);
                CHECK(lhs == rhs);
            }
        }
        // Skew involution: applying the mirror expansion twice returns the table.
        for (int i = 0; i < alg.num_generators(); ++i)
            for (int j = 0; j < alg.num_generators(); ++j)
                for (int n = 0; n < alg.order_bound(i, j); ++n) {
                    Element twice = alg.skew_mirror(j, i, n);
                    CHECK(twice == alg.product_element(i, j, n));
                }
    }
}

TEST_CASE("generator-level checks imply consistency on deep random elements") {
    test_support::Rng rng(test_support::seed_from_env(302));
    ConformalSuperalgebra r = make_semidirect_vir_current(LieSuperalgebra::sl2());
    REQUIRE(r.check_axioms().pass());
    for (int trial = 0; trial < 10; ++trial) {
        Element a = random_element(rng, r, 5);
        Element b = random_element(rng, r, 5);
        Element c = random_element(rng, r, 5);
        int pa = a.parity().value_or(0), pb = b.parity().value_or(0);
        int window = r.product_window(10);
        for (int m = 0; m < window; ++m)
            for (int n = 0; n < window; ++n) {
                Element lhs = r.nth_product(a, r.nth_product(b, c, n), m);
                Element rhs = Element::zero(r);
                for (int t = 0; t <= m; ++t) {
                    Element term = r.nth_product(r.nth_product(a, b, t), c, m + n - t);
                    if (!term.is_zero()) rhs += term.scaled(scalar_from_integer(binom(m, t)));
                }
                Element cross = r.nth_product(b, r.nth_product(a, c, m), n);
                rhs += (pa && pb) ? -cross : cross;
                CHECK(lhs == rhs);
            }
    }
}
