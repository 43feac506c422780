#include <doctest.h>

#include "cfa/dpoly.hpp"
#include "cfa/grassmann.hpp"
#include "cfa/scalar.hpp"
#include "test_support.hpp"

using namespace cfa;

TEST_CASE("gaussian rational arithmetic") {
    Scalar a = Scalar::ratio(1, 2) + Scalar::i() * Scalar(3);
    Scalar b = Scalar(2) - Scalar::i();
    CHECK((a * b).re() == Rational(4));
    CHECK((a * b).im() == Rational(11, 2));
    CHECK(a / a == Scalar(1));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
    CHECK(a.str() == "1/2+3i");
    CHECK((-Scalar::i()).str() == "-i");
    CHECK(rational_str(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("binomials and falling factorials at negative arguments") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(-1, 3) == -1);
    CHECK(binom(-6, 10) == binom(15, 10));
    CHECK(falling(3, 5) == 0);
    CHECK(falling(-2, 3) == -24);
}

TEST_CASE("dpoly ring arithmetic") {
    DPoly d = DPoly::d();
    DPoly p = (d + DPoly::one()) * (d - DPoly::one());
    CHECK(p == DPoly(std::vector<Scalar>{Scalar(-1), Scalar(0), Scalar(1)}));
    CHECK(p.degree() == 2);
    CHECK(DPoly().degree() == -1);

    SUBCASE("divmod basics") {
        auto [q, r] = (d * d).divmod(d);
        CHECK(q == d);
        CHECK(r.is_zero());
        CHECK_THROWS_AS(p.divmod(DPoly()), std::domain_error);
    }
    SUBCASE("divmod over the gaussian field") {
        // d^2 + 1 = (d - i)(d + i)
        DPoly num = d * d + DPoly::one();
        DPoly den = d + DPoly(Scalar::i());
        auto [q, r] = num.divmod(den);
        CHECK(r.is_zero());
        CHECK(q == d - DPoly(Scalar::i()));
    }
    SUBCASE("reconstruction identity on random pairs") {
        test_support::Rng rng(test_support::seed_from_env(101));
        for (int trial = 0; trial < 120; ++trial) {
            DPoly a = test_support::random_dpoly(rng, 5);
            DPoly b = test_support::random_dpoly(rng, 3);
            if (b.is_zero()) continue;
            auto [q, r] = a.divmod(b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
    SUBCASE("gcd and translation") {
        DPoly g = DPoly::gcd(d * d, d * (d + DPoly::one()));
        CHECK(g == d);
        DPoly t = (d * d).translated(Scalar(1));  // (d+1)^2
        CHECK(t == d * d + d.scaled(Scalar(2)) + DPoly::one());
        CHECK(t.negated_variable() == d * d - d.scaled(Scalar(2)) + DPoly::one());
        CHECK(t.eval(Scalar(-1)) == Scalar(0));
    }
}

TEST_CASE("grassmann product normal form") {
    int n = 4;
    auto x = [&](int i) { return GrassmannElement::generator(n, i); };
    CHECK(gr_mul(x(1), x(2)) == GrassmannElement::monomial(n, 0b0011, Scalar(1)));
    CHECK(gr_mul(x(2), x(1)) == GrassmannElement::monomial(n, 0b0011, Scalar(-1)));
    CHECK(gr_mul(x(1), x(1)).is_zero());
    CHECK(gr_mul(gr_mul(x(3), x(1)), x(2)) == GrassmannElement::monomial(n, 0b0111, Scalar(1)));
    CHECK(gr_mul(x(3), gr_mul(x(1), x(2))) == GrassmannElement::monomial(n, 0b0111, Scalar(1)));
}

TEST_CASE("grassmann derivative") {
    int n = 3;
    GrassmannElement x12 = GrassmannElement::monomial(n, 0b011, Scalar(1));
    CHECK(gr_derive(1, x12) == GrassmannElement::generator(n, 2));
    CHECK(gr_derive(2, x12) == -GrassmannElement::generator(n, 1));
    CHECK(gr_derive(1, GrassmannElement::generator(n, 2)).is_zero());
    CHECK_THROWS_AS(gr_derive(7, x12), std::domain_error);
}

TEST_CASE("grassmann algebra identities on random homogeneous elements") {
    test_support::Rng rng(test_support::seed_from_env(102));
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 6);
        GrassmannElement f = test_support::random_grassmann_homogeneous(rng, n);
        GrassmannElement g = test_support::random_grassmann_homogeneous(rng, n);
        int pf = f.parity().value_or(0), pg = g.parity().value_or(0);
        // super-commutativity
        GrassmannElement fg = gr_mul(f, g), gf = gr_mul(g, f);
        CHECK(fg == ((pf && pg) ? -gf : gf));
        // associativity against a third element
        GrassmannElement h = test_support::random_grassmann_homogeneous(rng, n);
        CHECK(gr_mul(gr_mul(f, g), h) == gr_mul(f, gr_mul(g, h)));
        // super-Leibniz and d_i^2 = 0
        int i = 1 + static_cast<int>(rng.next() % n);
        GrassmannElement lhs = gr_derive(i, fg);
        GrassmannElement rhs = gr_mul(gr_derive(i, f), g);
        GrassmannElement tail = gr_mul(f, gr_derive(i, g));
        rhs += pf ? -tail : tail;
        CHECK(lhs == rhs);
        CHECK(gr_derive(i, gr_derive(i, f)).is_zero());
    }
}
