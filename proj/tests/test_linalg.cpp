#include <doctest.h>

#include "cfa/linalg.hpp"
#include "test_support.hpp"

using namespace cfa;

namespace {

DPoly d() { return DPoly::d(); }

PdMatrix cols(int rows, std::vector<std::vector<DPoly>> c) { return PdMatrix::from_columns(rows, c); }

PdMatrix random_unimodular(test_support::Rng& rng, int n) {
    // Product of elementary column operations: always unimodular over C[d].
    PdMatrix u = PdMatrix::identity(n);
    for (int step = 0; step < 2 * n; ++step) {
        int a = static_cast<int>(rng.next() % n), b = static_cast<int>(rng.next() % n);
        if (a == b) continue;
        DPoly f = test_support::random_dpoly(rng, 2);
        for (int r = 0; r < n; ++r) u.at(r, a) += f * u.at(r, b);
    }
    return u;
}

}  // namespace

TEST_CASE("hermite form pins down the column span") {
    SUBCASE("gcd of d and d^2") {
        PdMatrix m = cols(1, {{d()}, {d() * d()}});
        PdMatrix h = hermite_form(m);
        CHECK(h == cols(1, {{d()}}));
    }
    SUBCASE("identity and zero") {
        CHECK(hermite_form(PdMatrix::identity(2)) == PdMatrix::identity(2));
        PdMatrix z(2, 3);
        CHECK(hermite_form(z).cols() == 0);
    }
    SUBCASE("idempotent and span-preserving on random matrices") {
        test_support::Rng rng(test_support::seed_from_env(201));
        for (int trial = 0; trial < 40; ++trial) {
            int rows = 1 + static_cast<int>(rng.next() % 4);
            int ncols = 1 + static_cast<int>(rng.next() % 5);
            PdMatrix m(rows, ncols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < ncols; ++c) m.at(r, c) = test_support::random_dpoly(rng, 3);
            PdMatrix h = hermite_form(m);
            CHECK(hermite_form(h) == h);
            for (int c = 0; c < ncols; ++c) CHECK(membership(m.column(c), h));
            for (int c = 0; c < h.cols(); ++c) CHECK(membership(h.column(c), m));
        }
    }
}

TEST_CASE("size of a presented module") {
    SUBCASE("diag(1, d^2) presents a 2-dimensional torsion module") {
        PdMatrix p = cols(2, {{DPoly::one(), DPoly()}, {DPoly(), d() * d()}});
        CHECK(size_of(p) == Size{0, 2});
    }
    SUBCASE("no relations") {
        CHECK(size_of(PdMatrix(2, 0)) == Size{2, 0});
    }
    SUBCASE("single degree-1 invariant factor") {
        PdMatrix p = cols(1, {{d() + DPoly(Scalar(3))}});
        CHECK(size_of(p) == Size{0, 1});
    }
    SUBCASE("invariant under unimodular row and column transforms") {
        test_support::Rng rng(test_support::seed_from_env(202));
        for (int trial = 0; trial < 25; ++trial) {
            int n = 2 + static_cast<int>(rng.next() % 3);
            int k = 1 + static_cast<int>(rng.next() % 3);
            PdMatrix m(n, k);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < k; ++c) m.at(r, c) = test_support::random_dpoly(rng, 2);
            Size s = size_of(m);
            PdMatrix left = random_unimodular(rng, n), right = random_unimodular(rng, k);
            CHECK(size_of(left * m * right) == s);
        }
    }
    SUBCASE("appending a nonzero relation never increases the size") {
        test_support::Rng rng(test_support::seed_from_env(203));
        for (int trial = 0; trial < 30; ++trial) {
            int n = 1 + static_cast<int>(rng.next() % 3);
            int k = static_cast<int>(rng.next() % 3);
            PdMatrix m(n, k);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < k; ++c) m.at(r, c) = test_support::random_dpoly(rng, 2);
            std::vector<DPoly> extra(static_cast<size_t>(n));
            bool nz = false;
            for (int r = 0; r < n; ++r) {
                extra[static_cast<size_t>(r)] = test_support::random_dpoly(rng, 2);
                nz = nz || !extra[static_cast<size_t>(r)].is_zero();
            }
            if (!nz) continue;
            Size before = size_of(m);
            PdMatrix bigger = m;
            bigger.append_column(extra);
            Size after = size_of(bigger);
            CHECK((after < before || after == before));
            if (!membership(extra, m)) CHECK(after < before);
        }
    }
}

TEST_CASE("membership in a polynomial span") {
    PdMatrix basis = cols(1, {{d()}});
    CHECK(membership({d() * d()}, basis));
    CHECK_FALSE(membership({DPoly::one()}, basis));
    PdMatrix diag = cols(2, {{DPoly::one(), DPoly::one()}});
    CHECK(membership({d() + DPoly::one(), d() + DPoly::one()}, diag));
    CHECK_FALSE(membership({d(), DPoly::one()}, diag));
    CHECK_THROWS_AS(membership({d()}, diag), std::domain_error);

    SUBCASE("solve returns exact coordinates") {
        auto q = solve_in_span(diag, {d() + DPoly::one(), d() + DPoly::one()});
        REQUIRE(q.has_value());
        CHECK((*q)[0] == d() + DPoly::one());
    }
}

TEST_CASE("kernel of a polynomial matrix") {
    SUBCASE("divergence-style relation") {
        PdMatrix m = cols(1, {{d()}, {-d()}});
        PdMatrix k = kernel(m);
        REQUIRE(k.cols() == 1);
        CHECK(k.at(0, 0).monic() == k.at(1, 0).monic());
        CHECK((m * k).is_zero());
    }
    SUBCASE("invertible matrix has no kernel") {
        PdMatrix u(2, 2);
        u.at(0, 0) = DPoly::one();
        u.at(1, 1) = DPoly::one();
        u.at(0, 1) = d();
        CHECK(kernel(u).cols() == 0);
    }
    SUBCASE("zero map has full kernel") {
        PdMatrix z(1, 2);
        CHECK(kernel(z).cols() == 2);
    }
    SUBCASE("kernel columns are exact and independent") {
        test_support::Rng rng(test_support::seed_from_env(204));
        for (int trial = 0; trial < 30; ++trial) {
            int rows = 1 + static_cast<int>(rng.next() % 3);
            int ncols = rows + 1 + static_cast<int>(rng.next() % 2);
            PdMatrix m(rows, ncols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < ncols; ++c) m.at(r, c) = test_support::random_dpoly(rng, 2);
            PdMatrix k = kernel(m);
            CHECK((m * k).is_zero());
            // Independence: a free basis of the kernel presents a module of
            // size (cols, 0).
            if (k.cols() > 0) CHECK(size_of(PdMatrix(k.cols(), 0)) == Size{k.cols(), 0});
            CHECK(k.cols() >= ncols - rows);
            // Smith check: kernel rank + column-span rank = total columns.
            PdMatrix h = hermite_form(m);
            CHECK(h.cols() + k.cols() == ncols);
        }
    }
}

TEST_CASE("scalar matrix elimination") {
    ScalarMatrix m(2, 3);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar(2);
    m.at(0, 2) = Scalar(3);
    m.at(1, 0) = Scalar(2);
    m.at(1, 1) = Scalar(4);
    m.at(1, 2) = Scalar(6);
    CHECK(m.rank() == 1);
    auto ker = m.kernel();
    CHECK(ker.size() == 2);
    auto sol = m.solve({Scalar(3), Scalar(6)});
    REQUIRE(sol.has_value());
    ScalarMatrix check(2, 1);
    auto none = m.solve({Scalar(1), Scalar(0)});
    CHECK_FALSE(none.has_value());
}

TEST_CASE("sparse echelon rank and kernel") {
    SparseEchelon e;
    CHECK(e.add_row({{0, Scalar(1)}, {2, Scalar(1)}}));
    CHECK(e.add_row({{1, Scalar(1)}}));
    CHECK_FALSE(e.add_row({{0, Scalar(2)}, {2, Scalar(2)}}));
    CHECK(e.rank() == 2);
    auto k = e.kernel(3);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][2]);
}
