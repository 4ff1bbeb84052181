#include <catch2/catch_amalgamated.hpp>

#include <suq/su2.hpp>

using namespace suq;

TEST_CASE("smallest strings by hand", "[su2]") {
    SL2Rep r0 = sl2_build(0);
    REQUIRE(r0.e == IntMatrix(1, 1));
    REQUIRE(r0.f == IntMatrix(1, 1));
    REQUIRE(r0.h == IntMatrix(1, 1));

    SL2Rep r1 = sl2_build(1);
    REQUIRE(r1.h.at(0, 0) == 1);
    REQUIRE(r1.h.at(1, 1) == -1);
    REQUIRE(r1.h.at(0, 1) == 0);
    REQUIRE(r1.f.at(1, 0) == 1);  // f w_0 = w_1
    REQUIRE(r1.f.at(0, 1) == 0);  // f w_1 = 0 (top of the string)
    REQUIRE(r1.e.at(0, 1) == -1); // e w_1 = -w_0
    REQUIRE(r1.e.at(1, 0) == 0);  // e w_0 = 0 (bottom)

    SL2Rep r2 = sl2_build(2);
    REQUIRE(r2.e.at(0, 1) == -2); // e w_1 = -2 w_0
    REQUIRE(r2.e.at(1, 2) == -1); // e w_2 = -w_1
    REQUIRE(r2.f.at(1, 0) == 1);  // f w_0 = w_1
    REQUIRE(r2.f.at(2, 1) == 2);  // f w_1 = 2 w_2
    REQUIRE(r2.h.at(0, 0) == 2);
    REQUIRE(r2.h.at(1, 1) == 0);
    REQUIRE(r2.h.at(2, 2) == -2);
}

TEST_CASE("bracket relations close exactly", "[su2]") {
    for (long n = 0; n <= 10; ++n) {
        SL2Rep r = sl2_build(n);
        REQUIRE((r.h * r.e - r.e * r.h) == 2 * r.e);
        REQUIRE((r.f * r.h - r.h * r.f) == 2 * r.f);
        REQUIRE((r.f * r.e - r.e * r.f) == r.h);
        REQUIRE(r.h.trace() == 0);
    }
}

TEST_CASE("composite operators act by the stated eigenvalues", "[su2]") {
    for (long n = 0; n <= 10; ++n) {
        SL2Rep r = sl2_build(n);
        IntMatrix fe = r.f * r.e;
        IntMatrix ef = r.e * r.f;
        for (long k = 0; k <= n; ++k) {
            auto kk = static_cast<std::size_t>(k);
            REQUIRE(fe.at(kk, kk) == sl2_fe_eigenvalue(n, k));
            REQUIRE(ef.at(kk, kk) == sl2_ef_eigenvalue(n, k));
        }
        // lowest basis vector: fe kills it, ef scales by -n
        REQUIRE(sl2_fe_eigenvalue(n, 0) == 0);
        REQUIRE(sl2_ef_eigenvalue(n, 0) == -n);
        // both composites are diagonal, so the eigenvalue list is the
        // whole story
        for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
            for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j)
                if (i != j) {
                    REQUIRE(fe.at(i, j) == 0);
                    REQUIRE(ef.at(i, j) == 0);
                }
    }
}

TEST_CASE("weight string of h", "[su2]") {
    for (long n = 0; n <= 10; ++n) {
        SL2Rep r = sl2_build(n);
        for (long k = 0; k <= n; ++k)
            REQUIRE(r.h.at(static_cast<std::size_t>(k),
                           static_cast<std::size_t>(k)) == n - 2 * k);
    }
}

TEST_CASE("verification report passes on every string", "[su2]") {
    for (long n = 0; n <= 10; ++n) {
        SL2Report rep = sl2_verify(n);
        INFO("n=" << n);
        REQUIRE(rep.bracket_he);
        REQUIRE(rep.bracket_fh);
        REQUIRE(rep.bracket_fe);
        REQUIRE(rep.trace_h_zero);
        REQUIRE(rep.fe_eigenvalues);
        REQUIRE(rep.ef_eigenvalues);
        REQUIRE(rep.weight_string);
        REQUIRE(rep.irreducible);
        REQUIRE(rep.all());
    }
}

TEST_CASE("doubled string is reducible", "[su2]") {
    // two copies of the same irreducible glued block-diagonally commute
    // with a full 2x2 block algebra: commutant dimension 4
    SL2Rep r = sl2_build(1);
    IntMatrix e(4, 4), f(4, 4), h(4, 4);
    for (std::size_t b : {std::size_t{0}, std::size_t{2}})
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                e.at(b + i, b + j) = r.e.at(i, j);
                f.at(b + i, b + j) = r.f.at(i, j);
                h.at(b + i, b + j) = r.h.at(i, j);
            }
    REQUIRE(sl2_commutant_dim(e, f, h) == 4);
}

TEST_CASE("perturbed action breaks the brackets", "[su2]") {
    SL2Rep r = sl2_build(3);
    IntMatrix bad = r.e;
    bad.at(0, 1) += 1;
    REQUIRE((r.f * bad - bad * r.f) != r.h);
    // an off-ladder perturbation: (1,0) carries ad(h)-weight -2, so the
    // h-bracket cannot absorb it (unlike a perturbation on the ladder line,
    // which ad(h) scales by exactly 2)
    IntMatrix bad2 = r.e;
    bad2.at(1, 0) += 1;
    REQUIRE((r.h * bad2 - bad2 * r.h) != 2 * bad2);
}

TEST_CASE("argument guard", "[su2]") {
    REQUIRE_THROWS_AS(sl2_build(-1), std::invalid_argument);
}
