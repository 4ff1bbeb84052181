#include <catch2/catch_amalgamated.hpp>

#include <suq/oracle.hpp>

#include "helpers.hpp"

#include <complex>

using namespace suq;

TEST_CASE("generator actions on the lattice basis", "[oracle]") {
    Rational q0(1, 2);
    AlgebraElement a = AlgebraElement::generator(Gen::A);
    AlgebraElement as = AlgebraElement::generator(Gen::AStar);
    AlgebraElement c = AlgebraElement::generator(Gen::C);
    AlgebraElement cs = AlgebraElement::generator(Gen::CStar);

    // a annihilates the bottom row
    CHECK(l2_apply(a, 0, 0, q0).is_zero());
    CHECK(l2_apply(a, 0, 5, q0).is_zero());

    // a e_{r,s} = sqrt(1-q0^{2r}) e_{r-1,s}
    L2Vector va = l2_apply(a, 2, 1, q0);
    L2Vector expect_a;
    expect_a.add({1, 1}, RadicalCoeff::Key{2}, Rational(1));
    CHECK(va == expect_a);

    // a^* e_{r,s} = sqrt(1-q0^{2(r+1)}) e_{r+1,s}
    L2Vector vas = l2_apply(as, 2, 0, q0);
    L2Vector expect_as;
    expect_as.add({3, 0}, RadicalCoeff::Key{3}, Rational(1));
    CHECK(vas == expect_as);

    // c e_{r,s} = q0^r e_{r,s+1}
    L2Vector vc = l2_apply(c, 2, 1, q0);
    L2Vector expect_c;
    expect_c.add({2, 2}, RadicalCoeff::Key{}, Rational(1, 4));
    CHECK(vc == expect_c);

    // c^* e_{r,s} = q0^r e_{r,s-1}
    L2Vector vcs = l2_apply(cs, 2, 1, q0);
    L2Vector expect_cs;
    expect_cs.add({2, 0}, RadicalCoeff::Key{}, Rational(1, 4));
    CHECK(vcs == expect_cs);
}

TEST_CASE("radical bookkeeping squares pairs away", "[oracle]") {
    Rational q0(1, 2);
    // a^* a e_{1,0} = (1 - q0^2) e_{1,0}; radical {1} twice collapses to the rational 3/4
    AlgebraElement w = AlgebraElement::generator(Gen::AStar) * AlgebraElement::generator(Gen::A);
    L2Vector v = l2_apply(w, 1, 0, q0);
    L2Vector expect;
    expect.add({1, 0}, RadicalCoeff::Key{}, Rational(3, 4));
    CHECK(v == expect);
}

TEST_CASE("representation respects products", "[oracle]") {
    using namespace testutil;
    Rational q0(1, 2);
    for (int it = 0; it < 30; ++it) {
        AlgebraElement x = random_element(2, 2);
        AlgebraElement y = random_element(2, 2);
        AlgebraElement xy = x * y;
        for (long r = 0; r <= 4; ++r) {
            L2Vector step = l2_apply(y, r, 0, q0);
            L2Vector two = l2_apply(x, step, q0);
            L2Vector direct = l2_apply(xy, r, 0, q0);
            CHECK(two == direct);
        }
    }
}

TEST_CASE("lattice oracle separates distinct elements", "[oracle]") {
    using namespace testutil;
    Rational q0(1, 2);
    for (int it = 0; it < 30; ++it) {
        AlgebraElement x = random_element(2, 3, /*rational_coeffs=*/true);
        AlgebraElement y = random_element(2, 3, /*rational_coeffs=*/true);
        CHECK(oracle_equal(x, y, q0) == (x == y));
        CHECK(oracle_equal(x, x, q0));
    }

    // a factor of q is caught
    AlgebraElement ac = AlgebraElement::generator(Gen::A) * AlgebraElement::generator(Gen::C);
    CHECK_FALSE(oracle_equal(ac, Scalar::q_pow(-1) * ac, q0));
    // c a = q^-1 a c holds in the representation too
    AlgebraElement ca = AlgebraElement::generator(Gen::C) * AlgebraElement::generator(Gen::A);
    CHECK(oracle_equal(ca, Scalar::q_pow(-1) * ac, q0));
}

TEST_CASE("defining relations hold in the lattice representation", "[oracle]") {
    AlgebraElement one = AlgebraElement::unit();
    AlgebraElement a = AlgebraElement::generator(Gen::A), as = AlgebraElement::generator(Gen::AStar);
    AlgebraElement c = AlgebraElement::generator(Gen::C), cs = AlgebraElement::generator(Gen::CStar);
    for (Rational q0 : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
        CHECK(oracle_equal(as * a + cs * c, one, q0));
        CHECK(oracle_equal(a * as + Scalar::q_pow(2) * (cs * c), one, q0));
        CHECK(oracle_equal(a * c, Scalar::q_pow(1) * (c * a), q0));
        CHECK(oracle_equal(a * cs, Scalar::q_pow(1) * (cs * a), q0));
        CHECK(oracle_equal(cs * c, c * cs, q0));
    }
}

TEST_CASE("characters at fourth roots of unity multiply pointwise", "[oracle]") {
    Rational q0(1, 2);
    using namespace testutil;
    // theta_t(x) theta_s(x) = theta_{ts}(x) for all sixteen pairs
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int it = 0; it < 6; ++it) {
                AlgebraElement x = random_element(3, 3);
                GaussianRational lhs = theta_convolve(i, j, x, q0);
                GaussianRational rhs = theta_eval(x, i + j, q0);
                CHECK(lhs.re == rhs.re);
                CHECK(lhs.im == rhs.im);
            }
        }
    }
}

TEST_CASE("characters at general unit-circle points multiply pointwise", "[oracle]") {
    using namespace testutil;
    double q0 = 0.5;
    std::complex<double> t = std::polar(1.0, 0.7), s = std::polar(1.0, -1.9);
    for (int it = 0; it < 12; ++it) {
        AlgebraElement x = random_element(3, 3);
        std::complex<double> lhs = theta_convolve_d(t, s, x, q0);
        std::complex<double> rhs = theta_eval_d(x, t * s, q0);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("evaluation along the circle is a homomorphism", "[oracle]") {
    using namespace testutil;
    for (int it = 0; it < 25; ++it) {
        AlgebraElement x = random_element(2, 3);
        AlgebraElement y = random_element(2, 3);
        CHECK(pi_map(x * y) == pi_map(x) * pi_map(y));
        CHECK(pi_map(x + y) == pi_map(x) + pi_map(y));
    }
    // pi(a) = z, pi(c) = 0
    CirclePoly z = CirclePoly::monomial(1, Scalar(1));
    CHECK(pi_map(AlgebraElement::generator(Gen::A)) == z);
    CHECK(pi_map(AlgebraElement::generator(Gen::C)) == CirclePoly());
    CHECK(pi_map(AlgebraElement::monomial(BasisIndex{-2, 0, 0})) == CirclePoly::monomial(-2, Scalar(1)));
}
