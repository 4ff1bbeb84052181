#include <catch2/catch_amalgamated.hpp>

#include <suq/scalar.hpp>

#include "helpers.hpp"

using namespace suq;

TEST_CASE("canonical form keeps denominators monic and coprime", "[scalar]") {
    // q^2 / (1 - q^2) = u^4 / (1 - u^4) -> -u^4 / (u^4 - 1)
    Scalar s = Scalar::q_pow(2) / (Scalar(1) - Scalar::q_pow(2));
    CHECK(s.num().degree() == 4);
    CHECK(s.num().coeff(4) == -1);
    CHECK(s.den().degree() == 4);
    CHECK(s.den().coeff(4) == 1);
    CHECK(s.den().coeff(0) == -1);
    for (std::size_t i = 0; i < 4; ++i) CHECK(s.num().coeff(i) == 0);

    CHECK(s.eval(Rational(1, 2)) == Rational(1, 3));
}

TEST_CASE("cancellation happens eagerly", "[scalar]") {
    // (1 - q^2)/(1 - q) = 1 + q
    Scalar s = (Scalar(1) - Scalar::q_pow(2)) / (Scalar(1) - Scalar::q_pow(1));
    Scalar expect = Scalar(1) + Scalar::q_pow(1);
    CHECK(s == expect);
    CHECK(s.den() == UPoly::one());
}

TEST_CASE("zero is normalized to 0/1", "[scalar]") {
    Scalar z = Scalar::q_pow(3) - Scalar::q_pow(3);
    CHECK(z.is_zero());
    CHECK(z.den() == UPoly::one());
    CHECK(z == Scalar());
}

TEST_CASE("field axioms on random values", "[scalar]") {
    using namespace testutil;
    for (int it = 0; it < 60; ++it) {
        Scalar a = random_q_monomial() + Scalar(random_nonzero_rational());
        Scalar b = random_q_monomial();
        Scalar c = random_q_monomial() - Scalar(1);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Scalar());
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("integer and half-integer powers of q", "[scalar]") {
    CHECK(Scalar::q_pow(-1) * Scalar::q_pow(1) == Scalar(1));
    CHECK(Scalar::u_pow(1) * Scalar::u_pow(1) == Scalar::q_pow(1));
    CHECK(Scalar::u_pow(-3).pow(2) == Scalar::q_pow(-3));
    CHECK(Scalar::q_pow(2).pow(-2) == Scalar::q_pow(-4));

    // q^(1/2) evaluates only where q0 is a rational square
    CHECK(Scalar::u_pow(1).eval(Rational(1, 4)) == Rational(1, 2));
    CHECK(Scalar::u_pow(3).eval(Rational(9, 16)) == Rational(27, 64));
    CHECK_THROWS_AS(Scalar::u_pow(1).eval(Rational(1, 2)), std::domain_error);

    // even powers never need the root
    CHECK(Scalar::q_pow(-2).eval(Rational(1, 2)) == Rational(4));
}

TEST_CASE("evaluation rejects vanishing denominators", "[scalar]") {
    Scalar s = Scalar(1) / (Scalar(1) - Scalar::q_pow(1));
    CHECK_THROWS_AS(s.eval(Rational(1)), std::domain_error);
    CHECK(s.eval(Rational(1, 2)) == Rational(2));
}

TEST_CASE("floating-point evaluation tracks the exact one", "[scalar]") {
    using namespace testutil;
    for (int it = 0; it < 20; ++it) {
        Scalar a = random_q_monomial() + Scalar(random_nonzero_rational());
        Rational q0(1, 2);
        double exact = static_cast<double>(a.eval(q0));
        CHECK(a.eval_d(0.5) == Catch::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("rendering uses q-powers with halves in parentheses", "[scalar]") {
    CHECK(render_scalar(Scalar::q_pow(-1)) == "q^-1");
    CHECK(render_scalar(Scalar(Rational(3, 2)) * Scalar::q_pow(2)) == "3/2 q^2");
    CHECK(render_scalar(Scalar::u_pow(1)) == "q^(1/2)");
    CHECK(render_scalar(Scalar::u_pow(-1)) == "q^(-1/2)");
    CHECK(render_scalar(Scalar(1) - Scalar::q_pow(1)) == "-q + 1");
    CHECK(render_scalar(Scalar()) == "0");
    // true rational function: numerator over denominator
    Scalar s = Scalar::q_pow(2) / (Scalar(1) - Scalar::q_pow(2));
    CHECK(render_scalar(s) == "(-q^2)/(q^2 - 1)");
}
