#include <catch2/catch_amalgamated.hpp>

#include <suq/parse.hpp>

#include <random>
#include <string>

using namespace suq;

namespace {

AlgebraElement gen(Gen g) { return AlgebraElement::generator(g); }

} // namespace

TEST_CASE("relation witnesses through the grammar", "[parse]") {
    // the commutation relation makes this difference vanish in normal form
    REQUIRE(parse_expr("a c - q c a").is_zero());
    REQUIRE(parse_expr("1") == AlgebraElement::unit());
    REQUIRE(parse_expr("a^* a + c^* c") == AlgebraElement::unit());
    REQUIRE(parse_expr("a a^* + q^2 c^* c") == AlgebraElement::unit());
}

TEST_CASE("tokens and precedence", "[parse]") {
    REQUIRE(parse_expr("a c") == gen(Gen::A) * gen(Gen::C));
    REQUIRE(parse_expr("a*c") == gen(Gen::A) * gen(Gen::C));
    REQUIRE(parse_expr("  a   *   c ") == gen(Gen::A) * gen(Gen::C));
    REQUIRE(parse_expr("a^2 c^*^3") ==
            AlgebraElement::monomial(BasisIndex{2, 3, 0}));
    REQUIRE(parse_expr("a^*^2") ==
            AlgebraElement::monomial(BasisIndex{-2, 0, 0}));
    REQUIRE(parse_expr("a ^ * ^ 2") ==
            AlgebraElement::monomial(BasisIndex{-2, 0, 0}));
    REQUIRE(parse_expr("q^2 a") ==
            AlgebraElement::monomial(BasisIndex{1, 0, 0}, Scalar::q_pow(2)));
    REQUIRE(parse_expr("q^(1/2)") ==
            AlgebraElement::monomial(BasisIndex{0, 0, 0}, Scalar::u_pow(1)));
    REQUIRE(parse_expr("q^(-3/2)") ==
            AlgebraElement::monomial(BasisIndex{0, 0, 0}, Scalar::u_pow(-3)));
    REQUIRE(parse_expr("3/2 q^2 a c") ==
            AlgebraElement::monomial(
                BasisIndex{1, 0, 1},
                Scalar(Rational(3, 2)) * Scalar::q_pow(2)));
    REQUIRE(parse_expr("(q^-1) * a c") ==
            AlgebraElement::monomial(BasisIndex{1, 0, 1}, Scalar::q_pow(-1)));
    REQUIRE(parse_expr("-a + a").is_zero());
    REQUIRE(parse_expr("q q") ==
            AlgebraElement::monomial(BasisIndex{0, 0, 0}, Scalar::q_pow(2)));
    REQUIRE(parse_expr("7") ==
            AlgebraElement::monomial(BasisIndex{0, 0, 0}, Scalar(7)));
    // parenthesized subexpressions multiply out
    REQUIRE(parse_expr("(a + c) c") ==
            gen(Gen::A) * gen(Gen::C) + gen(Gen::C) * gen(Gen::C));
    REQUIRE(parse_expr("2 (a + c)") ==
            Scalar(2) * (gen(Gen::A) + gen(Gen::C)));
}

TEST_CASE("normalization happens during parsing", "[parse]") {
    REQUIRE(render_element(parse_expr("c a")) == "(q^-1) * a c");
    REQUIRE(render_element(parse_expr("c^* a")) == "(q^-1) * a c^*");
    // the right-hand side of the unit relation, reassembled
    REQUIRE(render_element(parse_expr("1 - c^* c")) == "1 - c^* c");
}

TEST_CASE("syntax errors carry positions and messages", "[parse]") {
    auto fails_with = [](const std::string& text, const std::string& expect) {
        try {
            parse_expr(text);
            FAIL("no error for: " << text);
        } catch (const ParseError& e) {
            INFO("input: " << text << " message: " << e.what());
            REQUIRE(std::string(e.what()).find(expect) != std::string::npos);
        }
    };
    fails_with("a^0", "exponent 0");
    fails_with("c^*^0", "exponent 0");
    fails_with("a^-2", "positive");
    fails_with("a b", "unexpected character 'b'");
    fails_with("", "expected an expression");
    fails_with("(q", "expected ')'");
    fails_with("q^(1/3)", "halves");
    fails_with("3//2", "denominator");
    fails_with("a *", "expected a factor");
    fails_with("q^", "expected an integer");
    fails_with("a + ", "unexpected end of input");
    fails_with("3/0", "division by zero");
    fails_with("q^999999", "too large");
    fails_with("a^9999999", "too large");

    try {
        parse_expr("a c ? c");
    } catch (const ParseError& e) {
        REQUIRE(e.position() == 4); // 0-based offset of '?'
        REQUIRE(std::string(e.what()).find("position 5") !=
                std::string::npos); // 1-based in the message
    }
}

TEST_CASE("grammar round-trip on random normal forms", "[parse]") {
    std::mt19937 rng(20260815);
    std::uniform_int_distribution<long> kd(-3, 3), nm(0, 3), terms(1, 4);
    std::uniform_int_distribution<long> numd(1, 9), dend(1, 9), ue(-6, 6);
    std::uniform_int_distribution<int> signd(0, 1);

    for (int it = 0; it < 500; ++it) {
        AlgebraElement x;
        long t = terms(rng);
        for (long i = 0; i < t; ++i) {
            Rational coeff(numd(rng), dend(rng));
            if (signd(rng)) coeff = -coeff;
            Scalar s = Scalar(coeff) * Scalar::u_pow(ue(rng));
            x += AlgebraElement::monomial(
                BasisIndex{kd(rng), nm(rng), nm(rng)}, s);
        }
        std::string text = render_element(x);
        INFO("rendered: " << text);
        REQUIRE(parse_expr(text) == x);
    }
}
