#include <doctest.h>

#include "test_support.hpp"

using namespace hamfact;
using namespace testsupport;

namespace {
const Rational z(0), one(1);
}

TEST_CASE("parsing the damped oscillator") {
    const ParsedSystem sys = parse_eom("x'' + g*x' + x = 0", {{"g", Rational(1)}});
    REQUIRE(sys.vars == std::vector<std::string>{"x"});
    CHECK(sys.eom.b1 == RatMatrix{{-one}});
    CHECK(sys.eom.b2 == RatMatrix{{-one}});
    CHECK(sys.force.is_zero());
}

TEST_CASE("parsing the dual system") {
    const ParsedSystem sys = parse_eom("x'' + g*y' + x = -l*y ; y'' - g*x' + y = -l*x",
                                       {{"g", Rational(1)}, {"l", Rational(1, 2)}});
    REQUIRE(sys.vars == std::vector<std::string>{"x", "y"});
    CHECK(sys.eom == dual_system_eom(Rational(1), Rational(1, 2)));
    CHECK(sys.force.is_zero());
}

TEST_CASE("parsing the cubic two-well system") {
    const ParsedSystem sys = parse_eom("x'' + g*y' + x = x^2 - y^2\ny'' - g*x' + y = -2*x*y",
                                       {{"g", Rational(1, 10)}});
    CHECK(sys.eom == dual_system_eom(Rational(1, 10), Rational(0)));
    const std::vector<std::string> vars{"x", "y"};
    const MultiPoly x = MultiPoly::variable(vars, 0);
    const MultiPoly y = MultiPoly::variable(vars, 1);
    CHECK(sys.force.components[0] == x * x - y * y);
    CHECK(sys.force.components[1] == x * y * Rational(-2));
}

TEST_CASE("unicode parameters and subscripts are normalized") {
    const ParsedSystem a = parse_eom("x'' + \xce\xb3*x' + x = 0", {{"g", Rational(2)}});
    CHECK(a.eom.b1 == RatMatrix{{Rational(-2)}});
    const ParsedSystem b = parse_eom("x'' + g\xe2\x82\x81*x' + x = 0", {{"g1", Rational(3)}});
    CHECK(b.eom.b1 == RatMatrix{{Rational(-3)}});
    // binding given in unicode, text in ascii
    const ParsedSystem c = parse_eom("x'' + l*x = 0", {{"\xce\xbb", Rational(5)}});
    CHECK(c.eom.b2 == RatMatrix{{Rational(-5)}});
}

TEST_CASE("parser error reporting") {
    CHECK_THROWS_AS(parse_eom("x'' + g*x' + x = 0", {}), UnboundParameterError);
    CHECK_THROWS_AS(parse_eom("x'' + x' * x' + x = 0", {}), NonlinearVelocityError);
    CHECK_THROWS_AS(parse_eom("x'' + x*x' = 0", {}), NonlinearVelocityError);
    CHECK_THROWS_AS(parse_eom("x + 1 = 0", {}), ParseError);
    CHECK_THROWS_AS(parse_eom("x'' + x = 1", {}), ParseError);
    CHECK_THROWS_AS(parse_eom("x'' + @ = 0", {}), ParseError);
    CHECK_THROWS_AS(parse_eom("x'' + y' + x = 0", {}), ParseError);  // y never declared
    CHECK_THROWS_AS(parse_eom("x'' + x = 0\nx'' - x = 0", {}), ParseError);
    CHECK_THROWS_AS(parse_eom("2*x'' + x = 0", {}), ParseError);
    CHECK_THROWS_AS(parse_eom("x'' + x = x^9", {}), ParseError);  // degree cap
    try {
        parse_eom("x'' + x = 0\ny'' + q*y = 0", {});
        FAIL("expected UnboundParameterError");
    } catch (const UnboundParameterError& e) {
        CHECK(e.name == "q");
        CHECK(e.line == 2);
    }
}

TEST_CASE("fraction literals and parentheses") {
    const ParsedSystem sys = parse_eom("x'' + 3/4*x' + (1/2 + 1/2)*x = 0", {});
    CHECK(sys.eom.b1 == RatMatrix{{Rational(-3, 4)}});
    CHECK(sys.eom.b2 == RatMatrix{{-one}});
}

TEST_CASE("render and reparse is the identity on the demo systems") {
    for (const auto& demo : demos()) {
        const ParsedSystem sys = parse_eom(demo.eom_text, demo.params);
        const std::string text = render_eom(sys);
        const ParsedSystem again = parse_eom(text, {});
        CHECK(again.vars == sys.vars);
        CHECK(again.eom == sys.eom);
        for (std::size_t i = 0; i < sys.force.n(); ++i)
            CHECK(again.force.components[i] == sys.force.components[i]);
        CHECK(render_eom(again) == text);
    }
}

TEST_CASE("render round-trip on random systems") {
    Rng rng(107);
    for (int iter = 0; iter < 15; ++iter) {
        const std::size_t n = 1 + rng() % 3;
        ParsedSystem sys;
        sys.vars = position_vars(n);
        sys.eom = EquationsOfMotion{rand_matrix(rng, n, n, -4, 4), rand_matrix(rng, n, n, -4, 4)};
        for (std::size_t i = 0; i < n; ++i) {
            MultiPoly f(sys.vars);
            if (rng() % 2) {
                MultiPoly::Exps e(n, 0);
                e[rng() % n] = 2;
                f.add_term(e, rand_rational(rng, -3, 3));
            }
            sys.force.components.push_back(f);
        }
        const ParsedSystem again = parse_eom(render_eom(sys), {});
        CHECK(again.eom == sys.eom);
        for (std::size_t i = 0; i < n; ++i) CHECK(again.force.components[i] == sys.force.components[i]);
    }
}

TEST_CASE("plain polynomial parsing") {
    const std::vector<std::string> vars{"x", "y"};
    const MultiPoly p = parse_polynomial("x^2 - 2*x*y + 1/3", vars, {});
    CHECK(p.coeff({2, 0}) == one);
    CHECK(p.coeff({1, 1}) == Rational(-2));
    CHECK(p.coeff({0, 0}) == Rational(1, 3));
    CHECK_THROWS_AS(parse_polynomial("x'", vars, {}), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x + ", vars, {}), ParseError);
}
