#include "doctest.h"
#include "taut/exactmath.hpp"

using namespace taut;

TEST_CASE("rational text round trip") {
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(to_string(make_rational(-4, 2)) == "-2");
    CHECK(parse_rational("3/2") == make_rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("factorials") {
    CHECK(factorial(5) == 120);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(7) == 105);
}

TEST_CASE("polynomial arithmetic") {
    MultiPoly a1 = MultiPoly::variable(3, 0, 1), a2 = MultiPoly::variable(3, 1, 1);
    MultiPoly p = (a1 + a2).pow(2);
    CHECK(p == a1 * a1 + a2 * a2 + a1 * a2 * Rational(2));
    CHECK(p.homogeneous_degree() == 2);
    CHECK(p.evaluate({1, 2, 0}) == 9);
    CHECK(parse_poly("a1^2 + 2a1a2 + a2^2", 3, 1) == p);
    CHECK(parse_poly(p.to_string(), 3, 1) == p);
    CHECK_THROWS(p + MultiPoly::variable(2, 0, 1));
}

TEST_CASE("exact division by a linear form") {
    MultiPoly a1 = MultiPoly::variable(3, 0, 1), a2 = MultiPoly::variable(3, 1, 1), a3 = MultiPoly::variable(3, 2, 1);
    MultiPoly l = a1 + a2 + a3;
    MultiPoly q = a1 * a2 - a3 * a3 * Rational(1, 3);
    auto r = exact_divide_linear(q * l, l);
    CHECK(r.remainder.is_zero());
    CHECK(r.quotient == q);
    auto s = exact_divide_linear(q * l + a2, l);
    CHECK(!s.remainder.is_zero());
    CHECK(r.quotient * l + r.remainder == q * l);
}

TEST_CASE("substitution") {
    MultiPoly b0 = MultiPoly::variable(2, 0), b1 = MultiPoly::variable(2, 1);
    MultiPoly p = b0 * b1 + b0;
    MultiPoly a1 = MultiPoly::variable(2, 0, 1), a2 = MultiPoly::variable(2, 1, 1);
    MultiPoly s = p.substitute({a1 + a2, -a2});
    CHECK(s == (a1 + a2) * (-a2) + a1 + a2);
}
