#include <doctest.h>

#include <random>

#include "janet/polynomial.hpp"
#include "oracles.hpp"

using namespace janet;

namespace {

Polynomial x(int i) { return Polynomial::variable(2, i); }
Polynomial c(int v) { return Polynomial(2, v); }

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    const Polynomial s = x(1) + x(2);
    CHECK(s * s == x(1) * x(1) + c(2) * x(1) * x(2) + x(2) * x(2));
    CHECK(s - s == Polynomial(2));
    CHECK((s * c(0)).is_zero());
    CHECK(s.degree() == 1);
    CHECK(Polynomial(2).degree() == -1);
}

TEST_CASE("derivatives") {
    const Polynomial p = x(1) * x(1) * x(2);
    CHECK(p.derivative(1) == c(2) * x(1) * x(2));
    CHECK(p.derivative(2) == x(1) * x(1));
    CHECK(p.multi_derivative(Monomial({2, 1})) == c(2));
    CHECK(p.multi_derivative(Monomial({0, 2})).is_zero());
}

TEST_CASE("substitution and truncation") {
    const Polynomial p = x(1) * x(2) + x(2) * x(2) + x(1) + c(3);
    const int only2[] = {1};
    CHECK(p.at_zero(only2) == x(2) * x(2) + c(3));
    CHECK(p.truncated(1) == x(1) + c(3));
    const int vars[] = {1, 2};
    CHECK(p.mentions_only(vars));
    const int just1[] = {1};
    CHECK_FALSE(p.mentions_only(just1));
}

TEST_CASE("gcd and exact division") {
    const Polynomial diff = x(1) * x(1) - x(2) * x(2);
    const Polynomial lin = x(1) - x(2);
    const Polynomial g = poly_gcd(diff, lin);
    CHECK(g == x(2) - x(1));  // monic under deglex: the x2 coefficient is 1
    CHECK(divide_exact(diff, lin) == x(1) + x(2));

    const Polynomial cube = (x(1) + x(2)) * (x(1) + x(2)) * (x(1) + x(2));
    CHECK(divide_exact(cube, x(1) + x(2)) == (x(1) + x(2)) * (x(1) + x(2)));
    CHECK_THROWS_AS(divide_exact(x(1) + c(1), x(2)), std::invalid_argument);
}

TEST_CASE("rational functions normalize to lowest terms with a monic denominator") {
    CHECK(RationalFunction(c(2) * x(1), c(2)) == RationalFunction(x(1)));
    const RationalFunction f(x(1), c(2) * x(2));
    CHECK(f.numerator() == x(1).scaled(Rational(1, 2)));
    CHECK(f.denominator() == x(2));

    const RationalFunction g(x(1) * x(1) - x(2) * x(2), x(1) - x(2));
    CHECK(g == RationalFunction(x(1) + x(2)));
    CHECK(g.is_polynomial());
}

TEST_CASE("rational function field operations") {
    std::mt19937_64 rng(41);
    const RationalFunction one = RationalFunction::constant(2, 1);
    for (int k = 0; k < 25; ++k) {
        Polynomial a = testing::random_polynomial(rng, 2, 2, 3);
        Polynomial b = testing::random_polynomial(rng, 2, 2, 3);
        if (a.is_zero() || b.is_zero()) continue;
        const RationalFunction f(a, b);
        const RationalFunction g(b, a);
        CHECK(f * g == one);
        CHECK(f / f == one);
        const RationalFunction h(testing::random_polynomial(rng, 2, 2, 3));
        CHECK((f + h) - h == f);
    }
}

TEST_CASE("quotient rule") {
    const RationalFunction f(x(1), x(2));
    CHECK(f.derivative(1) == RationalFunction(c(1), x(2)));
    CHECK(f.derivative(2) == RationalFunction(-x(1), x(2) * x(2)));

    // d/dx of (x^2+1)/(x+1) against the hand-computed value
    Polynomial y = Polynomial::variable(1, 1);
    Polynomial one1(1, 1);
    const RationalFunction q(y * y + one1, y + one1);
    const RationalFunction expected(y * y + y * Polynomial(1, 2) - one1,
                                    (y + one1) * (y + one1));
    CHECK(q.derivative(1) == expected);
}

TEST_CASE("evaluation at the origin") {
    const RationalFunction f(x(1) + c(1), x(2) + c(2));
    CHECK(f.eval_origin() == Rational(1, 2));
    CHECK_THROWS_AS(RationalFunction(c(1), x(1)).eval_origin(), std::invalid_argument);
}
