#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "zlab/laurent.hpp"

using namespace zlab;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int nvars, int terms) {
    LaurentPoly p(nvars);
    for (int i = 0; i < terms; ++i) {
        LaurentPoly t = LaurentPoly::constant(nvars, BigInt((long long)(rng() % 19) - 9));
        for (int v = 0; v < nvars; ++v) {
            int e = (int)(rng() % 7) - 3;
            if (e) t = t * LaurentPoly::variable(nvars, v, e);
        }
        p = p + t;
    }
    return p;
}

}  // namespace

TEST_CASE("ring identities") {
    std::mt19937 rng(17);
    for (int it = 0; it < 100; ++it) {
        LaurentPoly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 4), c = random_poly(rng, 3, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly(3));
    }
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(23);
    for (int it = 0; it < 200; ++it) {
        LaurentPoly a = random_poly(rng, 3, 5), b = random_poly(rng, 3, 4);
        if (b.is_zero()) continue;
        auto q = LaurentPoly::divide_exact(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("inexact division is detected") {
    int n = 2;
    LaurentPoly x = LaurentPoly::variable(n, 0), y = LaurentPoly::variable(n, 1);
    LaurentPoly one = LaurentPoly::constant(n, BigInt(1));
    CHECK_FALSE(LaurentPoly::divide_exact(x + one, y + one).has_value());
    CHECK_FALSE(LaurentPoly::divide_exact(x + one, x + y + one).has_value());
    CHECK_FALSE(LaurentPoly::divide_exact(x, LaurentPoly::constant(n, BigInt(2))).has_value());
    // monomial denominators always divide (Laurent ring units)
    auto q = LaurentPoly::divide_exact(x + y, x);
    REQUIRE(q.has_value());
    CHECK(*q == one + y * LaurentPoly::variable(n, 0, -1));
    auto q2 = LaurentPoly::divide_exact(x + one, y);
    REQUIRE(q2.has_value());
    CHECK(*q2 * y == x + one);
}

TEST_CASE("weighted max degree is the tropicalized value") {
    int n = 2;
    LaurentPoly x = LaurentPoly::variable(n, 0), y = LaurentPoly::variable(n, 1);
    LaurentPoly p = x * x + y * LaurentPoly::variable(n, 0, -1);  // x^2 + y/x
    std::vector<Rational> w = {Rational(3, 2), Rational(4)};
    // max(2*3/2, 4 - 3/2) = max(3, 5/2) = 3
    CHECK(*p.weighted_max_degree(w) == Rational(3));
    CHECK(p.max_degree(0) == 2);
    CHECK(p.max_degree(1) == 1);
}

TEST_CASE("printer is readable") {
    int n = 2;
    LaurentPoly x = LaurentPoly::variable(n, 0), y = LaurentPoly::variable(n, 1);
    LaurentPoly p = x * x - LaurentPoly::constant(n, BigInt(2)) * y;
    CHECK(p.to_string({"x", "y"}) == "x^2 - 2*y");
}

TEST_CASE("term budget aborts gracefully") {
    TermBudget b;
    b.limit = 10;
    CHECK_THROWS_AS(b.charge(11), BudgetExceeded);
}

TEST_CASE("large coefficients fall back to exact big-integer arithmetic") {
    int n = 2;
    LaurentPoly big = LaurentPoly::constant(n, BigInt::from_string("1000000000000")) *
                          LaurentPoly::variable(n, 0) +
                      LaurentPoly::constant(n, BigInt(1));
    LaurentPoly p = LaurentPoly::constant(n, BigInt(1));
    for (int i = 0; i < 5; ++i) p = p * big;
    // binomial expansion: leading coefficient 10^60, six terms
    CHECK(p.term_count() == 6);
    auto lead = std::prev(p.terms().end());
    CHECK(lead->second.to_string() == std::string("1") + std::string(60, '0'));
    auto q = LaurentPoly::divide_exact(p, big);
    REQUIRE(q.has_value());
    CHECK(*q * big == p);
    // exponents beyond the packed range also take the generic route
    LaurentPoly far = LaurentPoly::variable(n, 0, 5000) + LaurentPoly::variable(n, 1, -4000);
    CHECK((far * far).term_count() == 3);
    auto qf = LaurentPoly::divide_exact(far * far, far);
    REQUIRE(qf.has_value());
    CHECK(*qf == far);
}
