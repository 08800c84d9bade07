#include <doctest.h>

#include "helpers.hpp"
#include "symdet/poly.hpp"
#include "symdet/rng.hpp"

using namespace symdet;

namespace {

Polynomial P(const char* text, int s = 6) { return parse_polynomial(text, s); }

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("monomial order is graded lexicographic") {
    const Monomial one;
    const Monomial x1 = Monomial::variable(1);
    const Monomial x2 = Monomial::variable(2);
    const Monomial x1x1 = x1 * x1;
    const Monomial x1x2 = x1 * x2;
    const Monomial x2x2 = x2 * x2;

    CHECK(x1 > one);
    CHECK(x1 > x2);          // same degree: lexicographic
    CHECK(x1x1 > x1x2);
    CHECK(x1x2 > x2x2);
    CHECK(x1x1 > x2);        // higher degree dominates
    CHECK(x1x2 == x2 * x1);  // commutative product
}

TEST_CASE("monomial equality ignores trailing zero exponents") {
    CHECK(Monomial({1, 0, 0}) == Monomial({1}));
    CHECK(Monomial({0, 0}) == Monomial());
    CHECK(Monomial({1, 2}).total_degree() == 3);
}

TEST_CASE("addition consolidates and cancels") {
    CHECK(P("x1 + x2") + P("x1 - x2") == P("2*x1"));
    CHECK(P("3*x1*x2 - 1") + P("-3*x1*x2 + 5") == P("4"));
    const Polynomial p = P("x1^2 - 7*x3 + 2");
    CHECK(p + Polynomial() == p);
    CHECK((p - p).is_zero());
}

TEST_CASE("multiplication consolidates cross terms") {
    CHECK(P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2"));
    CHECK(P("x1 + x2") * P("x1 + x2") == P("x1^2 + 2*x1*x2 + x2^2"));
    CHECK((P("x1 + x2") * P("x1 + x2")).nterms() == 3);
    const Polynomial p = P("5*x1*x3 - 2");
    CHECK(p * Polynomial::constant(1) == p);
    CHECK((p * Polynomial()).is_zero());
}

TEST_CASE("ring laws on random triples") {
    Rng rng(2024);
    for (int trial = 0; trial < 1200; ++trial) {
        const Polynomial a = testutil::random_polynomial(rng, 3, 3, 4);
        const Polynomial b = testutil::random_polynomial(rng, 3, 3, 4);
        const Polynomial c = testutil::random_polynomial(rng, 3, 3, 4);
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("term count bounds") {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Polynomial a = testutil::random_polynomial(rng, 3, 3, 5);
        const Polynomial b = testutil::random_polynomial(rng, 3, 3, 5);
        REQUIRE((a * b).nterms() <= a.nterms() * b.nterms());
        REQUIRE((a + b).nterms() <= a.nterms() + b.nterms());
    }
}

TEST_CASE("nterms") {
    CHECK(Polynomial().nterms() == 0);
    CHECK(P("3*x1*x2 - 2*x3 + 1").nterms() == 3);
    CHECK((P("x1 + x2") * P("x1 + x2")).nterms() == 3);
}

TEST_CASE("exact division") {
    CHECK(div_exact(P("x1^2 - x2^2"), P("x1 - x2")) == P("x1 + x2"));
    const Polynomial p = P("4*x1^3 - x2 + 9");
    CHECK(div_exact(p, Polynomial::constant(1)) == p);
    CHECK(div_exact(Polynomial(), P("x1")).is_zero());
    CHECK_THROWS_AS(div_exact(P("x1^2 + x1*x2"), P("x2")), DivisionNotExact);
    CHECK_THROWS_AS(div_exact(P("x1"), Polynomial()), DivisionNotExact);
    // Integer-coefficient divisibility matters, not only monomials.
    CHECK_THROWS_AS(div_exact(P("3*x1"), P("2")), DivisionNotExact);
    CHECK(div_exact(P("6*x1"), P("2")) == P("3*x1"));
}

TEST_CASE("division error carries the operands") {
    try {
        div_exact(P("x1^2 + x1*x2"), P("x2"));
        FAIL("expected DivisionNotExact");
    } catch (const DivisionNotExact& e) {
        CHECK(e.dividend() == "x1^2 + x1*x2");
        CHECK(e.divisor() == "x2");
    }
}

TEST_CASE("division inverts multiplication on random pairs") {
    Rng rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        const Polynomial p = testutil::random_polynomial(rng, 3, 3, 4);
        const Polynomial q = testutil::random_nonzero_polynomial(rng, 3, 2, 3);
        REQUIRE(div_exact(p * q, q) == p);
        REQUIRE(q * div_exact(p * q, q) == p * q);
    }
}

TEST_CASE("homogeneity") {
    CHECK(P("x1*x2 + x3^2").is_homogeneous(2));
    CHECK_FALSE(P("x1 + 1").is_homogeneous(1));
    CHECK(Polynomial().is_homogeneous(7));
    CHECK(Polynomial().is_homogeneous(0));
    CHECK(P("5").is_homogeneous(0));
}

TEST_CASE("homogeneous products and sums") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int i = 1 + static_cast<int>(rng.below(3));
        const int j = 1 + static_cast<int>(rng.below(3));
        const Polynomial p = testutil::random_homogeneous(rng, 3, i, 4);
        const Polynomial q = testutil::random_homogeneous(rng, 3, j, 4);
        const Polynomial r = testutil::random_homogeneous(rng, 3, i, 4);
        REQUIRE((p * q).is_homogeneous(i + j));
        REQUIRE((p + r).is_homogeneous(i));
    }
}

TEST_CASE("homogeneous term bound") {
    // Enumeration oracle across a small grid.
    for (int i = 0; i <= 6; ++i)
        for (int s = 1; s <= 5; ++s)
            REQUIRE(homogeneous_term_bound(i, s) ==
                    Integer(static_cast<unsigned long>(testutil::count_monomials(i, s))));
    CHECK(homogeneous_term_bound(2, 3) == 6);
    CHECK(homogeneous_term_bound(0, 5) == 1);
    for (int s = 1; s <= 8; ++s) CHECK(homogeneous_term_bound(1, s) == s);

    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int deg = static_cast<int>(rng.below(4));
        const Polynomial p = testutil::random_homogeneous(rng, 4, deg, 6);
        REQUIRE(Integer(p.nterms()) <= homogeneous_term_bound(deg, 4));
    }
}

TEST_CASE("parse basics") {
    CHECK(P("3*x1*x2 - 2*x3 + 1").nterms() == 3);
    CHECK(P("0").is_zero());
    CHECK(P("-0").is_zero());
    CHECK(P("x1 + x1") == P("2*x1"));
    CHECK(P("x1*x1") == P("x1^2"));
    CHECK(P("-x1 + 5") == P("5 - x1"));
    CHECK(P("  3 * x1 ^ 2  ") == P("3*x1^2"));
    CHECK(P("12345678901234567890123") ==
          Polynomial::constant(Integer("12345678901234567890123")));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(P(""), SyntaxError);
    CHECK_THROWS_AS(P("x"), SyntaxError);
    CHECK_THROWS_AS(P("x0"), SyntaxError);
    CHECK_THROWS_AS(P("x1^0"), SyntaxError);
    CHECK_THROWS_AS(P("3 + "), SyntaxError);
    CHECK_THROWS_AS(P("3 * 4"), SyntaxError);
    CHECK_THROWS_AS(P("3 x1"), SyntaxError);
    CHECK_THROWS_AS(P("3 + -2"), SyntaxError);
    CHECK_THROWS_AS(P("x1 x2"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("x4", 3), VariableOutOfRange);
    try {
        P("3 + @");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("format canonical form") {
    CHECK(Polynomial().str() == "0");
    CHECK(P("1*x1^1").str() == "x1");
    CHECK(P("-1*x1").str() == "-x1");
    CHECK(P("x2 + x1").str() == "x1 + x2");
    CHECK(P("1 - 2*x3 + 3*x1*x2").str() == "3*x1*x2 - 2*x3 + 1");
    CHECK(P("x1^2*x2^3").str() == "x1^2*x2^3");
    CHECK(P("-7").str() == "-7");
}

TEST_CASE("parse/format round trip on random polynomials") {
    Rng rng(4242);
    for (int trial = 0; trial < 1000; ++trial) {
        const Polynomial p = testutil::random_polynomial(rng, 4, 4, 6, 99);
        REQUIRE(parse_polynomial(p.str(), 4) == p);
    }
}

}  // TEST_SUITE
