// Polynomial kernel: canonical form, arithmetic laws, calculus,
// substitution, gcd/squarefree, normalization, rendering.

#include <doctest.h>

#include <vector>

#include "fixlocus/eval.hpp"
#include "fixlocus/polynomial.hpp"
#include "fixlocus/rng.hpp"

#include "helpers.hpp"

using namespace fixlocus;
using testutil::px;
using testutil::pxy;
using testutil::pxyz;

namespace {

RationalPoint pt(long a, long b, long c) {
    return RationalPoint({Rational(a), Rational(b), Rational(c)});
}

}  // namespace

TEST_CASE("canonical form never stores zero coefficients") {
    Polynomial x = Polynomial::variable(2, 0);
    Polynomial y = Polynomial::variable(2, 1);

    SUBCASE("x - x collapses to the empty term map") {
        Polynomial d = x - x;
        CHECK(d.is_zero());
        CHECK(d.term_count() == 0);
        CHECK(d.total_degree() == -1);
    }
    SUBCASE("x + x merges into one term") {
        Polynomial s = x + x;
        CHECK(s.term_count() == 1);
        CHECK(s == x * Rational(2));
    }
    SUBCASE("add_term with zero coefficient is a no-op") {
        Polynomial p = x * y;
        p.add_term(Monomial({1, 1}), Rational(0));
        CHECK(p == x * y);
    }
    SUBCASE("adding the negation of a term erases it") {
        Polynomial p = x * y + y;
        p.add_term(Monomial({1, 1}), Rational(-1));
        CHECK(p == y);
        CHECK(p.term_count() == 1);
    }
}

TEST_CASE("constants and degrees") {
    Polynomial five = Polynomial::constant(3, Rational(5));
    CHECK(five.is_constant());
    CHECK(five.constant_value() == 5);
    CHECK(five.total_degree() == 0);

    Polynomial q = pxyz("x^2 - y*z");
    CHECK(q.total_degree() == 2);
    CHECK(q.degree_in(0) == 2);
    CHECK(q.degree_in(1) == 1);
    CHECK(q.degree_in(2) == 1);
    CHECK(q.uses_variable(2));
    CHECK_FALSE(pxyz("x^2 + y").uses_variable(2));
    CHECK(Polynomial::zero(3).constant_value() == 0);
}

TEST_CASE("ring laws hold on random polynomials") {
    Rng rng(2024);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = rng.polynomial(3, 3, 4);
        Polynomial b = rng.polynomial(3, 3, 4);
        Polynomial c = rng.polynomial(3, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Polynomial::zero(3));
        CHECK(a - b == a + (-b));
    }
}

TEST_CASE("derivative is linear and satisfies the Leibniz rule") {
    CHECK(pxyz("x^3").derivative(0) == pxyz("3*x^2"));
    CHECK(pxyz("x^2 - y*z").derivative(1) == pxyz("-z"));
    CHECK(Polynomial::constant(3, Rational(7)).derivative(0).is_zero());

    Rng rng(99);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = rng.polynomial(3, 3, 4);
        Polynomial q = rng.polynomial(3, 3, 4);
        std::uint32_t v = static_cast<std::uint32_t>(rng.uniform(0, 2));
        CHECK((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v));
        CHECK((p + q).derivative(v) == p.derivative(v) + q.derivative(v));
    }
}

TEST_CASE("evaluation agrees with the arithmetic structure") {
    Polynomial q = pxyz("x^2 - y*z");
    CHECK(q.evaluate(pt(2, 1, 3)) == 1);
    CHECK(q.evaluate(pt(0, 1, 0)) == 0);

    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        Polynomial a = rng.polynomial(3, 3, 4);
        Polynomial b = rng.polynomial(3, 3, 4);
        RationalPoint p = rng.point(3, 50, 9);
        CHECK((a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p));
        CHECK((a + b).evaluate(p) == a.evaluate(p) + b.evaluate(p));
    }

    CHECK_THROWS_AS(q.evaluate(RationalPoint({Rational(1)})), ArityError);
}

TEST_CASE("substitution is a ring homomorphism") {
    Rng rng(31337);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = rng.polynomial(2, 3, 3);
        Polynomial q = rng.polynomial(2, 3, 3);
        std::vector<Polynomial> images = {rng.polynomial(3, 2, 3), rng.polynomial(3, 2, 3)};
        CHECK(compose_substitute(p * q, images) ==
              compose_substitute(p, images) * compose_substitute(q, images));
        CHECK(compose_substitute(p + q, images) ==
              compose_substitute(p, images) + compose_substitute(q, images));
    }

    SUBCASE("substituting the variables themselves is the identity") {
        Polynomial p = pxyz("x^2*y - 3*z + 1/2");
        std::vector<Polynomial> id = {Polynomial::variable(3, 0), Polynomial::variable(3, 1),
                                      Polynomial::variable(3, 2)};
        CHECK(compose_substitute(p, id) == p);
    }
}

TEST_CASE("pow matches repeated multiplication") {
    Polynomial p = pxy("x + 2*y");
    CHECK(p.pow(0) == Polynomial::constant(2, Rational(1)));
    CHECK(p.pow(1) == p);
    CHECK(p.pow(3) == p * p * p);
    CHECK(pxy("x + y").pow(2) == pxy("x^2 + 2*x*y + y^2"));
}

TEST_CASE("leading terms under grevlex and lex") {
    // Equal total degree: grevlex prefers the monomial with the smaller
    // exponent in the last variable, lex the larger power of the first.
    Polynomial p = pxyz("x^2*z + x*y^2");
    CHECK(p.leading_monomial(grevlex()) == Monomial({1, 2, 0}));
    CHECK(p.leading_monomial(lex()) == Monomial({2, 0, 1}));
    CHECK(p.leading_coefficient(grevlex()) == 1);

    Polynomial q = pxyz("x^2 - y*z");
    CHECK(q.leading_monomial(grevlex()) == Monomial({2, 0, 0}));
    CHECK(q.leading_coefficient(grevlex()) == 1);
}

TEST_CASE("normalization produces primitive, positive-leading content") {
    CHECK(pxy("4*x + 6*y").normalized() == pxy("2*x + 3*y"));
    CHECK(pxy("-x + y").normalized() == pxy("x - y"));
    CHECK(pxyz("y - z^2").normalized() == pxyz("z^2 - y"));
    CHECK(pxy("1/2*x - 1/3*y").normalized() == pxy("3*x - 2*y"));
    CHECK(pxy("4*x + 6*y").content() == 2);
    CHECK(pxy("1/2*x - 1/3*y").content() == Rational(1, 6));
}

TEST_CASE("exact division recognizes divisors and rejects non-divisors") {
    Rng rng(555);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = rng.polynomial(3, 3, 4);
        Polynomial d = rng.polynomial(3, 2, 3);
        if (d.is_zero()) continue;
        auto quot = exact_divide(p * d, d);
        REQUIRE(quot.has_value());
        CHECK(*quot == p);
    }
    CHECK_FALSE(exact_divide(px("x^2 + 1"), px("x + 1")).has_value());
    CHECK_FALSE(exact_divide(pxy("x^2 - y"), pxy("x + y")).has_value());
}

TEST_CASE("multivariate gcd divides both inputs and finds planted factors") {
    Rng rng(808);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = rng.polynomial(3, 2, 3);
        Polynomial q = rng.polynomial(3, 2, 3);
        Polynomial r = rng.polynomial(3, 2, 2);
        Polynomial g = gcd_multivariate(p, q);
        if (!p.is_zero() || !q.is_zero()) {
            REQUIRE_FALSE(g.is_zero());
            CHECK(exact_divide(p, g).has_value());
            CHECK(exact_divide(q, g).has_value());
        }
        if (!p.is_zero() && !q.is_zero() && !r.is_zero()) {
            Polynomial g2 = gcd_multivariate(p * r, q * r);
            CHECK(exact_divide(g2, r.normalized()).has_value());
        }
    }

    SUBCASE("pinned example") {
        Polynomial a = pxyz("(x + y)*(x - z)");
        Polynomial b = pxyz("(x + y)*(y + z^2)");
        CHECK(gcd_multivariate(a, b) == pxyz("x + y"));
        CHECK(gcd_multivariate(a, Polynomial::zero(3)) == a.normalized());
    }
}

TEST_CASE("squarefree part strips multiplicities") {
    CHECK(squarefree_part(pxy("x^2*y^3")) == pxy("x*y"));
    CHECK(squarefree_part(pxy("(x + y)^2")) == pxy("x + y"));
    Polynomial q = pxyz("x^2 - y*z");
    CHECK(squarefree_part(q * q) == q.normalized());
    CHECK(squarefree_part(pxy("6*x")) == pxy("x"));
}

TEST_CASE("variable remapping embeds into larger rings") {
    Polynomial p = pxy("x^2 - y");  // two-variable ring
    std::vector<std::uint32_t> where = {1, 2};
    Polynomial q = p.remap_variables(3, where);  // now y^2 - z in three vars
    CHECK(q == pxyz("y^2 - z"));
    CHECK(q.nvars() == 3);
}

TEST_CASE("rendering round-trips through the parser") {
    std::vector<std::string> names = {"x", "y", "z"};
    Rng rng(4242);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = rng.polynomial(3, 4, 5);
        CHECK(testutil::parse_poly(to_string(p, names), names) == p);
    }
    CHECK(to_string(pxyz("x^2 - y*z"), names) == "x^2 - y*z");
    CHECK(to_string(Polynomial::zero(3), names) == "0");
    CHECK(to_string(pxyz("-x + 1/2"), names) == "-x + 1/2");
}

TEST_CASE("batch evaluation kernels match the serial reference exactly") {
    Rng rng(1618);
    Polynomial p = rng.polynomial(3, 4, 6);
    std::vector<RationalPoint> points = rng.points(300, 3, 200, 12);
    CHECK(evaluate_batch(p, points) == evaluate_batch_serial(p, points));
}
