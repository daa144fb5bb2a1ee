// Factorization: univariate irreducible factorization over the rationals
// and the degree-capped multivariate irreducibility test.

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fixlocus/factor.hpp"
#include "fixlocus/rng.hpp"

#include "helpers.hpp"

using namespace fixlocus;
using testutil::px;
using testutil::pxy;
using testutil::pxyz;

namespace {

bool has_factor(const FactorList& fl, const Polynomial& p, std::uint32_t mult) {
    for (const auto& [f, m] : fl.factors)
        if (f == p && m == mult) return true;
    return false;
}

}  // namespace

TEST_CASE("quadratic with rational roots splits into primitive linears") {
    // 6x^2 + 5x + 1 = (2x + 1)(3x + 1), roots -1/2 and -1/3.
    FactorList fl = factor_univariate(px("6*x^2 + 5*x + 1"));
    CHECK(fl.unit == 1);
    REQUIRE(fl.factors.size() == 2);
    CHECK(has_factor(fl, px("2*x + 1"), 1));
    CHECK(has_factor(fl, px("3*x + 1"), 1));
    for (const auto& [f, m] : fl.factors) {
        RationalPoint root({f == px("2*x + 1") ? Rational(-1, 2) : Rational(-1, 3)});
        CHECK(f.evaluate(root) == 0);
        CHECK(m == 1);
    }
}

TEST_CASE("classic splittings") {
    SUBCASE("x^4 - 1") {
        FactorList fl = factor_univariate(px("x^4 - 1"));
        CHECK(fl.unit == 1);
        REQUIRE(fl.factors.size() == 3);
        CHECK(has_factor(fl, px("x - 1"), 1));
        CHECK(has_factor(fl, px("x + 1"), 1));
        CHECK(has_factor(fl, px("x^2 + 1"), 1));
    }
    SUBCASE("content is split off as the unit") {
        FactorList fl = factor_univariate(px("12*x^2 - 3"));
        CHECK(fl.unit == 3);
        CHECK(has_factor(fl, px("2*x - 1"), 1));
        CHECK(has_factor(fl, px("2*x + 1"), 1));
    }
    SUBCASE("rational coefficients") {
        FactorList fl = factor_univariate(px("1/2*x^2 - 1/2"));
        CHECK(fl.unit == Rational(1, 2));
        CHECK(has_factor(fl, px("x - 1"), 1));
        CHECK(has_factor(fl, px("x + 1"), 1));
    }
}

TEST_CASE("multiplicities are recovered") {
    Polynomial p = px("(x + 1)^3 * (x - 2)^2 * x");
    FactorList fl = factor_univariate(p);
    REQUIRE(fl.factors.size() == 3);
    CHECK(has_factor(fl, px("x + 1"), 3));
    CHECK(has_factor(fl, px("x - 2"), 2));
    CHECK(has_factor(fl, px("x"), 1));
    CHECK(fl.expand(1) == p);
}

TEST_CASE("irreducibles come back whole") {
    for (const char* text : {"x^2 + 1", "x^2 - 2", "x^5 - x - 1", "x^4 + x + 1"}) {
        FactorList fl = factor_univariate(px(text));
        REQUIRE(fl.factors.size() == 1);
        CHECK(fl.factors[0].second == 1);
        CHECK(fl.factors[0].first == px(text));
    }
}

TEST_CASE("recombination survives polynomials that split modulo every prime") {
    // (x^2 - 2)(x^2 - 3)(x^2 + 1) has no root in Q but splits into small
    // factors mod every prime, forcing genuine subset recombination.
    Polynomial p = px("(x^2 - 2) * (x^2 - 3) * (x^2 + 1)");
    FactorList fl = factor_univariate(p);
    CHECK(fl.unit == 1);
    REQUIRE(fl.factors.size() == 3);
    CHECK(has_factor(fl, px("x^2 - 2"), 1));
    CHECK(has_factor(fl, px("x^2 - 3"), 1));
    CHECK(has_factor(fl, px("x^2 + 1"), 1));
}

TEST_CASE("factor then expand is the identity on random products") {
    Rng rng(20240901);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial p = Polynomial::constant(1, Rational(1));
        const int parts = static_cast<int>(rng.uniform(1, 3));
        for (int k = 0; k < parts; ++k) {
            Polynomial f(1);
            const int deg = static_cast<int>(rng.uniform(1, 3));
            for (int d = 0; d <= deg; ++d) {
                long c = rng.uniform(-6, 6);
                if (d == deg && c == 0) c = 1;
                f.add_term(Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(d)}),
                           Rational(c));
            }
            p = p * f;
        }
        if (p.is_constant()) continue;
        FactorList fl = factor_univariate(p);
        CHECK(fl.expand(1) == p);
        for (const auto& [f, m] : fl.factors) {
            CHECK(m >= 1);
            FactorList again = factor_univariate(f);
            REQUIRE(again.factors.size() == 1);
            CHECK(again.factors[0].first == f);
        }
    }
}

TEST_CASE("univariate factorization rejects bad input") {
    CHECK_THROWS_AS(factor_univariate(Polynomial::constant(1, Rational(3))), DomainError);
    CHECK_THROWS_AS(factor_univariate(Polynomial::zero(1)), DomainError);
    CHECK_THROWS_AS(factor_univariate(pxy("x*y")), DomainError);
}

TEST_CASE("multivariate irreducibility by Kronecker substitution") {
    SUBCASE("the quadric cone is absolutely irreducible") {
        IrreducibilityResult r = irreducible_multivariate(pxyz("x^2 - y*z"));
        CHECK(r.verdict == IrreducibilityVerdict::Irreducible);
        CHECK(r.absolute_certified);
    }
    SUBCASE("mirror quadric") {
        IrreducibilityResult r = irreducible_multivariate(pxyz("x*z + y^2"));
        CHECK(r.verdict == IrreducibilityVerdict::Irreducible);
        CHECK(r.absolute_certified);
    }
    SUBCASE("difference of squares is found reducible") {
        IrreducibilityResult r = irreducible_multivariate(pxy("x^2 - y^2"));
        CHECK(r.verdict == IrreducibilityVerdict::Reducible);
        REQUIRE(r.factors.has_value());
        CHECK(r.factors->factors.size() == 2);
        CHECK(r.factors->expand(2) == pxy("x^2 - y^2"));
    }
    SUBCASE("monomial products split") {
        IrreducibilityResult r = irreducible_multivariate(pxy("x*y"));
        CHECK(r.verdict == IrreducibilityVerdict::Reducible);
    }
    SUBCASE("rank-2 quadric is irreducible over Q but not certified absolute") {
        IrreducibilityResult r = irreducible_multivariate(pxy("x^2 + y^2"));
        CHECK(r.verdict == IrreducibilityVerdict::Irreducible);
        CHECK_FALSE(r.absolute_certified);
    }
    SUBCASE("cubic in three variables") {
        IrreducibilityResult r = irreducible_multivariate(pxyz("x^2 - y^2*z"));
        CHECK(r.verdict == IrreducibilityVerdict::Irreducible);
        CHECK_FALSE(r.absolute_certified);
    }
    SUBCASE("linear polynomials are absolutely irreducible") {
        IrreducibilityResult r = irreducible_multivariate(pxyz("x + 2*y - 3*z"));
        CHECK(r.verdict == IrreducibilityVerdict::Irreducible);
        CHECK(r.absolute_certified);
    }
    SUBCASE("degree cap yields Unknown, not a guess") {
        Polynomial p = pxy("x^9 + y^9 + 1");
        IrreducibilityResult r = irreducible_multivariate(p, 8);
        CHECK(r.verdict == IrreducibilityVerdict::Unknown);
    }
    SUBCASE("non-squarefree input is rejected") {
        CHECK_THROWS_AS(irreducible_multivariate(pxy("x^2 + 2*x*y + y^2")), DomainError);
    }
}

TEST_CASE("quadratic form rank certificates") {
    CHECK(quadratic_form_rank(pxyz("x^2 - y*z")) == 3);
    CHECK(quadratic_form_rank(pxyz("x*z + y^2")) == 3);
    CHECK(quadratic_form_rank(pxy("x^2 + y^2")) == 2);
    CHECK(quadratic_form_rank(pxy("x*y")) == 2);
    CHECK(quadratic_form_rank(px("x^2")) == 1);
    // Inhomogeneous ones are homogenized first: x^2 - 1 ~ x^2 - w^2.
    CHECK(quadratic_form_rank(px("x^2 - 1")) == 2);
    CHECK(quadratic_form_rank(pxyz("x^2 + y^2 + z^2 + 1")) == 4);
    CHECK(quadratic_form_rank(pxyz("z^2 - y")) == 3);
}
