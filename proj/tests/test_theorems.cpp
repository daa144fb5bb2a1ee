// Theorem checkers: smoothness certificates, Fix = V(h), witness
// verification, verdicts, and the assembled report.

#include <doctest.h>

#include <vector>

#include "fixlocus/theorems.hpp"

#include "helpers.hpp"

using namespace fixlocus;
using testutil::corpus_entry;
using testutil::pxy;
using testutil::pxyz;

namespace {

const TheoremVerdict* find_verdict(const FixReport& r, const std::string& id) {
    for (const TheoremVerdict& v : r.theorem_verdicts)
        if (v.id == id) return &v;
    return nullptr;
}

}  // namespace

TEST_CASE("smoothness and super-smoothness certificates") {
    SUBCASE("the quadric cone is singular at the origin") {
        Polynomial q = pxyz("x^2 - y*z");
        CHECK_FALSE(check_smooth(q, SmoothnessMode::Smooth));
        CHECK_FALSE(check_smooth(q, SmoothnessMode::SuperSmooth));
        Polynomial q2 = pxyz("x*z + y^2");
        CHECK_FALSE(check_smooth(q2, SmoothnessMode::Smooth));
        CHECK_FALSE(check_smooth(q2, SmoothnessMode::SuperSmooth));
    }
    SUBCASE("hyperplanes are super-smooth") {
        CHECK(check_smooth(pxyz("x"), SmoothnessMode::Smooth));
        CHECK(check_smooth(pxyz("x"), SmoothnessMode::SuperSmooth));
        CHECK(check_smooth(pxyz("z"), SmoothnessMode::SuperSmooth));
    }
    SUBCASE("the sphere is smooth but not super-smooth") {
        // The gradient vanishes at the origin, which is off the sphere:
        // every point of the hypersurface is smooth, yet the gradient is
        // not globally nonvanishing.
        Polynomial s = pxyz("x^2 + y^2 + z^2 - 1");
        CHECK(check_smooth(s, SmoothnessMode::Smooth));
        CHECK_FALSE(check_smooth(s, SmoothnessMode::SuperSmooth));
    }
    SUBCASE("the parabolic cylinder is super-smooth") {
        CHECK(check_smooth(pxyz("z^2 - y"), SmoothnessMode::SuperSmooth));
    }
    SUBCASE("reducible but smooth vs singular") {
        // y*z = 0 is singular along the line y = z = 0.
        CHECK_FALSE(check_smooth(pxyz("y*z"), SmoothnessMode::Smooth));
    }
    SUBCASE("input contracts") {
        CHECK_THROWS_AS(check_smooth(Polynomial::zero(3), SmoothnessMode::Smooth), DomainError);
        CHECK_THROWS_AS(check_smooth(pxy("x^2"), SmoothnessMode::Smooth), ContractError);
    }
}

TEST_CASE("Fix(f) = V(h) as a radical equality") {
    CHECK(check_fix_equals_hypersurface(corpus_entry("nagata_v1").aut) == true);
    CHECK(check_fix_equals_hypersurface(corpus_entry("nagata_v2").aut) == true);
    CHECK(check_fix_equals_hypersurface(corpus_entry("triangular_r1").aut) == true);
    CHECK(check_fix_equals_hypersurface(corpus_entry("scale_z").aut) == true);
    // The four-variable shear fixes V(z) plus an extra plane y = w = 0.
    CHECK(check_fix_equals_hypersurface(corpus_entry("shear4").aut) == false);
    // No hypersurface part: the question does not apply.
    CHECK_FALSE(check_fix_equals_hypersurface(corpus_entry("example2_f").aut).has_value());
    CHECK_FALSE(check_fix_equals_hypersurface(corpus_entry("identity").aut).has_value());
}

TEST_CASE("ruled witness verification") {
    SUBCASE("stored corpus witnesses verify") {
        for (const char* name : {"nagata_v1", "nagata_v2", "triangular_r1", "triangular_r2"}) {
            LoadedEntry e = corpus_entry(name);
            REQUIRE(e.witnesses.size() == 1);
            WitnessVerification v = verify_ruled_witness(e.witnesses[0]);
            CHECK(v.ok);
            CHECK(v.image_in_hypersurface);
            CHECK(v.nonconstant_in_t);
            CHECK(v.jacobian_rank_ok);
            CHECK(v.rank_check_probabilistic);
        }
    }
    SUBCASE("a degenerate family fails the rank clause only") {
        RuledWitness w;
        w.target_h = pxyz("x^2 - y*z");
        Polynomial t = Polynomial::variable(2, 0);
        w.psi = {t, t, t};  // image is the line x = y = z, inside the cone
        WitnessVerification v = verify_ruled_witness(w);
        CHECK(v.image_in_hypersurface);
        CHECK(v.nonconstant_in_t);
        CHECK_FALSE(v.jacobian_rank_ok);
        CHECK_FALSE(v.ok);
    }
    SUBCASE("a family missing the hypersurface fails clause (a)") {
        RuledWitness w;
        w.target_h = pxyz("x^2 - y*z");
        Polynomial t = Polynomial::variable(2, 0);
        Polynomial s = Polynomial::variable(2, 1);
        w.psi = {t, s, t};
        WitnessVerification v = verify_ruled_witness(w);
        CHECK_FALSE(v.image_in_hypersurface);
        CHECK_FALSE(v.ok);
    }
    SUBCASE("a family constant in t fails clause (b)") {
        RuledWitness w;
        w.target_h = pxyz("x^2 - y*z");
        Polynomial s = Polynomial::variable(2, 1);
        w.psi = {s, s, s};
        WitnessVerification v = verify_ruled_witness(w);
        CHECK(v.image_in_hypersurface);
        CHECK_FALSE(v.nonconstant_in_t);
        CHECK_FALSE(v.ok);
    }
    SUBCASE("shape violations are input errors") {
        RuledWitness w;
        w.target_h = pxyz("x^2 - y*z");
        w.psi = {Polynomial::variable(2, 0)};  // wrong component count
        CHECK_THROWS_AS(verify_ruled_witness(w), ShapeError);
    }
}

TEST_CASE("theorem verdicts on the corpus") {
    AnalysisOptions opts;

    SUBCASE("non-special profile passes for the non-special entries") {
        CHECK(verdict_nonspecial(corpus_entry("linear_eps").aut, opts).status ==
              VerdictStatus::Pass);
        CHECK(verdict_nonspecial(corpus_entry("scale_z").aut, opts).status ==
              VerdictStatus::Pass);
        CHECK(verdict_nonspecial(corpus_entry("nagata_v1").aut, opts).status ==
              VerdictStatus::NotApplicable);
        CHECK(verdict_nonspecial(corpus_entry("example2_g").aut, opts).status ==
              VerdictStatus::NotApplicable);
    }
    SUBCASE("finite order with a fixed hypersurface forces lambda != 1") {
        CHECK(verdict_finite_order(corpus_entry("linear_eps").aut, opts).status ==
              VerdictStatus::Pass);
        CHECK(verdict_finite_order(corpus_entry("identity").aut, opts).status ==
              VerdictStatus::NotApplicable);
        CHECK(verdict_finite_order(corpus_entry("nagata_v1").aut, opts).status ==
              VerdictStatus::NotApplicable);
    }
    SUBCASE("singular fixed hypersurfaces only occur for special maps") {
        CHECK(verdict_singular_special(corpus_entry("nagata_v1").aut, opts).status ==
              VerdictStatus::Pass);
        CHECK(verdict_singular_special(corpus_entry("triangular_r2").aut, opts).status ==
              VerdictStatus::Pass);
        CHECK(verdict_singular_special(corpus_entry("linear_eps").aut, opts).status ==
              VerdictStatus::NotApplicable);
    }
}

TEST_CASE("the assembled report for the degree-five special map") {
    LoadedEntry e = corpus_entry("nagata_v1");
    FixReport r = full_report(e.aut, e.name, e.var_names, e.witnesses);

    CHECK(r.name == "nagata_v1");
    CHECK(r.n == 3);
    CHECK(r.specialness.special);
    CHECK(r.specialness.lambda == 1);
    CHECK_FALSE(r.order.finite);
    REQUIRE(r.hpart.kind == FixedLocusKind::Hypersurface);
    CHECK(*r.hpart.h == pxyz("x^2 - y*z"));
    CHECK(r.smooth == false);
    CHECK(r.supersmooth == false);
    REQUIRE(r.irreducible.has_value());
    CHECK(r.irreducible->verdict == IrreducibilityVerdict::Irreducible);
    CHECK(r.irreducible->absolute_certified);
    CHECK(r.fix_equals_h == true);
    REQUIRE(r.eigen_constant.has_value());
    CHECK(*r.eigen_constant == 1);
    REQUIRE(r.witness_results.size() == 1);
    CHECK(r.witness_results[0].ok);
    CHECK_FALSE(r.has_counterexample());

    const TheoremVerdict* uni = find_verdict(r, "uniruled_witness");
    REQUIRE(uni != nullptr);
    CHECK(uni->status == VerdictStatus::Pass);
    const TheoremVerdict* sing = find_verdict(r, "singular_implies_special");
    REQUIRE(sing != nullptr);
    CHECK(sing->status == VerdictStatus::Pass);
    const TheoremVerdict* nonspec = find_verdict(r, "nonspecial_fixed_hypersurface");
    REQUIRE(nonspec != nullptr);
    CHECK(nonspec->status == VerdictStatus::NotApplicable);
}

TEST_CASE("no corpus entry raises a counterexample") {
    for (const CorpusEntry& entry : corpus()) {
        LoadedEntry e = load_corpus_entry(entry);
        FixReport r = full_report(e.aut, e.name, e.var_names, e.witnesses);
        INFO("entry: ", entry.name);
        CHECK_FALSE(r.has_counterexample());
        CHECK(r.n == e.var_names.size());
    }
}
