// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit 1 on
// any failure. Every comparison is exact; every randomized check is
// seeded. Runs entirely against the public library surface.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fixlocus/corpus.hpp"
#include "fixlocus/eval.hpp"
#include "fixlocus/groebner.hpp"
#include "fixlocus/report_io.hpp"
#include "fixlocus/rng.hpp"
#include "fixlocus/theorems.hpp"

#include "helpers.hpp"

using namespace fixlocus;
using testutil::corpus_entry;
using testutil::matmul;
using testutil::pxyz;

namespace {

int g_failures = 0;
bool g_ok = true;
std::string g_detail;

#define EXPECT(cond, msg)                                   \
    do {                                                    \
        if (!(cond)) {                                      \
            g_ok = false;                                   \
            if (g_detail.empty()) g_detail = (msg);         \
        }                                                   \
    } while (0)

void criterion(int num, const std::string& title, const std::function<void()>& body) {
    g_ok = true;
    g_detail.clear();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        g_ok = false;
        g_detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (g_ok) {
        std::cout << "[PASS] criterion " << num << ": " << title << " (" << ms << " ms)\n";
    } else {
        std::cout << "[FAIL] criterion " << num << ": " << title << " — " << g_detail << "\n";
        ++g_failures;
    }
}

TameGenerator random_elementary3(Rng& rng) {
    const std::uint32_t idx = static_cast<std::uint32_t>(rng.uniform(0, 2));
    Polynomial addend = rng.polynomial(2, 2, 3);
    std::vector<std::uint32_t> others;
    for (std::uint32_t v = 0; v < 3; ++v)
        if (v != idx) others.push_back(v);
    return TameGenerator(ElementaryGenerator{idx, addend.remap_variables(3, others)});
}

}  // namespace

int main() {
    const auto suite0 = std::chrono::steady_clock::now();

    criterion(1, "both degree-five presentations are special and fix their quadric", [] {
        for (const char* name : {"nagata_v1", "nagata_v2"}) {
            LoadedEntry e = corpus_entry(name);
            EXPECT(e.aut.jacobian_determinant() == 1,
                   std::string(name) + ": jacobian determinant is not 1");
            FixedLocus fl = fixed_hypersurface_part(e.aut);
            EXPECT(fl.kind == FixedLocusKind::Hypersurface,
                   std::string(name) + ": no fixed hypersurface");
            const Polynomial expected =
                pxyz(std::string(name) == "nagata_v1" ? "x^2 - y*z" : "x*z + y^2");
            EXPECT(*fl.h == expected, std::string(name) + ": wrong quadric");
            EXPECT(eigen_factor(e.aut, *fl.h) == 1, std::string(name) + ": eigen factor is not 1");
            EXPECT(compose_substitute(*fl.h, e.aut.forward().components) == *fl.h,
                   std::string(name) + ": h o f differs from h symbolically");
        }
    });

    criterion(2, "the fixed quadric cones are singular (not smooth, not super-smooth)", [] {
        for (const char* text : {"x^2 - y*z", "x*z + y^2"}) {
            EXPECT(!check_smooth(pxyz(text), SmoothnessMode::Smooth),
                   std::string(text) + " reported smooth");
            EXPECT(!check_smooth(pxyz(text), SmoothnessMode::SuperSmooth),
                   std::string(text) + " reported super-smooth");
        }
    });

    criterion(3, "non-special profile: smooth, Fix = V(h), not reducible, eigen = lambda", [] {
        struct Row {
            const char* name;
            long lambda;
        };
        for (Row row : {Row{"scale_z", 2}, Row{"linear_eps", -1}}) {
            LoadedEntry e = corpus_entry(row.name);
            FixReport r = full_report(e.aut, e.name, e.var_names, e.witnesses);
            EXPECT(r.smooth == true, std::string(row.name) + ": hypersurface not smooth");
            EXPECT(r.fix_equals_h == true, std::string(row.name) + ": Fix(f) != V(h)");
            EXPECT(r.irreducible.has_value() &&
                       r.irreducible->verdict != IrreducibilityVerdict::Reducible,
                   std::string(row.name) + ": h reported reducible");
            EXPECT(r.eigen_constant.has_value() && *r.eigen_constant == row.lambda,
                   std::string(row.name) + ": eigen constant differs from lambda");
            EXPECT(r.specialness.lambda == row.lambda,
                   std::string(row.name) + ": unexpected lambda");
            EXPECT(!r.has_counterexample(), std::string(row.name) + ": verdict failure");
        }
    });

    criterion(4, "infinite-order lambda: super-smooth fibers shifted exactly by lambda", [] {
        LoadedEntry e = corpus_entry("scale_z");
        FixedLocus fl = fixed_hypersurface_part(e.aut);
        EXPECT(fl.kind == FixedLocusKind::Hypersurface, "scale_z: no fixed hypersurface");
        EXPECT(check_smooth(*fl.h, SmoothnessMode::SuperSmooth),
               "scale_z: hypersurface not super-smooth");
        // Fiber shift: s(f(p)) = lambda * s(p) for s = h, at 200 seeded points.
        const Rational lambda = e.aut.jacobian_determinant();
        EXPECT(lambda == 2, "scale_z: lambda is not 2");
        Rng rng(12345);
        std::vector<RationalPoint> pts = rng.points(200, 3, 300, 15);
        std::vector<RationalPoint> images = map_batch(e.aut.forward().components, pts);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            EXPECT(fl.h->evaluate(images[i]) == lambda * fl.h->evaluate(pts[i]),
                   "fiber-shift identity failed at a sample point");
        }
    });

    criterion(5, "the order-two reflection: Finite(2), h = {x = 0}, non-special verdict", [] {
        LoadedEntry e = corpus_entry("linear_eps");
        EXPECT((detect_order(e.aut) == OrderResult{true, 2}), "order is not Finite(2)");
        FixedLocus fl = fixed_hypersurface_part(e.aut);
        EXPECT(fl.kind == FixedLocusKind::Hypersurface && *fl.h == pxyz("x"),
               "fixed hypersurface is not {x = 0}");
        EXPECT(e.aut.jacobian_determinant() == -1, "lambda is not -1");
        TheoremVerdict v = verdict_nonspecial(e.aut);
        EXPECT(v.status == VerdictStatus::Pass, "non-special verdict did not pass: " + v.reason);
    });

    criterion(6, "every special entry with a fixed hypersurface carries a verified witness", [] {
        for (const char* name : {"nagata_v1", "nagata_v2", "triangular_r1", "triangular_r2"}) {
            LoadedEntry e = corpus_entry(name);
            EXPECT(!e.witnesses.empty(), std::string(name) + ": no stored witness");
            for (std::size_t i = 0; i < e.witnesses.size(); ++i) {
                WitnessVerification w = verify_ruled_witness(e.witnesses[i], 12345 + i);
                EXPECT(w.image_in_hypersurface,
                       std::string(name) + ": witness image leaves the hypersurface");
                EXPECT(w.nonconstant_in_t, std::string(name) + ": witness is constant in t");
                EXPECT(w.jacobian_rank_ok, std::string(name) + ": witness rank check failed");
                EXPECT(w.ok, std::string(name) + ": witness did not verify");
            }
        }
    });

    criterion(7, "the checkers are not vacuous: Fix != V(h) and a locus with no h at all", [] {
        LoadedEntry shear = corpus_entry("shear4");
        FixedLocus fl = fixed_hypersurface_part(shear.aut);
        EXPECT(fl.kind == FixedLocusKind::Hypersurface,
               "shear4: expected a hypersurface part");
        EXPECT(*fl.h == testutil::parse_poly("z", {"x", "y", "z", "w"}),
               "shear4: hypersurface part is not z");
        EXPECT(check_fix_equals_hypersurface(shear.aut) == false,
               "shear4: Fix(f) = V(h) should fail");
        // Concrete separating point: (0, 0, 1, 0) lies on every fixed-locus
        // generator but not on {z = 0}.
        RationalPoint p({Rational(0), Rational(0), Rational(1), Rational(0)});
        RationalPoint img = shear.aut.forward().evaluate(p);
        EXPECT(img.coords == p.coords, "shear4: (0,0,1,0) should be a fixed point");
        EXPECT(fl.h->evaluate(p) != 0, "shear4: (0,0,1,0) should be off {z = 0}");

        LoadedEntry g = corpus_entry("example2_g");
        EXPECT(fixed_hypersurface_part(g.aut).kind == FixedLocusKind::Unit,
               "example2_g: fixed locus should have no hypersurface part");
    });

    criterion(8, "kernel property suites at full sample counts", [] {
        // Ring laws, 100 random triples.
        {
            Rng rng(1001);
            for (int i = 0; i < 100; ++i) {
                Polynomial a = rng.polynomial(3, 3, 4);
                Polynomial b = rng.polynomial(3, 3, 4);
                Polynomial c = rng.polynomial(3, 3, 4);
                EXPECT((a + b) + c == a + (b + c), "ring law: associativity of +");
                EXPECT(a * (b + c) == a * b + a * c, "ring law: distributivity");
                EXPECT(a * b == b * a, "ring law: commutativity of *");
            }
        }
        // Leibniz rule, 100 random pairs.
        {
            Rng rng(1002);
            for (int i = 0; i < 100; ++i) {
                Polynomial p = rng.polynomial(3, 3, 4);
                Polynomial q = rng.polynomial(3, 3, 4);
                std::uint32_t v = static_cast<std::uint32_t>(rng.uniform(0, 2));
                EXPECT((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v),
                       "Leibniz rule");
            }
        }
        // Substitution is a homomorphism, 100 random instances.
        {
            Rng rng(1003);
            for (int i = 0; i < 100; ++i) {
                Polynomial p = rng.polynomial(2, 3, 3);
                Polynomial q = rng.polynomial(2, 3, 3);
                std::vector<Polynomial> im = {rng.polynomial(3, 2, 3), rng.polynomial(3, 2, 3)};
                EXPECT(compose_substitute(p * q, im) ==
                           compose_substitute(p, im) * compose_substitute(q, im),
                       "substitution homomorphism (products)");
                EXPECT(compose_substitute(p + q, im) ==
                           compose_substitute(p, im) + compose_substitute(q, im),
                       "substitution homomorphism (sums)");
            }
        }
        // gcd divides both inputs, 200 pairs.
        {
            Rng rng(1004);
            for (int i = 0; i < 200; ++i) {
                Polynomial p = rng.polynomial(3, 2, 3);
                Polynomial q = rng.polynomial(3, 2, 3);
                Polynomial g = gcd_multivariate(p, q);
                if (p.is_zero() && q.is_zero()) continue;
                EXPECT(!g.is_zero(), "gcd of nonzero pair is zero");
                EXPECT(exact_divide(p, g).has_value(), "gcd does not divide first input");
                EXPECT(exact_divide(q, g).has_value(), "gcd does not divide second input");
            }
        }
        // Groebner: normal-form idempotence and membership soundness,
        // 100 combinations across 5 random ideals.
        {
            Rng rng(1005);
            for (int ideal = 0; ideal < 5; ++ideal) {
                std::vector<Polynomial> gens = {rng.polynomial(3, 2, 3), rng.polynomial(3, 2, 3)};
                if (gens[0].is_zero() || gens[1].is_zero()) continue;
                GroebnerBasis basis = buchberger(gens);
                for (int i = 0; i < 20; ++i) {
                    Polynomial a = rng.polynomial(3, 2, 3);
                    Polynomial b = rng.polynomial(3, 2, 3);
                    Polynomial member = a * gens[0] + b * gens[1];
                    EXPECT(normal_form(member, basis).is_zero(),
                           "combination of generators has nonzero normal form");
                    Polynomial r = normal_form(rng.polynomial(3, 3, 4), basis);
                    EXPECT(normal_form(r, basis) == r, "normal form is not idempotent");
                }
            }
        }
        // Chain rule on 50 random tame words.
        {
            Rng rng(1006);
            for (int i = 0; i < 50; ++i) {
                Automorphism f = Automorphism::from_generators(
                    {random_elementary3(rng), random_elementary3(rng)}, 3);
                Automorphism g = Automorphism::from_generators({random_elementary3(rng)}, 3);
                Automorphism fg = Automorphism::from_pair(
                    compose(f.forward(), g.forward()), compose(g.inverse(), f.inverse()));
                RationalPoint a = rng.point(3, 20, 5);
                RationalPoint ga = g.forward().evaluate(a);
                EXPECT(differential_at(fg, a) ==
                           matmul(differential_at(f, ga), differential_at(g, a)),
                       "chain rule violated on a tame word");
            }
        }
        // Schwartz-Zippel screens at 1000 points for the asserted identities.
        {
            Rng rng(1007);
            std::vector<RationalPoint> pts = rng.points(1000, 3, 200, 12);
            LoadedEntry n1 = corpus_entry("nagata_v1");
            LoadedEntry n2 = corpus_entry("nagata_v2");
            Polynomial h1 = *fixed_hypersurface_part(n1.aut).h;
            Polynomial h2 = *fixed_hypersurface_part(n2.aut).h;
            EXPECT(agree_on_points(compose_substitute(h1, n1.aut.forward().components), h1, pts),
                   "h o f != h at a sample point (first presentation)");
            EXPECT(agree_on_points(compose_substitute(h2, n2.aut.forward().components), h2, pts),
                   "h o f != h at a sample point (second presentation)");
            PolynomialMap round = compose(n1.aut.forward(), n1.aut.inverse());
            for (std::uint32_t c = 0; c < 3; ++c)
                EXPECT(agree_on_points(round.components[c], Polynomial::variable(3, c), pts),
                       "f o f^-1 != id at a sample point");
            LoadedEntry sz = corpus_entry("scale_z");
            Polynomial hz = *fixed_hypersurface_part(sz.aut).h;
            EXPECT(agree_on_points(compose_substitute(hz, sz.aut.forward().components),
                                   hz * Rational(2), pts),
                   "h o f != 2h for the doubling map at a sample point");
        }
    });

    criterion(9, "round-trip and golden stability across two runs with one seed", [] {
        for (const CorpusEntry& entry : corpus()) {
            MapDocument doc = parse_document(entry.dsl);
            std::string once = print_document(doc);
            std::string twice = print_document(parse_document(once));
            EXPECT(once == twice, entry.name + ": printed form is not byte-stable");
            EXPECT(parse_document(once) == doc, entry.name + ": reparse changed the document");
        }
        for (const char* name : {"nagata_v1", "scale_z", "example2_g"}) {
            AnalysisOptions opts;  // seed 12345
            LoadedEntry first = corpus_entry(name);
            FixReport r1 = full_report(first.aut, first.name, first.var_names, first.witnesses, opts);
            LoadedEntry second = corpus_entry(name);
            FixReport r2 =
                full_report(second.aut, second.name, second.var_names, second.witnesses, opts);
            EXPECT(report_to_json(r1) == report_to_json(r2),
                   std::string(name) + ": JSON differs between two runs");
            EXPECT(report_to_text(r1) == report_to_text(r2),
                   std::string(name) + ": text report differs between two runs");
        }
    });

    const auto total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - suite0)
                              .count();
    std::cout << (g_failures == 0 ? "acceptance: all criteria hold" : "acceptance: FAILURES")
              << " (" << total_ms << " ms total)\n";
    return g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
