// Theorem verdicts over certified automorphisms.

#include "fixlocus/theorems.hpp"

#include <sstream>

#include "fixlocus/errors.hpp"
#include "fixlocus/groebner.hpp"
#include "fixlocus/rng.hpp"

namespace fixlocus {

namespace {

const char* kVerdictNonSpecial = "nonspecial_fixed_hypersurface";
const char* kVerdictFiniteOrder = "finite_order_implies_nonspecial";
const char* kVerdictSingular = "singular_implies_special";
const char* kVerdictWitness = "uniruled_witness";

bool is_squarefree_normalized(const Polynomial& h) {
    const TermOrder ord = grevlex();
    return squarefree_part(h) == h.normalized(ord);
}

}  // namespace

bool check_smooth(const Polynomial& h, SmoothnessMode mode) {
    if (h.is_zero()) throw DomainError("check_smooth: h must be nonzero");
    if (!h.is_constant() && !is_squarefree_normalized(h))
        throw ContractError("check_smooth: h must be squarefree");
    const std::uint32_t n = h.nvars();
    std::vector<Polynomial> gens;
    if (mode == SmoothnessMode::Smooth) gens.push_back(h);
    for (std::uint32_t v = 0; v < n; ++v) gens.push_back(h.derivative(v));
    GroebnerBasis basis = buchberger(gens, grevlex());
    return is_trivial(basis);
}

std::optional<bool> check_fix_equals_hypersurface(const Automorphism& f) {
    FixedLocus fl = fixed_hypersurface_part(f);
    if (fl.kind != FixedLocusKind::Hypersurface) return std::nullopt;
    return varieties_equal(fl.generators, {*fl.h});
}

WitnessVerification verify_ruled_witness(const RuledWitness& w, std::uint64_t seed) {
    WitnessVerification out;
    out.seed = seed;
    const std::uint32_t n = w.ambient_vars();
    if (w.psi.size() != n)
        throw ShapeError("witness component count differs from the ambient variable count");
    if (w.psi.empty()) throw ShapeError("witness has no components");
    const std::uint32_t k = w.parameter_vars();
    if (k == 0) throw ShapeError("witness needs at least the curve parameter");
    for (const Polynomial& c : w.psi)
        if (c.nvars() != k) throw ArityError("witness components disagree on parameter count");

    // (a) image lies in the hypersurface.
    out.image_in_hypersurface = compose_substitute(w.target_h, w.psi).is_zero();

    // (b) the family actually moves with t (parameter 0).
    for (const Polynomial& c : w.psi) {
        for (const auto& [mono, coeff] : c.terms()) {
            (void)coeff;
            if (mono.exponents[0] != 0) {
                out.nonconstant_in_t = true;
                break;
            }
        }
        if (out.nonconstant_in_t) break;
    }

    // (c) Jacobian rank n-1 at a seeded random parameter point; the image
    // is (n-1)-dimensional, hence dominates the hypersurface.
    out.rank_check_probabilistic = true;
    for (std::uint64_t attempt = 0; attempt < 5 && !out.jacobian_rank_ok; ++attempt) {
        Rng rng(seed + attempt);
        RationalPoint a = rng.point(k, 50, 8);
        RationalMatrix J(k, n);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < n; ++j) J.at(i, j) = w.psi[j].derivative(i).evaluate(a);
        if (J.rank() == n - 1) out.jacobian_rank_ok = true;
    }

    out.ok = out.image_in_hypersurface && out.nonconstant_in_t && out.jacobian_rank_ok;
    return out;
}

// --- Verdicts ----------------------------------------------------------------

TheoremVerdict verdict_nonspecial(const Automorphism& f, const AnalysisOptions& opts) {
    TheoremVerdict v;
    v.id = kVerdictNonSpecial;
    SpecialnessVerdict sv = jacobian_and_classify(f, opts.probe_bound);
    FixedLocus fl = fixed_hypersurface_part(f);
    if (sv.special) {
        v.status = VerdictStatus::NotApplicable;
        v.reason = "the Jacobian constant is 1";
        return v;
    }
    if (fl.kind != FixedLocusKind::Hypersurface) {
        v.status = VerdictStatus::NotApplicable;
        v.reason = "the fixed locus has no hypersurface part";
        return v;
    }
    const Polynomial& h = *fl.h;
    std::vector<std::string> failures;

    if (!check_smooth(h, SmoothnessMode::Smooth))
        failures.push_back("(i) the fixed hypersurface has a singular point");

    IrreducibilityResult irr = irreducible_multivariate(h, opts.irreducible_degree_cap);
    if (irr.verdict == IrreducibilityVerdict::Reducible)
        failures.push_back("(ii) the fixed hypersurface splits into factors");

    std::optional<bool> fixeq = check_fix_equals_hypersurface(f);
    if (!fixeq || !*fixeq)
        failures.push_back("(iii) Fix(f) differs from the hypersurface as a variety");

    try {
        Rational c = eigen_factor(f, h);
        if (c != sv.lambda)
            failures.push_back("(iv) the eigen factor differs from the Jacobian constant");
    } catch (const CounterexampleError&) {
        failures.push_back("(iv) the eigen factor differs from the Jacobian constant");
    }

    bool clause_v_checked = false;
    if (!sv.lambda_order) {
        clause_v_checked = true;
        if (!check_smooth(h, SmoothnessMode::SuperSmooth))
            failures.push_back("(v) the gradient vanishes somewhere on affine space");
    }

    if (failures.empty()) {
        v.status = VerdictStatus::Pass;
        std::ostringstream os;
        os << "smoothness certificate, irreducibility (" ;
        os << (irr.verdict == IrreducibilityVerdict::Irreducible
                   ? (irr.absolute_certified ? "absolute" : "over Q")
                   : "unknown, not reducible");
        os << "), radical equality Fix = V(h), eigen factor = lambda";
        if (clause_v_checked) os << ", super-smoothness (lambda of infinite order)";
        v.reason = os.str();
    } else {
        v.status = VerdictStatus::Fail;
        std::string r = "counterexample-class failure:";
        for (const std::string& fmsg : failures) r += " " + fmsg + ";";
        v.reason = r;
    }
    return v;
}

TheoremVerdict verdict_finite_order(const Automorphism& f, const AnalysisOptions& opts) {
    TheoremVerdict v;
    v.id = kVerdictFiniteOrder;
    OrderResult order = detect_order(f, opts.iter_bound, opts.order_degree_cap);
    FixedLocus fl = fixed_hypersurface_part(f);
    if (!order.finite) {
        v.status = VerdictStatus::NotApplicable;
        v.reason = "no finite order within the iteration bound (presumed infinite)";
        return v;
    }
    if (order.m <= 1) {
        v.status = VerdictStatus::NotApplicable;
        v.reason = "the identity has order 1";
        return v;
    }
    if (fl.kind != FixedLocusKind::Hypersurface) {
        v.status = VerdictStatus::NotApplicable;
        v.reason = "the fixed locus has no hypersurface part";
        return v;
    }
    SpecialnessVerdict sv = jacobian_and_classify(f, opts.probe_bound);
    if (!sv.special) {
        v.status = VerdictStatus::Pass;
        std::ostringstream os;
        os << "order " << order.m << " with a fixed hypersurface forces lambda != 1 (lambda = "
           << sv.lambda.get_str() << ")";
        v.reason = os.str();
    } else {
        v.status = VerdictStatus::Fail;
        v.reason = "counterexample-class failure: finite order with a fixed hypersurface, "
                   "yet the Jacobian constant is 1";
    }
    return v;
}

TheoremVerdict verdict_singular_special(const Automorphism& f, const AnalysisOptions& opts) {
    TheoremVerdict v;
    v.id = kVerdictSingular;
    FixedLocus fl = fixed_hypersurface_part(f);
    if (fl.kind != FixedLocusKind::Hypersurface) {
        v.status = VerdictStatus::NotApplicable;
        v.reason = "the fixed locus has no hypersurface part";
        return v;
    }
    if (check_smooth(*fl.h, SmoothnessMode::Smooth)) {
        v.status = VerdictStatus::NotApplicable;
        v.reason = "the fixed hypersurface is smooth";
        return v;
    }
    SpecialnessVerdict sv = jacobian_and_classify(f, opts.probe_bound);
    if (sv.special) {
        v.status = VerdictStatus::Pass;
        v.reason = "singular fixed hypersurface and the Jacobian constant is 1";
    } else {
        v.status = VerdictStatus::Fail;
        v.reason = "counterexample-class failure: singular fixed hypersurface with lambda != 1";
    }
    return v;
}

// --- Full report ------------------------------------------------------------

bool FixReport::has_counterexample() const {
    for (const TheoremVerdict& v : theorem_verdicts)
        if (v.status == VerdictStatus::Fail) return true;
    return false;
}

FixReport full_report(const Automorphism& f, const std::string& name,
                      const std::vector<std::string>& var_names,
                      const std::vector<RuledWitness>& witnesses, const AnalysisOptions& opts) {
    FixReport r;
    r.name = name;
    r.n = f.nvars();
    r.var_names = var_names;
    r.seed = opts.seed;

    r.specialness = jacobian_and_classify(f, opts.probe_bound);
    r.order = detect_order(f, opts.iter_bound, opts.order_degree_cap);
    r.hpart = fixed_hypersurface_part(f);

    if (r.hpart.kind == FixedLocusKind::Hypersurface) {
        const Polynomial& h = *r.hpart.h;
        r.smooth = check_smooth(h, SmoothnessMode::Smooth);
        r.supersmooth = check_smooth(h, SmoothnessMode::SuperSmooth);
        r.irreducible = irreducible_multivariate(h, opts.irreducible_degree_cap);
        r.fix_equals_h = check_fix_equals_hypersurface(f);
        try {
            r.eigen_constant = eigen_factor(f, h);
        } catch (const CounterexampleError& e) {
            TheoremVerdict v;
            v.id = "eigen_factor_consistency";
            v.status = VerdictStatus::Fail;
            v.reason = e.what();
            r.theorem_verdicts.push_back(std::move(v));
        }
    }

    r.theorem_verdicts.push_back(verdict_singular_special(f, opts));
    r.theorem_verdicts.push_back(verdict_nonspecial(f, opts));
    r.theorem_verdicts.push_back(verdict_finite_order(f, opts));

    TheoremVerdict wv;
    wv.id = kVerdictWitness;
    if (witnesses.empty()) {
        wv.status = VerdictStatus::NotApplicable;
        wv.reason = "no stored witness";
    } else {
        bool all_ok = true;
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            WitnessVerification res = verify_ruled_witness(witnesses[i], opts.seed + i);
            all_ok = all_ok && res.ok;
            r.witness_results.push_back(res);
        }
        wv.status = all_ok ? VerdictStatus::Pass : VerdictStatus::Fail;
        wv.reason = all_ok
                        ? "every stored parametrization lands in the hypersurface, moves with t, "
                          "and reaches rank n-1 (rank check probabilistic)"
                        : "counterexample-class failure: a stored witness did not verify";
    }
    r.theorem_verdicts.push_back(std::move(wv));

    return r;
}

}  // namespace fixlocus
