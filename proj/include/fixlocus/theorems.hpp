// theorems.hpp
// Executable verdicts for the structural statements about fixed
// hypersurfaces of certified automorphisms: smoothness and
// super-smoothness certificates, Fix(f) = V(h) as a radical equality,
// the non-special profile (smooth + irreducible + Fix = V(h) + eigen
// constant), finite order forcing a non-unit Jacobian, and verification
// of uniruledness witnesses. A failed verdict on a certified automorphism
// is counterexample-class: it signals a kernel bug, not bad input.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fixlocus/autmap.hpp"
#include "fixlocus/factor.hpp"
#include "fixlocus/polynomial.hpp"

namespace fixlocus {

// --- Smoothness --------------------------------------------------------------

enum class SmoothnessMode { Smooth, SuperSmooth };

// Smooth: the ideal (h, dh/dx_1, ..., dh/dx_n) is trivial — no singular
// point on {h = 0} over the algebraic closure. SuperSmooth: the gradient
// ideal alone is trivial — the gradient vanishes nowhere on affine space.
// h must be nonzero and squarefree (ContractError otherwise).
bool check_smooth(const Polynomial& h, SmoothnessMode mode);

// --- Fix(f) = V(h) -------------------------------------------------------------

// varieties_equal({nonzero f_i - x_i}, {h}); nullopt when the fixed locus
// has no hypersurface part (not an error, an inapplicability signal).
std::optional<bool> check_fix_equals_hypersurface(const Automorphism& f);

// --- Uniruledness witnesses -----------------------------------------------------

// A claimed polynomial family t -> psi(t, s) covering the hypersurface
// {target_h = 0}. Parameter 0 is the curve parameter t; any number of
// extra parameters s_i is accepted (the family's Jacobian must reach rank
// n-1, the hypersurface dimension).
struct RuledWitness {
    Polynomial target_h;          // in the ambient n variables
    std::vector<Polynomial> psi;  // n components in the parameter variables

    std::uint32_t ambient_vars() const { return target_h.nvars(); }
    std::uint32_t parameter_vars() const {
        return psi.empty() ? 0 : psi.front().nvars();
    }
};

struct WitnessVerification {
    bool ok = false;
    bool image_in_hypersurface = false;  // (a) target_h o psi = 0 symbolically
    bool nonconstant_in_t = false;       // (b) the family moves with t
    bool jacobian_rank_ok = false;       // (c) rank n-1 at a random parameter point
    bool rank_check_probabilistic = true;
    std::uint64_t seed = 0;
};

// (a) and (b) are exact; (c) samples up to five seeded rational parameter
// points and accepts on the first with Jacobian rank exactly n-1.
WitnessVerification verify_ruled_witness(const RuledWitness& w, std::uint64_t seed = 12345);

// --- Theorem verdicts ------------------------------------------------------------

enum class VerdictStatus { Pass, Fail, NotApplicable };

struct TheoremVerdict {
    std::string id;
    VerdictStatus status = VerdictStatus::NotApplicable;
    std::string reason;
};

struct AnalysisOptions {
    std::uint64_t seed = 12345;
    std::uint32_t iter_bound = 16;           // order detection
    std::uint32_t order_degree_cap = 512;    // order detection degree budget
    std::uint32_t irreducible_degree_cap = 8;
    std::uint32_t probe_bound = 64;          // root-of-unity probe for lambda
};

// Non-special profile: for a non-special automorphism whose fixed locus
// has a hypersurface part h, certifies (i) {h=0} smooth, (ii) h not
// reducible, (iii) Fix(f) = V(h), (iv) eigen factor = lambda, (v) when
// lambda is not a root of unity, {h=0} super-smooth.
TheoremVerdict verdict_nonspecial(const Automorphism& f, const AnalysisOptions& opts = {});

// Finite order m > 1 with a fixed hypersurface forces lambda != 1.
TheoremVerdict verdict_finite_order(const Automorphism& f, const AnalysisOptions& opts = {});

// A singular fixed hypersurface forces lambda = 1.
TheoremVerdict verdict_singular_special(const Automorphism& f, const AnalysisOptions& opts = {});

// --- Full report -------------------------------------------------------------------

struct FixReport {
    std::string name;
    std::uint32_t n = 0;
    std::vector<std::string> var_names;

    SpecialnessVerdict specialness;
    OrderResult order;
    FixedLocus hpart;

    std::optional<bool> smooth;       // n/a unless hpart is Hypersurface
    std::optional<bool> supersmooth;
    std::optional<IrreducibilityResult> irreducible;
    std::optional<bool> fix_equals_h;
    std::optional<Rational> eigen_constant;

    std::vector<WitnessVerification> witness_results;
    std::vector<TheoremVerdict> theorem_verdicts;

    std::uint64_t seed = 0;

    // True when some verdict Failed — the counterexample-class signal.
    bool has_counterexample() const;
};

// Runs every applicable classifier and verdict; deterministic for fixed
// input, options and seed.
FixReport full_report(const Automorphism& f, const std::string& name,
                      const std::vector<std::string>& var_names,
                      const std::vector<RuledWitness>& witnesses = {},
                      const AnalysisOptions& opts = {});

}  // namespace fixlocus
