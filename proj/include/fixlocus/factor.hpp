// factor.hpp
// Exact factorization over the rationals. Univariate: squarefree split,
// factorization modulo a good prime, Hensel lifting to a coefficient
// bound, subset recombination with exact trial division. Multivariate:
// a degree-capped irreducibility test through Kronecker substitution.
// Irreducibility answers are over Q; absolute irreducibility is certified
// separately (degree one, or quadrics of rank at least three) and the
// result says which notion was established.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fixlocus/polynomial.hpp"

namespace fixlocus {

struct FactorList {
    Rational unit;
    std::vector<std::pair<Polynomial, std::uint32_t>> factors;  // (factor, multiplicity)

    // unit * prod factors^multiplicities, for the refactor-consistency checks.
    Polynomial expand(std::uint32_t nvars) const;
};

// Complete factorization into irreducibles over Q. Input must be nonzero
// and use exactly one variable (a constant is rejected).
FactorList factor_univariate(const Polynomial& p);

enum class IrreducibilityVerdict { Irreducible, Reducible, Unknown };

struct IrreducibilityResult {
    IrreducibilityVerdict verdict = IrreducibilityVerdict::Unknown;
    std::optional<FactorList> factors;  // present when Reducible
    // True when irreducibility holds over the algebraic closure as well
    // (linear polynomials; quadratic forms of rank >= 3).
    bool absolute_certified = false;
    std::string note;
};

// Kronecker-substitution irreducibility test over Q. Input must be
// squarefree; returns Unknown beyond degree_cap or four variables.
IrreducibilityResult irreducible_multivariate(const Polynomial& p, std::uint32_t degree_cap = 8);

// Rank of the symmetric matrix of the homogenized quadratic form of p
// (total degree <= 2 required). Rank >= 3 certifies absolute
// irreducibility of an irreducible quadric.
std::size_t quadratic_form_rank(const Polynomial& p);

}  // namespace fixlocus
