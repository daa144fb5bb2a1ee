// groebner.hpp
// Buchberger with the normal selection strategy and both pair-elimination
// criteria. This is the certificate engine behind the theorem checkers:
// ideal membership via normal forms, emptiness of varieties via 1 in the
// ideal, radical membership via the extra-variable trick, and variety
// equality as mutual radical membership.
#pragma once

#include <vector>

#include "fixlocus/polynomial.hpp"
#include "fixlocus/term_order.hpp"

namespace fixlocus {

class GroebnerBasis {
  public:
    GroebnerBasis(std::vector<Polynomial> generators, TermOrder order)
        : generators_(std::move(generators)), order_(std::move(order)) {}

    const std::vector<Polynomial>& generators() const { return generators_; }
    const TermOrder& order() const { return order_; }
    bool empty() const { return generators_.empty(); }

  private:
    std::vector<Polynomial> generators_;
    TermOrder order_;
};

// Reduced Groebner basis of the ideal generated by `gens` (zero generators
// are discarded; an empty list yields the empty basis of the zero ideal).
// Deterministic for fixed input and order.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order = grevlex());

// Remainder of full multivariate division by the basis. A projection:
// reducing the result again returns it unchanged.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

bool ideal_member(const Polynomial& p, const GroebnerBasis& basis);

// True iff the basis contains a nonzero constant, i.e. the variety over
// the algebraic closure is empty.
bool is_trivial(const GroebnerBasis& basis);

// True iff p vanishes on V(gens) over the algebraic closure: adjoins a
// fresh variable t and tests 1 in (gens, 1 - t*p).
bool radical_member(const Polynomial& p, const std::vector<Polynomial>& gens,
                    const TermOrder& order = grevlex());

// Variety equality over the algebraic closure: mutual radical membership.
bool varieties_equal(const std::vector<Polynomial>& gens_a,
                     const std::vector<Polynomial>& gens_b,
                     const TermOrder& order = grevlex());

// Diagnostic: re-checks the reduced-basis invariants (S-polynomials reduce
// to zero, no leading monomial divides another, inputs have zero normal
// form). Used by tests.
bool verify_basis(const std::vector<Polynomial>& inputs, const GroebnerBasis& basis);

}  // namespace fixlocus
