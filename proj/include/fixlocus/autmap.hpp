// autmap.hpp
// Polynomial maps and certified automorphisms of affine n-space.
//
// An Automorphism always carries an explicit inverse, verified symbolically
// at construction (f o f^-1 = f^-1 o f = id), plus the cached constant
// Jacobian determinant. A nonzero constant Jacobian is treated as a
// necessary condition only; certification always comes from the inverse.
#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "fixlocus/linalg.hpp"
#include "fixlocus/poly_matrix.hpp"
#include "fixlocus/polynomial.hpp"

namespace fixlocus {

struct PolynomialMap {
    std::vector<Polynomial> components;

    PolynomialMap() = default;
    explicit PolynomialMap(std::vector<Polynomial> comps);

    static PolynomialMap identity(std::uint32_t n);

    std::uint32_t nvars() const { return static_cast<std::uint32_t>(components.size()); }
    bool is_identity() const;
    std::uint32_t max_total_degree() const;

    RationalPoint evaluate(const RationalPoint& a) const;
    PolyMatrix jacobian_matrix() const;  // entry (i,j) = d components[i] / d x_j

    bool operator==(const PolynomialMap& other) const { return components == other.components; }
};

// outer(inner(x)), both n -> n in the same ambient count.
PolynomialMap compose(const PolynomialMap& outer, const PolynomialMap& inner);

// --- Tame generators ------------------------------------------------------

struct AffineGenerator {
    RationalMatrix matrix;            // must be invertible
    std::vector<Rational> translation;
};

struct ElementaryGenerator {
    std::uint32_t index;  // target coordinate, 0-based
    Polynomial addend;    // must not involve variable `index`
};

struct TameGenerator {
    std::variant<AffineGenerator, ElementaryGenerator> value;

    TameGenerator(AffineGenerator a) : value(std::move(a)) {}
    TameGenerator(ElementaryGenerator e) : value(std::move(e)) {}

    std::uint32_t nvars() const;
    PolynomialMap forward_map() const;
    PolynomialMap inverse_map() const;
};

enum class Provenance { TameWord, ExplicitPair };

// --- Automorphism ---------------------------------------------------------

class Automorphism {
  public:
    // Explicit pair: verifies both compositions equal the identity and the
    // Jacobian determinant is a nonzero constant.
    static Automorphism from_pair(PolynomialMap forward, PolynomialMap inverse);
    // Word of tame generators applied left to right; the inverse is the
    // reversed word of inverted generators. Empty word = identity.
    static Automorphism from_generators(const std::vector<TameGenerator>& word, std::uint32_t nvars);
    static Automorphism identity(std::uint32_t n);

    const PolynomialMap& forward() const { return forward_; }
    const PolynomialMap& inverse() const { return inverse_; }
    Provenance provenance() const { return provenance_; }
    std::uint32_t nvars() const { return forward_.nvars(); }
    const Rational& jacobian_determinant() const { return jacobian_det_; }

  private:
    Automorphism(PolynomialMap f, PolynomialMap g, Provenance prov, Rational det)
        : forward_(std::move(f)), inverse_(std::move(g)), provenance_(prov),
          jacobian_det_(std::move(det)) {}

    // Shared certification path: verifies mutual inverses and a constant
    // nonzero Jacobian determinant.
    static Automorphism certify(PolynomialMap f, PolynomialMap g, Provenance prov);

    PolynomialMap forward_;
    PolynomialMap inverse_;
    Provenance provenance_;
    Rational jacobian_det_;
};

// --- Specialness ----------------------------------------------------------

struct SpecialnessVerdict {
    bool special = false;      // Jacobian determinant equals 1
    Rational lambda;           // the constant Jacobian determinant
    // Smallest k <= probe bound with lambda^k = 1, when one exists.
    std::optional<std::uint32_t> lambda_order;
};

// Raw probe: computes det of the Jacobian matrix, which must be a nonzero
// constant (IntegrityError "not an automorphism" otherwise).
SpecialnessVerdict classify_jacobian(const PolynomialMap& f, std::uint32_t probe_bound = 64);
SpecialnessVerdict jacobian_and_classify(const Automorphism& f, std::uint32_t probe_bound = 64);

// --- Fixed locus ----------------------------------------------------------

enum class FixedLocusKind { WholeSpace, Unit, Hypersurface };

struct FixedLocus {
    FixedLocusKind kind = FixedLocusKind::WholeSpace;
    std::optional<Polynomial> h;        // normalized squarefree, when Hypersurface
    std::vector<Polynomial> generators; // the nonzero f_i - x_i
};

// Squarefree gcd of the nonzero components of f - id: the reduced equation
// of the codimension-1 part of the fixed locus. WholeSpace for the
// identity; Unit when the gcd is constant (no hypersurface component).
FixedLocus fixed_hypersurface_part(const Automorphism& f);

// --- Eigen factor (h o f = c * h) ------------------------------------------

// Computes h o f and returns the constant c with h o f = c * h.
// ContractError "not an invariant hypersurface" when no such constant
// exists. Consistency with the Jacobian constant lambda is asserted:
// lambda = 1 forces c = 1, and for irreducible h (certified within the
// default degree budget) lambda != 1 forces c = lambda; a violation throws
// CounterexampleError, since it would contradict a proven statement.
Rational eigen_factor(const Automorphism& f, const Polynomial& h);

// --- Order detection --------------------------------------------------------

struct OrderResult {
    bool finite = false;
    std::uint32_t m = 0;  // the order, when finite

    bool operator==(const OrderResult&) const = default;
};

// First m <= iter_bound with f^m = id, verified by symbolic composition;
// ExceedsBound (finite = false) when no such m exists within the bound or
// when an iterate's total degree would exceed degree_cap. Hopeless
// exponents are pruned by orbit tests modulo a large prime before any
// symbolic composition.
OrderResult detect_order(const Automorphism& f, std::uint32_t iter_bound = 16,
                         std::uint32_t degree_cap = 512);

// --- Pointwise differential ------------------------------------------------

// The matrix of partial derivatives of f evaluated at a.
RationalMatrix differential_at(const Automorphism& f, const RationalPoint& a);

// At a smooth point a of {h = 0}: checks (d_a f)^T grad h(a) = lambda *
// grad h(a) and det(d_a f) = lambda, exactly. DomainError when a is not on
// the hypersurface or is a singular point of it (use the smoothness
// checker for those).
bool eigen_check(const Automorphism& f, const RationalPoint& a, const Polynomial& h);

}  // namespace fixlocus
