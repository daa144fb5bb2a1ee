// polynomial.hpp
// Sparse multivariate polynomials over exact rationals. The term map is
// the canonical form: no zero coefficients are ever stored, the zero
// polynomial is the empty map, and equality is equality of term maps.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fixlocus/errors.hpp"
#include "fixlocus/monomial.hpp"
#include "fixlocus/rational.hpp"
#include "fixlocus/term_order.hpp"

namespace fixlocus {

struct RationalPoint {
    std::vector<Rational> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}

    std::size_t nvars() const { return coords.size(); }
};

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::uint32_t nvars) : nvars_(nvars) {}

    static Polynomial zero(std::uint32_t nvars) { return Polynomial(nvars); }
    static Polynomial constant(std::uint32_t nvars, const Rational& c);
    static Polynomial variable(std::uint32_t nvars, std::uint32_t index);
    static Polynomial term(std::uint32_t nvars, Monomial m, const Rational& c);

    std::uint32_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // Value of a constant polynomial; zero polynomial gives 0.
    Rational constant_value() const;

    std::int64_t total_degree() const;  // -1 for the zero polynomial
    std::int64_t degree_in(std::uint32_t var) const;
    bool uses_variable(std::uint32_t var) const { return degree_in(var) > 0; }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    Polynomial pow(std::uint32_t e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    // Structural order, used only for deterministic containers.
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
        return a.terms_ < b.terms_;
    }

    Polynomial derivative(std::uint32_t var) const;

    Rational evaluate(const RationalPoint& p) const;

    const Monomial& leading_monomial(const TermOrder& order = grevlex()) const;
    const Rational& leading_coefficient(const TermOrder& order = grevlex()) const;

    // Integer content as a positive rational: p / content(p) has coprime
    // integer coefficients. Zero polynomial has content 0.
    Rational content() const;
    // Primitive with positive leading coefficient under `order`.
    Polynomial normalized(const TermOrder& order = grevlex()) const;

    // Remaps this polynomial into a ring with `new_nvars` variables,
    // sending variable i to variable var_map[i].
    Polynomial remap_variables(std::uint32_t new_nvars,
                               std::span<const std::uint32_t> var_map) const;

  private:
    std::uint32_t nvars_;
    TermMap terms_;
};

// h∘f substitution: replaces variable i of p by images[i]; all images share
// one ambient variable count, which is the result's.
Polynomial compose_substitute(const Polynomial& p, std::span<const Polynomial> images);
Polynomial compose_substitute(const Polynomial& p, const std::vector<Polynomial>& images);

// Exact quotient p/d, or nullopt when d does not divide p.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

// GCD via primitive remainder sequences, recursing on variables. Result is
// primitive with positive leading coefficient; gcd(p, 0) = normalized p.
Polynomial gcd_multivariate(const Polynomial& p, const Polynomial& q);

// Product of the distinct irreducible factors of p (char-0 construction
// p / gcd(p, dp/dx1, ..., dp/dxn)), normalized. p must be nonzero.
Polynomial squarefree_part(const Polynomial& p);

// Canonical text rendering: terms in decreasing `order`, explicit '^' and
// '*', rational literals as num/den. Round-trips through the DSL parser.
std::string to_string(const Polynomial& p, std::span<const std::string> names,
                      const TermOrder& order = grevlex());

}  // namespace fixlocus
