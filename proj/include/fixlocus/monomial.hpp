// monomial.hpp
// Exponent vectors. A monomial always knows the ambient variable count;
// the structural (order-independent) comparison used for canonical term
// maps is plain lexicographic comparison of the exponent vectors.
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "fixlocus/errors.hpp"

namespace fixlocus {

struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    std::size_t nvars() const { return exponents.size(); }

    std::uint32_t degree(std::size_t var) const { return exponents.at(var); }

    std::uint64_t total_degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
    }

    bool is_constant() const {
        for (auto e : exponents)
            if (e != 0) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        if (nvars() != other.nvars()) throw ArityError("monomial variable counts differ");
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > other.exponents[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        if (nvars() != other.nvars()) throw ArityError("monomial variable counts differ");
        Monomial r(*this);
        for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += other.exponents[i];
        return r;
    }

    // Quotient; caller must ensure other.divides(*this).
    Monomial operator/(const Monomial& other) const {
        if (nvars() != other.nvars()) throw ArityError("monomial variable counts differ");
        Monomial r(*this);
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (other.exponents[i] > r.exponents[i])
                throw DomainError("monomial quotient is not a monomial");
            r.exponents[i] -= other.exponents[i];
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars()) throw ArityError("monomial variable counts differ");
        Monomial r(a);
        for (std::size_t i = 0; i < r.exponents.size(); ++i)
            if (b.exponents[i] > r.exponents[i]) r.exponents[i] = b.exponents[i];
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars()) throw ArityError("monomial variable counts differ");
        Monomial r(a);
        for (std::size_t i = 0; i < r.exponents.size(); ++i)
            if (b.exponents[i] < r.exponents[i]) r.exponents[i] = b.exponents[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Structural order for canonical term maps, not a monomial order.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exponents < b.exponents;
    }
};

}  // namespace fixlocus
