// rng.hpp
// Seeded generation of random rationals, points and polynomials. Every
// randomized check in the toolkit takes an explicit seed; with the same
// seed the draws are identical across runs and platforms (mt19937_64 with
// fixed integer ranges, no floating point anywhere).
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fixlocus/polynomial.hpp"

namespace fixlocus {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }

    // Nonzero numerator keeps sampled coordinates away from trivial zeros.
    Rational rational(std::int64_t max_num = 1000, std::int64_t max_den = 20) {
        std::int64_t num = uniform(-max_num, max_num);
        std::int64_t den = uniform(1, max_den);
        return make_rational(num, den);
    }

    RationalPoint point(std::uint32_t nvars, std::int64_t max_num = 1000,
                        std::int64_t max_den = 20) {
        std::vector<Rational> coords;
        coords.reserve(nvars);
        for (std::uint32_t i = 0; i < nvars; ++i) coords.push_back(rational(max_num, max_den));
        return RationalPoint(std::move(coords));
    }

    std::vector<RationalPoint> points(std::size_t count, std::uint32_t nvars,
                                      std::int64_t max_num = 1000, std::int64_t max_den = 20) {
        std::vector<RationalPoint> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(point(nvars, max_num, max_den));
        return out;
    }

    Polynomial polynomial(std::uint32_t nvars, std::uint32_t max_degree, std::size_t max_terms,
                          std::int64_t max_coeff = 10) {
        Polynomial p(nvars);
        const std::size_t terms = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_terms)));
        for (std::size_t t = 0; t < terms; ++t) {
            Monomial m(nvars);
            std::uint32_t budget = max_degree;
            for (std::uint32_t i = 0; i < nvars; ++i) {
                const std::uint32_t e = static_cast<std::uint32_t>(uniform(0, budget));
                m.exponents[i] = e;
                budget -= e;
            }
            std::int64_t c = uniform(-max_coeff, max_coeff);
            if (c == 0) c = 1;
            p.add_term(m, Rational(c));
        }
        return p;
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace fixlocus
