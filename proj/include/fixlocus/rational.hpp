// rational.hpp
// Exact rational scalars backed by GMP. Everything downstream assumes
// canonical form (coprime numerator/denominator, denominator positive),
// which mpq_class maintains for arithmetic results; construction from a
// num/den pair goes through make_rational so it is canonicalized too.
#pragma once

#include <gmpxx.h>

#include <string>

#include "fixlocus/errors.hpp"

namespace fixlocus {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Canonical text form: "p" or "p/q" with q > 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace fixlocus
