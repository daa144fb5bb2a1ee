#include "fixlocus/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace fixlocus {

Polynomial Polynomial::constant(std::uint32_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::uint32_t nvars, std::uint32_t index) {
    if (index >= nvars) throw ArityError("variable index out of range");
    Monomial m{nvars};
    m.exponents[index] = 1;
    Polynomial p(nvars);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::term(std::uint32_t nvars, Monomial m, const Rational& c) {
    if (m.nvars() != nvars) throw ArityError("monomial arity mismatch");
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.begin()->second;
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(m.total_degree()));
    return d;
}

std::int64_t Polynomial::degree_in(std::uint32_t var) const {
    if (var >= nvars_) throw ArityError("variable index out of range");
    std::int64_t d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, m.exponents[var]);
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw ArityError("monomial arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (nvars_ != other.nvars_) throw ArityError("polynomial variable counts differ");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (nvars_ != other.nvars_) throw ArityError("polynomial variable counts differ");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r(*this);
    r += other;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial r(*this);
    r -= other;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (nvars_ != other.nvars_) throw ArityError("polynomial variable counts differ");
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial r(nvars_);
    if (scalar == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * scalar);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial result = Polynomial::constant(nvars_, Rational(1));
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::uint32_t var) const {
    if (var >= nvars_) throw ArityError("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m.exponents[var];
        if (e == 0) continue;
        Monomial dm(m);
        dm.exponents[var] = e - 1;
        r.add_term(dm, c * Rational(e));
    }
    return r;
}

Rational Polynomial::evaluate(const RationalPoint& p) const {
    if (p.nvars() != nvars_) throw ArityError("point arity mismatch");
    // Power cache per variable, grown on demand.
    std::vector<std::vector<Rational>> powers(nvars_);
    for (std::uint32_t i = 0; i < nvars_; ++i) powers[i].push_back(Rational(1));
    auto power = [&](std::uint32_t var, std::uint32_t e) -> const Rational& {
        auto& cache = powers[var];
        while (cache.size() <= e) cache.push_back(cache.back() * p.coords[var]);
        return cache[e];
    };
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t(c);
        for (std::uint32_t i = 0; i < nvars_; ++i)
            if (m.exponents[i] != 0) t *= power(i, m.exponents[i]);
        acc += t;
    }
    return acc;
}

const Monomial& Polynomial::leading_monomial(const TermOrder& order) const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading monomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (best == nullptr || order.less(*best, m)) best = &m;
    return *best;
}

const Rational& Polynomial::leading_coefficient(const TermOrder& order) const {
    return terms_.at(leading_monomial(order));
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

Polynomial Polynomial::normalized(const TermOrder& order) const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (leading_coefficient(order) < 0) c = -c;
    return *this * (Rational(1) / c);
}

Polynomial Polynomial::remap_variables(std::uint32_t new_nvars,
                                       std::span<const std::uint32_t> var_map) const {
    if (var_map.size() != nvars_) throw ArityError("variable map arity mismatch");
    Polynomial r(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_nvars);
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            if (m.exponents[i] == 0) continue;
            if (var_map[i] >= new_nvars) throw ArityError("variable map target out of range");
            nm.exponents[var_map[i]] += m.exponents[i];
        }
        r.add_term(nm, c);
    }
    return r;
}

Polynomial compose_substitute(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.nvars())
        throw ArityError("substitution needs one image per variable");
    std::uint32_t target = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != target) throw ArityError("substitution images live in different rings");

    // Power cache per variable keeps repeated exponents cheap.
    std::vector<std::vector<Polynomial>> powers(p.nvars());
    for (std::size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(Polynomial::constant(target, Rational(1)));
    auto power = [&](std::uint32_t var, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[var];
        while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
        return cache[e];
    };

    Polynomial acc(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::uint32_t i = 0; i < p.nvars(); ++i)
            if (m.exponents[i] != 0) t = t * power(i, m.exponents[i]);
        acc += t;
    }
    return acc;
}

Polynomial compose_substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    return compose_substitute(p, std::span<const Polynomial>(images));
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
    if (p.nvars() != d.nvars()) throw ArityError("polynomial variable counts differ");
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    const TermOrder order = grevlex();
    Polynomial rem(p);
    Polynomial quot(p.nvars());
    const Monomial& lm_d = d.leading_monomial(order);
    const Rational& lc_d = d.leading_coefficient(order);
    while (!rem.is_zero()) {
        const Monomial& lm_r = rem.leading_monomial(order);
        if (!lm_d.divides(lm_r)) return std::nullopt;
        Monomial q_m = lm_r / lm_d;
        Rational q_c = rem.leading_coefficient(order) / lc_d;
        Polynomial q_term = Polynomial::term(p.nvars(), q_m, q_c);
        quot += q_term;
        rem -= q_term * d;
    }
    return quot;
}

namespace {

// Coefficients of p viewed as univariate in `var`, indexed by degree.
// Each coefficient keeps the full ambient arity with `var` zeroed out.
std::vector<Polynomial> univariate_coefficients(const Polynomial& p, std::uint32_t var) {
    const std::int64_t deg = std::max<std::int64_t>(p.degree_in(var), 0);
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(deg) + 1, Polynomial(p.nvars()));
    for (const auto& [m, c] : p.terms()) {
        Monomial base(m);
        const std::uint32_t e = base.exponents[var];
        base.exponents[var] = 0;
        coeffs[e].add_term(base, c);
    }
    return coeffs;
}

Polynomial from_univariate_coefficients(std::uint32_t nvars, std::uint32_t var,
                                        const std::vector<Polynomial>& coeffs) {
    Polynomial r(nvars);
    Monomial xe(nvars);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        xe.exponents[var] = static_cast<std::uint32_t>(e);
        for (const auto& [m, c] : coeffs[e].terms()) r.add_term(m * xe, c);
    }
    return r;
}

// Content of p with respect to `var`: gcd of its univariate coefficients.
Polynomial content_in(const Polynomial& p, std::uint32_t var) {
    Polynomial g(p.nvars());
    for (const auto& coeff : univariate_coefficients(p, var)) {
        if (coeff.is_zero()) continue;
        g = gcd_multivariate(g, coeff);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// Pseudo-remainder of a by b with respect to `var`:
// lc(b)^(da-db+1) * a = q*b + r with deg_var(r) < deg_var(b).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::uint32_t var) {
    std::vector<Polynomial> ra = univariate_coefficients(a, var);
    const std::vector<Polynomial> rb = univariate_coefficients(b, var);
    const std::size_t db = rb.size() - 1;
    const Polynomial& lcb = rb.back();
    while (ra.size() >= rb.size()) {
        const Polynomial lead = ra.back();
        const std::size_t shift = ra.size() - rb.size();
        // multiply everything by lc(b), then cancel the top term
        for (auto& c : ra) c = c * lcb;
        for (std::size_t j = 0; j < db; ++j) ra[shift + j] -= lead * rb[j];
        ra.pop_back();
        while (!ra.empty() && ra.back().is_zero()) ra.pop_back();
        if (ra.empty()) break;
    }
    if (ra.empty()) return Polynomial(a.nvars());
    return from_univariate_coefficients(a.nvars(), var, ra);
}

// Highest variable index occurring in p, or -1 if p is constant.
std::int64_t top_variable(const Polynomial& p) {
    for (std::uint32_t v = p.nvars(); v-- > 0;)
        if (p.degree_in(v) > 0) return v;
    return -1;
}

}  // namespace

Polynomial gcd_multivariate(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() != q.nvars()) throw ArityError("polynomial variable counts differ");
    const TermOrder order = grevlex();
    if (p.is_zero()) return q.normalized(order);
    if (q.is_zero()) return p.normalized(order);
    if (p.is_constant() || q.is_constant())
        return Polynomial::constant(p.nvars(), Rational(1));

    const std::int64_t vp = top_variable(p), vq = top_variable(q);
    const std::uint32_t var = static_cast<std::uint32_t>(std::max(vp, vq));

    const Polynomial cont_p = content_in(p, var);
    const Polynomial cont_q = content_in(q, var);
    const Polynomial cont_gcd = gcd_multivariate(cont_p, cont_q);

    Polynomial a = *exact_divide(p, cont_p);
    Polynomial b = *exact_divide(q, cont_q);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);

    // Primitive remainder sequence in `var`.
    while (true) {
        if (b.is_zero()) break;
        if (b.degree_in(var) == 0) {
            // Both primitive in var; a nontrivial common factor would divide
            // a degree-0 remainder, so the primitive-part gcd is 1.
            return cont_gcd.normalized(order);
        }
        Polynomial r = pseudo_remainder(a, b, var);
        if (r.is_zero()) {
            Polynomial pp_b = *exact_divide(b, content_in(b, var));
            return (cont_gcd * pp_b).normalized(order);
        }
        a = std::move(b);
        b = *exact_divide(r, content_in(r, var));
    }
    return (cont_gcd * a).normalized(order);
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    const TermOrder order = grevlex();
    if (p.is_constant()) return Polynomial::constant(p.nvars(), Rational(1));
    Polynomial g = p;
    for (std::uint32_t v = 0; v < p.nvars(); ++v) {
        Polynomial d = p.derivative(v);
        if (d.is_zero()) continue;
        g = gcd_multivariate(g, d);
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return p.normalized(order);
    return exact_divide(p, g)->normalized(order);
}

std::string to_string(const Polynomial& p, std::span<const std::string> names,
                      const TermOrder& order) {
    if (names.size() != p.nvars()) throw ArityError("variable name count mismatch");
    if (p.is_zero()) return "0";

    std::vector<const Monomial*> mons;
    mons.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) mons.push_back(&m);
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial* a, const Monomial* b) { return order.less(*b, *a); });

    std::ostringstream out;
    bool first = true;
    for (const Monomial* m : mons) {
        const Rational& c = p.terms().at(*m);
        const bool negative = c < 0;
        Rational abs_c = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string vars;
        for (std::uint32_t i = 0; i < p.nvars(); ++i) {
            const std::uint32_t e = m->exponents[i];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out << to_string(abs_c);
        } else if (abs_c == 1) {
            out << vars;
        } else {
            out << to_string(abs_c) << "*" << vars;
        }
    }
    return out.str();
}

}  // namespace fixlocus
