// Automorphism construction and the classifiers built on top of it:
// specialness, fixed-locus extraction, the eigen factor of an invariant
// hypersurface, order detection and pointwise differential checks.

#include "fixlocus/autmap.hpp"

#include <algorithm>
#include <random>

#include "fixlocus/errors.hpp"
#include "fixlocus/factor.hpp"

namespace fixlocus {

namespace {

Rational constant_of(const Polynomial& p) { return p.constant_value(); }

}  // namespace

// --- PolynomialMap ----------------------------------------------------------

PolynomialMap::PolynomialMap(std::vector<Polynomial> comps) : components(std::move(comps)) {
    const std::uint32_t n = static_cast<std::uint32_t>(components.size());
    for (const Polynomial& c : components)
        if (c.nvars() != n)
            throw ArityError("map component ambient count differs from the component count");
}

PolynomialMap PolynomialMap::identity(std::uint32_t n) {
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
    return PolynomialMap(std::move(comps));
}

bool PolynomialMap::is_identity() const { return *this == identity(nvars()); }

std::uint32_t PolynomialMap::max_total_degree() const {
    std::int64_t d = 0;
    for (const Polynomial& c : components) d = std::max(d, c.total_degree());
    return d < 0 ? 0 : static_cast<std::uint32_t>(d);
}

RationalPoint PolynomialMap::evaluate(const RationalPoint& a) const {
    RationalPoint out;
    out.coords.reserve(components.size());
    for (const Polynomial& c : components) out.coords.push_back(c.evaluate(a));
    return out;
}

PolyMatrix PolynomialMap::jacobian_matrix() const {
    const std::uint32_t n = nvars();
    PolyMatrix J(n, n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) J.set(i, j, components[i].derivative(j));
    return J;
}

PolynomialMap compose(const PolynomialMap& outer, const PolynomialMap& inner) {
    if (outer.nvars() != inner.nvars())
        throw ArityError("composition of maps with different ambient counts");
    std::vector<Polynomial> comps;
    comps.reserve(outer.components.size());
    for (const Polynomial& c : outer.components)
        comps.push_back(compose_substitute(c, inner.components));
    return PolynomialMap(std::move(comps));
}

// --- Tame generators ---------------------------------------------------------

std::uint32_t TameGenerator::nvars() const {
    if (const auto* a = std::get_if<AffineGenerator>(&value)) {
        if (a->matrix.rows() != a->matrix.cols())
            throw ShapeError("affine generator matrix must be square");
        if (a->translation.size() != a->matrix.rows())
            throw ArityError("affine generator translation length mismatch");
        return static_cast<std::uint32_t>(a->matrix.rows());
    }
    return std::get<ElementaryGenerator>(value).addend.nvars();
}

PolynomialMap TameGenerator::forward_map() const {
    const std::uint32_t n = nvars();
    if (const auto* a = std::get_if<AffineGenerator>(&value)) {
        if (a->matrix.determinant() == 0) throw ContractError("singular affine generator");
        std::vector<Polynomial> comps;
        for (std::uint32_t i = 0; i < n; ++i) {
            Polynomial c = Polynomial::constant(n, a->translation[i]);
            for (std::uint32_t j = 0; j < n; ++j)
                c = c + Polynomial::constant(n, a->matrix.at(i, j)) * Polynomial::variable(n, j);
            comps.push_back(std::move(c));
        }
        return PolynomialMap(std::move(comps));
    }
    const auto& e = std::get<ElementaryGenerator>(value);
    if (e.index >= n) throw ArityError("elementary generator target index out of range");
    for (const auto& [mono, coeff] : e.addend.terms()) {
        (void)coeff;
        if (mono.exponents[e.index] != 0)
            throw ContractError("elementary generator addend involves its own target variable");
    }
    PolynomialMap f = PolynomialMap::identity(n);
    f.components[e.index] = f.components[e.index] + e.addend;
    return f;
}

PolynomialMap TameGenerator::inverse_map() const {
    const std::uint32_t n = nvars();
    if (const auto* a = std::get_if<AffineGenerator>(&value)) {
        if (a->matrix.determinant() == 0) throw ContractError("singular affine generator");
        RationalMatrix inv = a->matrix.inverse();
        std::vector<Rational> shifted = inv.apply(a->translation);  // A^-1 b
        std::vector<Polynomial> comps;
        for (std::uint32_t i = 0; i < n; ++i) {
            Polynomial c = Polynomial::constant(n, -shifted[i]);
            for (std::uint32_t j = 0; j < n; ++j)
                c = c + Polynomial::constant(n, inv.at(i, j)) * Polynomial::variable(n, j);
            comps.push_back(std::move(c));
        }
        return PolynomialMap(std::move(comps));
    }
    const auto& e = std::get<ElementaryGenerator>(value);
    PolynomialMap f = forward_map();  // validates; then flip the sign of the addend
    f.components[e.index] = f.components[e.index] - e.addend - e.addend;
    return f;
}

// --- Automorphism ------------------------------------------------------------

Automorphism Automorphism::certify(PolynomialMap f, PolynomialMap g, Provenance prov) {
    if (f.nvars() == 0) throw ArityError("automorphism needs at least one variable");
    if (f.nvars() != g.nvars())
        throw ArityError("forward and inverse maps have different ambient counts");
    if (!compose(f, g).is_identity() || !compose(g, f).is_identity())
        throw ContractError("maps are not mutually inverse");
    Polynomial det = determinant_fraction_free(f.jacobian_matrix());
    if (!det.is_constant() || det.is_zero())
        throw IntegrityError("not an automorphism: Jacobian determinant is not a nonzero constant");
    return Automorphism(std::move(f), std::move(g), prov, constant_of(det));
}

Automorphism Automorphism::from_pair(PolynomialMap forward, PolynomialMap inverse) {
    return certify(std::move(forward), std::move(inverse), Provenance::ExplicitPair);
}

Automorphism Automorphism::from_generators(const std::vector<TameGenerator>& word,
                                           std::uint32_t nvars) {
    PolynomialMap f = PolynomialMap::identity(nvars);
    for (const TameGenerator& gen : word) {
        if (gen.nvars() != nvars) throw ArityError("tame word mixes ambient counts");
        f = compose(gen.forward_map(), f);
    }
    // f = g_k o ... o g_1, so f^-1 = g_1^-1 o ... o g_k^-1.
    PolynomialMap g = PolynomialMap::identity(nvars);
    for (const TameGenerator& gen : word) g = compose(g, gen.inverse_map());
    return certify(std::move(f), std::move(g), Provenance::TameWord);
}

Automorphism Automorphism::identity(std::uint32_t n) {
    return certify(PolynomialMap::identity(n), PolynomialMap::identity(n),
                          Provenance::ExplicitPair);
}

// --- Specialness -------------------------------------------------------------

SpecialnessVerdict classify_jacobian(const PolynomialMap& f, std::uint32_t probe_bound) {
    Polynomial det = determinant_fraction_free(f.jacobian_matrix());
    if (!det.is_constant() || det.is_zero())
        throw IntegrityError("not an automorphism: Jacobian determinant is not a nonzero constant");
    SpecialnessVerdict v;
    v.lambda = constant_of(det);
    v.special = (v.lambda == 1);
    Rational acc = v.lambda;
    for (std::uint32_t k = 1; k <= probe_bound; ++k) {
        if (acc == 1) {
            v.lambda_order = k;
            break;
        }
        acc *= v.lambda;
    }
    return v;
}

SpecialnessVerdict jacobian_and_classify(const Automorphism& f, std::uint32_t probe_bound) {
    return classify_jacobian(f.forward(), probe_bound);
}

// --- Fixed locus ---------------------------------------------------------------

FixedLocus fixed_hypersurface_part(const Automorphism& f) {
    const std::uint32_t n = f.nvars();
    FixedLocus out;
    for (std::uint32_t i = 0; i < n; ++i) {
        Polynomial d = f.forward().components[i] - Polynomial::variable(n, i);
        if (!d.is_zero()) out.generators.push_back(std::move(d));
    }
    if (out.generators.empty()) {
        out.kind = FixedLocusKind::WholeSpace;
        return out;
    }
    Polynomial g = out.generators.front();
    for (std::size_t i = 1; i < out.generators.size(); ++i)
        g = gcd_multivariate(g, out.generators[i]);
    if (g.is_constant()) {
        out.kind = FixedLocusKind::Unit;
        return out;
    }
    out.kind = FixedLocusKind::Hypersurface;
    out.h = squarefree_part(g);
    return out;
}

// --- Eigen factor ---------------------------------------------------------------

Rational eigen_factor(const Automorphism& f, const Polynomial& h) {
    if (h.is_zero()) throw DomainError("eigen_factor: h must be nonzero");
    if (h.nvars() != f.nvars()) throw ArityError("eigen_factor: ambient count mismatch");
    Polynomial hof = compose_substitute(h, f.forward().components);
    auto quot = exact_divide(hof, h);
    if (!quot || !quot->is_constant())
        throw ContractError("not an invariant hypersurface: h o f is not a constant multiple of h");
    Rational c = constant_of(*quot);
    const Rational& lambda = f.jacobian_determinant();
    if (lambda == 1) {
        if (c != 1)
            throw CounterexampleError(
                "eigen factor differs from 1 although the Jacobian constant is 1");
    } else if (!h.is_constant()) {
        const TermOrder ord = grevlex();
        Polynomial hn = h.normalized(ord);
        if (squarefree_part(h) == hn) {
            IrreducibilityResult irr = irreducible_multivariate(hn);
            if (irr.verdict == IrreducibilityVerdict::Irreducible && c != lambda)
                throw CounterexampleError(
                    "eigen factor of an irreducible invariant hypersurface differs from the "
                    "Jacobian constant");
        }
    }
    return c;
}

// --- Order detection --------------------------------------------------------------

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }  // p < 2^31, no overflow

u64 powmod_u64(u64 base, u64 e, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

u64 rational_mod(const Rational& q, u64 p) {
    u64 num = mpz_fdiv_ui(q.get_num().get_mpz_t(), static_cast<unsigned long>(p));
    u64 den = mpz_fdiv_ui(q.get_den().get_mpz_t(), static_cast<unsigned long>(p));
    if (den == 0) throw IntegrityError("denominator vanishes modulo the probe prime");
    return mulmod(num, powmod_u64(den, p - 2, p), p);  // Fermat inverse
}

u64 eval_mod(const Polynomial& poly, const std::vector<u64>& pt, u64 p) {
    u64 acc = 0;
    for (const auto& [mono, coeff] : poly.terms()) {
        u64 v = rational_mod(coeff, p);
        for (std::uint32_t var = 0; var < mono.nvars(); ++var)
            if (mono.exponents[var] != 0)
                v = mulmod(v, powmod_u64(pt[var], mono.exponents[var], p), p);
        acc = (acc + v) % p;
    }
    return acc;
}

std::vector<u64> eval_map_mod(const PolynomialMap& f, const std::vector<u64>& pt, u64 p) {
    std::vector<u64> out;
    out.reserve(f.components.size());
    for (const Polynomial& c : f.components) out.push_back(eval_mod(c, pt, p));
    return out;
}

// f^e by repeated squaring, or nullopt as soon as an intermediate
// component's total degree exceeds the cap.
std::optional<PolynomialMap> compose_power(const PolynomialMap& f, std::uint32_t e,
                                           std::uint32_t degree_cap) {
    PolynomialMap result = PolynomialMap::identity(f.nvars());
    PolynomialMap base = f;
    std::uint32_t k = e;
    while (k > 0) {
        if (k & 1) {
            result = compose(result, base);
            if (result.max_total_degree() > degree_cap) return std::nullopt;
        }
        k >>= 1;
        if (k > 0) {
            base = compose(base, base);
            if (base.max_total_degree() > degree_cap) return std::nullopt;
        }
    }
    return result;
}

}  // namespace

OrderResult detect_order(const Automorphism& f, std::uint32_t iter_bound,
                         std::uint32_t degree_cap) {
    if (iter_bound < 1) throw DomainError("detect_order: iteration bound must be at least 1");
    if (f.forward().is_identity()) return {true, 1};

    const std::uint32_t n = f.nvars();

    // An exponent m can only be the order if lambda^m = 1 and every orbit
    // modulo a large prime returns after m steps. Both are necessary
    // conditions, so pruning by them never changes the answer; it only
    // skips symbolic compositions that are guaranteed to fail.
    std::vector<bool> candidate(iter_bound + 1, true);
    candidate[0] = false;
    {
        const Rational& lambda = f.jacobian_determinant();
        Rational acc = 1;
        for (std::uint32_t m = 1; m <= iter_bound; ++m) {
            acc *= lambda;
            if (acc != 1) candidate[m] = false;
        }
    }

    // Probe prime avoiding every coefficient denominator of f.
    Integer den_lcm = 1;
    for (const Polynomial& c : f.forward().components)
        for (const auto& [mono, coeff] : c.terms()) {
            (void)mono;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coeff.get_den().get_mpz_t());
        }
    Integer prime_z = 1000003;
    while (mpz_divisible_p(den_lcm.get_mpz_t(), prime_z.get_mpz_t()))
        mpz_nextprime(prime_z.get_mpz_t(), prime_z.get_mpz_t());
    const u64 p = prime_z.get_ui();

    std::mt19937_64 rng(0x0fe11a11u);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<u64> start(n);
        for (u64& x : start) x = rng() % p;
        std::vector<u64> cur = start;
        for (std::uint32_t m = 1; m <= iter_bound; ++m) {
            cur = eval_map_mod(f.forward(), cur, p);
            if (cur != start) candidate[m] = false;
        }
    }

    for (std::uint32_t m = 1; m <= iter_bound; ++m) {
        if (!candidate[m]) continue;
        auto fm = compose_power(f.forward(), m, degree_cap);
        if (!fm) return {false, 0};  // degree budget exceeded
        if (fm->is_identity()) return {true, m};
    }
    return {false, 0};
}

// --- Pointwise differential ----------------------------------------------------

RationalMatrix differential_at(const Automorphism& f, const RationalPoint& a) {
    const std::uint32_t n = f.nvars();
    PolyMatrix J = f.forward().jacobian_matrix();
    RationalMatrix M(n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) M.at(i, j) = J.at(i, j).evaluate(a);
    return M;
}

bool eigen_check(const Automorphism& f, const RationalPoint& a, const Polynomial& h) {
    const std::uint32_t n = f.nvars();
    if (h.nvars() != n) throw ArityError("eigen_check: ambient count mismatch");
    if (h.evaluate(a) != 0)
        throw DomainError("eigen_check: the point does not lie on the hypersurface");
    std::vector<Rational> grad(n);
    bool nonzero = false;
    for (std::uint32_t v = 0; v < n; ++v) {
        grad[v] = h.derivative(v).evaluate(a);
        if (grad[v] != 0) nonzero = true;
    }
    if (!nonzero)
        throw DomainError(
            "eigen_check: singular point of the hypersurface; use the smoothness checker");
    const Rational& lambda = f.jacobian_determinant();
    RationalMatrix M = differential_at(f, a);
    std::vector<Rational> lhs = M.transposed().apply(grad);
    for (std::uint32_t v = 0; v < n; ++v)
        if (lhs[v] != lambda * grad[v]) return false;
    return M.determinant() == lambda;
}

}  // namespace fixlocus
