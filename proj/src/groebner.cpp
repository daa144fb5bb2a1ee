#include "fixlocus/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace fixlocus {

namespace {

struct Pair {
    std::size_t i, j;  // i < j
    Monomial lcm;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
    const Monomial& lmf = f.leading_monomial(order);
    const Monomial& lmg = g.leading_monomial(order);
    const Monomial l = lcm(lmf, lmg);
    Polynomial a = Polynomial::term(f.nvars(), l / lmf, Rational(1) / f.leading_coefficient(order));
    Polynomial b = Polynomial::term(g.nvars(), l / lmg, Rational(1) / g.leading_coefficient(order));
    return a * f - b * g;
}

// Full division remainder; divisor choice scans the basis in index order,
// so the result is deterministic.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                  const TermOrder& order) {
    Polynomial rem(p.nvars());
    Polynomial work(p);
    while (!work.is_zero()) {
        const Monomial lm = work.leading_monomial(order);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Monomial& lmg = g.leading_monomial(order);
            if (!lmg.divides(lm)) continue;
            const Rational factor = work.terms().at(lm) / g.leading_coefficient(order);
            work -= Polynomial::term(p.nvars(), lm / lmg, factor) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            const Rational c = work.terms().at(lm);
            rem.add_term(lm, c);
            work.add_term(lm, -c);
        }
    }
    return rem;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order) {
    std::vector<Polynomial> basis;
    std::uint32_t nvars = 0;
    bool first = true;
    for (const auto& g : gens) {
        if (first && !gens.empty()) {
            nvars = g.nvars();
            first = false;
        }
        if (g.nvars() != nvars) throw ArityError("generators live in different rings");
        if (!g.is_zero()) basis.push_back(g.normalized(order));
    }
    if (basis.empty()) return GroebnerBasis({}, order);

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j, lcm(basis[i].leading_monomial(order),
                                         basis[j].leading_monomial(order))});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pending.empty()) {
        // Normal strategy: smallest lcm under the order, ties by index.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const int cmp = order.compare(pending[k].lcm, pending[best].lcm);
            if (cmp < 0 || (cmp == 0 && std::make_pair(pending[k].i, pending[k].j) <
                                            std::make_pair(pending[best].i, pending[best].j)))
                best = k;
        }
        const Pair pair = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        handled.insert({pair.i, pair.j});

        const Monomial& lmi = basis[pair.i].leading_monomial(order);
        const Monomial& lmj = basis[pair.j].leading_monomial(order);
        // Coprime criterion: disjoint leading monomials reduce to zero.
        if (lcm(lmi, lmj) == lmi * lmj) continue;
        // Chain criterion: a third leading monomial dividing the lcm, with
        // both side pairs already handled, makes this pair redundant.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!basis[k].leading_monomial(order).divides(pair.lcm)) continue;
            auto key_ik = std::minmax(pair.i, k);
            auto key_jk = std::minmax(pair.j, k);
            if (handled.count({key_ik.first, key_ik.second}) &&
                handled.count({key_jk.first, key_jk.second}))
                chained = true;
        }
        if (chained) continue;

        Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], order);
        Polynomial r = reduce(s, basis, order);
        if (r.is_zero()) continue;
        // Keeping every new generator primitive tames coefficient growth.
        basis.push_back(r.normalized(order));
        push_pairs_for(basis.size() - 1);
    }

    // Interreduce: drop generators whose leading monomial is divisible by
    // another's, then fully reduce each survivor by the others.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lmj = basis[j].leading_monomial(order);
            if (lmj.divides(basis[i].leading_monomial(order))) {
                // Break ties between equal leading monomials by keeping the
                // earlier generator.
                if (lmj == basis[i].leading_monomial(order) && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = reduce(reduced[i], others, order).normalized(order);
    }
    reduced.erase(std::remove_if(reduced.begin(), reduced.end(),
                                 [](const Polynomial& p) { return p.is_zero(); }),
                  reduced.end());
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    return GroebnerBasis(std::move(reduced), order);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
    return reduce(p, basis.generators(), basis.order());
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& basis) {
    return normal_form(p, basis).is_zero();
}

bool is_trivial(const GroebnerBasis& basis) {
    for (const auto& g : basis.generators())
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

bool radical_member(const Polynomial& p, const std::vector<Polynomial>& gens,
                    const TermOrder& order) {
    const std::uint32_t n = p.nvars();
    for (const auto& g : gens)
        if (g.nvars() != n) throw ArityError("generators live in different rings");
    // Lift to n+1 variables; the fresh variable is the last one.
    std::vector<std::uint32_t> keep(n);
    for (std::uint32_t i = 0; i < n; ++i) keep[i] = i;
    std::vector<Polynomial> lifted;
    lifted.reserve(gens.size() + 1);
    for (const auto& g : gens) lifted.push_back(g.remap_variables(n + 1, keep));
    Polynomial t = Polynomial::variable(n + 1, n);
    Polynomial one = Polynomial::constant(n + 1, Rational(1));
    lifted.push_back(one - t * p.remap_variables(n + 1, keep));
    // The permutation of `order` is for the base ring; the lifted ring gets
    // the same kind with the default permutation.
    return is_trivial(buchberger(lifted, TermOrder(order.kind())));
}

bool varieties_equal(const std::vector<Polynomial>& gens_a,
                     const std::vector<Polynomial>& gens_b, const TermOrder& order) {
    for (const auto& a : gens_a)
        if (!radical_member(a, gens_b, order)) return false;
    for (const auto& b : gens_b)
        if (!radical_member(b, gens_a, order)) return false;
    return true;
}

bool verify_basis(const std::vector<Polynomial>& inputs, const GroebnerBasis& basis) {
    const auto& gens = basis.generators();
    const TermOrder& order = basis.order();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!normal_form(s_polynomial(gens[i], gens[j], order), basis).is_zero())
                return false;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && gens[i].leading_monomial(order).divides(gens[j].leading_monomial(order)))
                return false;
    for (const auto& p : inputs)
        if (!normal_form(p, basis).is_zero()) return false;
    return true;
}

}  // namespace fixlocus
