// term_order.hpp
// Monomial orders for leading-term selection, normal forms and rendering.
// GradedReverseLex is the default everywhere; Lex exists for the order-
// independence checks. An optional variable permutation reorders which
// variable counts as "first" without touching the stored exponents.
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fixlocus/errors.hpp"
#include "fixlocus/monomial.hpp"

namespace fixlocus {

enum class OrderKind { GradedReverseLex, Lex };

class TermOrder {
  public:
    TermOrder() : kind_(OrderKind::GradedReverseLex) {}
    explicit TermOrder(OrderKind kind) : kind_(kind) {}
    TermOrder(OrderKind kind, std::vector<std::uint32_t> permutation)
        : kind_(kind), perm_(std::move(permutation)) {
        std::vector<bool> seen(perm_.size(), false);
        for (auto p : perm_) {
            if (p >= perm_.size() || seen[p]) throw DomainError("variable permutation is not a bijection");
            seen[p] = true;
        }
    }

    OrderKind kind() const { return kind_; }
    const std::vector<std::uint32_t>& permutation() const { return perm_; }

    // <0 if a precedes b (a smaller), 0 if equal, >0 if a larger.
    int compare(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != b.nvars()) throw ArityError("monomial variable counts differ");
        const std::size_t n = a.nvars();
        auto exp = [&](const Monomial& m, std::size_t i) -> std::uint32_t {
            return perm_.empty() ? m.exponents[i] : m.exponents[perm_[i]];
        };
        switch (kind_) {
            case OrderKind::Lex: {
                for (std::size_t i = 0; i < n; ++i) {
                    auto ea = exp(a, i), eb = exp(b, i);
                    if (ea != eb) return ea < eb ? -1 : 1;
                }
                return 0;
            }
            case OrderKind::GradedReverseLex: {
                auto da = a.total_degree(), db = b.total_degree();
                if (da != db) return da < db ? -1 : 1;
                // Equal degree: larger is the one with the smaller exponent
                // in the last variable where they differ.
                for (std::size_t i = n; i-- > 0;) {
                    auto ea = exp(a, i), eb = exp(b, i);
                    if (ea != eb) return ea > eb ? -1 : 1;
                }
                return 0;
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    friend bool operator==(const TermOrder& a, const TermOrder& b) {
        return a.kind_ == b.kind_ && a.perm_ == b.perm_;
    }

  private:
    OrderKind kind_;
    std::vector<std::uint32_t> perm_;  // empty means identity
};

inline TermOrder grevlex() { return TermOrder(OrderKind::GradedReverseLex); }
inline TermOrder lex() { return TermOrder(OrderKind::Lex); }

}  // namespace fixlocus
