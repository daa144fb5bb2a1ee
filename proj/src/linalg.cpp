#include "fixlocus/linalg.hpp"

namespace fixlocus {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return out;
}

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_) throw ShapeError("determinant of a non-square matrix");
    RationalMatrix m(*this);
    const std::size_t n = rows_;
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(k, c));
            det = -det;
        }
        det *= m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational factor = m.at(i, k) / m.at(k, k);
            for (std::size_t c = k; c < n; ++c) m.at(i, c) -= factor * m.at(k, c);
        }
    }
    return det;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix m(*this);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && m.at(pivot, c) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m.at(i, c) == 0) continue;
            Rational factor = m.at(i, c) / m.at(r, c);
            for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        ++r;
    }
    return r;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix m(*this);
    RationalMatrix inv = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k) == 0) ++pivot;
        if (pivot == n) throw DomainError("matrix is singular");
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m.at(pivot, c), m.at(k, c));
                std::swap(inv.at(pivot, c), inv.at(k, c));
            }
        }
        const Rational d = m.at(k, k);
        for (std::size_t c = 0; c < n; ++c) {
            m.at(k, c) /= d;
            inv.at(k, c) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            const Rational f = m.at(i, k);
            for (std::size_t c = 0; c < n; ++c) {
                m.at(i, c) -= f * m.at(k, c);
                inv.at(i, c) -= f * inv.at(k, c);
            }
        }
    }
    return inv;
}

}  // namespace fixlocus
