#include "fixlocus/poly_matrix.hpp"

namespace fixlocus {

Polynomial determinant_cofactor(const PolyMatrix& m) {
    if (m.nrows() != m.ncols()) throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = m.nrows();
    if (n == 0) return Polynomial::constant(m.nvars(), Rational(1));
    if (n == 1) return m.at(0, 0);
    Polynomial det(m.nvars());
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, m.nvars());
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                minor.set(r - 1, cc++, m.at(r, k));
            }
        }
        Polynomial term = m.at(0, c) * determinant_cofactor(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

namespace {

Polynomial determinant_bareiss(const PolyMatrix& input) {
    const std::size_t n = input.nrows();
    if (n == 0) return Polynomial::constant(input.nvars(), Rational(1));
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(input.nvars())));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r][c] = input.at(r, c);

    int sign = 1;
    Polynomial prev = Polynomial::constant(input.nvars(), Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Polynomial(input.nvars());
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw IntegrityError("Bareiss division was not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Polynomial(input.nvars());
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Polynomial determinant_fraction_free(const PolyMatrix& m) {
    if (m.nrows() != m.ncols()) throw ShapeError("determinant of a non-square matrix");
    Polynomial det = determinant_bareiss(m);
    if (m.nrows() <= 4) {
        Polynomial check = determinant_cofactor(m);
        if (det != check)
            throw IntegrityError("Bareiss and cofactor determinants disagree");
    }
    return det;
}

}  // namespace fixlocus
