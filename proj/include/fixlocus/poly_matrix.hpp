// poly_matrix.hpp
// Rectangular grids of polynomials (Jacobian matrices, mostly) and the
// exact determinant. Bareiss fraction-free elimination is the primary
// route; for sizes up to four a cofactor expansion runs as well and the
// two results are required to agree.
#pragma once

#include <cstdint>
#include <vector>

#include "fixlocus/polynomial.hpp"

namespace fixlocus {

class PolyMatrix {
  public:
    PolyMatrix(std::size_t nrows, std::size_t ncols, std::uint32_t nvars)
        : nrows_(nrows), ncols_(ncols), nvars_(nvars),
          cells_(nrows * ncols, Polynomial(nvars)) {}

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    std::uint32_t nvars() const { return nvars_; }

    Polynomial& at(std::size_t r, std::size_t c) { return cells_.at(r * ncols_ + c); }
    const Polynomial& at(std::size_t r, std::size_t c) const { return cells_.at(r * ncols_ + c); }

    void set(std::size_t r, std::size_t c, Polynomial p) {
        if (p.nvars() != nvars_) throw ArityError("matrix entry arity mismatch");
        cells_.at(r * ncols_ + c) = std::move(p);
    }

  private:
    std::size_t nrows_, ncols_;
    std::uint32_t nvars_;
    std::vector<Polynomial> cells_;
};

// Exact determinant by Bareiss elimination (every division is exact).
// For nrows <= 4 a cofactor expansion is computed too and cross-checked.
Polynomial determinant_fraction_free(const PolyMatrix& m);

// Plain cofactor expansion; exposed so tests can use it as an oracle.
Polynomial determinant_cofactor(const PolyMatrix& m);

}  // namespace fixlocus
