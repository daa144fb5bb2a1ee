// linalg.hpp
// Small dense exact-rational matrices: determinant, rank, inverse, and
// matrix-vector products. Used for affine tame generators, pointwise
// differentials and the witness rank check. Sizes here are tiny (n <= 5),
// so plain Gaussian elimination over mpq is the right tool.
#pragma once

#include <cstdint>
#include <vector>

#include "fixlocus/errors.hpp"
#include "fixlocus/rational.hpp"

namespace fixlocus {

class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return cells_.at(r * cols_ + c); }
    const Rational& at(std::size_t r, std::size_t c) const { return cells_.at(r * cols_ + c); }

    RationalMatrix transposed() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    Rational determinant() const;  // square only
    std::size_t rank() const;
    // Inverse via Gauss-Jordan; DomainError when singular.
    RationalMatrix inverse() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> cells_;
};

}  // namespace fixlocus
