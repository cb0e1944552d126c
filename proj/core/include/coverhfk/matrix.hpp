#pragma once

#include <cstddef>
#include <vector>

#include "coverhfk/integer.hpp"

namespace coverhfk {

/// Dense integer matrix, row-major, exact arithmetic.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transposed() const;
    bool operator==(const IntMatrix& o) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    /// Exact determinant (Bareiss). Square only.
    Int det() const;

    /// Characteristic polynomial of a square matrix, coefficients of
    /// x^0..x^n for det(xI - A) (Faddeev-LeVerrier, exact).
    std::vector<Int> char_poly() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

struct SmithResult {
    IntMatrix D;  // diagonal, d_i >= 0, d_i | d_{i+1}
    IntMatrix U;  // unimodular, rows x rows
    IntMatrix V;  // unimodular, cols x cols
};

/// U * M * V = D with D diagonal, nonnegative, divisibility chain.
SmithResult smith_normal_form(const IntMatrix& M);

/// Signature (#positive - #negative eigenvalues) of a symmetric integer
/// matrix, computed exactly: char poly + Descartes' rule (all roots real).
long signature_symmetric(const IntMatrix& A);

/// Signature of the symmetric tridiagonal matrix with the given diagonal and
/// unit off-diagonals, by exact LDL^T pivoting (zero pivots handled by 2x2
/// blocks). Linear time; suitable for long chains.
long signature_tridiagonal_unit(const std::vector<Int>& diag);

/// Resultant of two integer polynomials given by coefficients x^0..x^deg.
Int resultant(const std::vector<Int>& p, const std::vector<Int>& q);

}  // namespace coverhfk
