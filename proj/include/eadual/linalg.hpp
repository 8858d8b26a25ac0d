// Exact dense linear algebra over Q: Gaussian elimination, RREF, rank,
// kernel bases, and linear-system solving with an explicit solution-space
// description.

#ifndef EADUAL_LINALG_HPP
#define EADUAL_LINALG_HPP

#include "eadual/vec.hpp"

#include <optional>
#include <vector>

namespace eadual {

using Matrix = std::vector<Vec>;  // rows

// Reduced row echelon form; zero rows dropped. The result is the canonical
// basis of the row space.
Matrix rref(Matrix rows);

std::size_t rank(const Matrix& rows);

// Canonical basis of {x : rows * x = 0}, one vector per free column of the
// RREF, in column order.
Matrix kernel_basis(const Matrix& rows, std::size_t ncols);

struct LinearSolution {
    std::optional<Vec> particular;  // empty iff the system is inconsistent
    Matrix kernel;                  // basis of the homogeneous solution space
    // For an inconsistent system: multipliers c with c*A = 0 and c*b != 0.
    std::optional<Vec> inconsistency;
};

// Solves rows * x = rhs exactly.
LinearSolution solve_linear(const Matrix& rows, const Vec& rhs);

// Matrix utilities (rows act on column vectors).
Vec mat_apply(const Matrix& rows, const Vec& x);
Matrix mat_transpose(const Matrix& rows, std::size_t ncols);
Matrix mat_multiply(const Matrix& a, const Matrix& b);
// Inverse of a square matrix; empty optional if singular.
std::optional<Matrix> mat_inverse(const Matrix& rows);
Matrix identity_matrix(std::size_t n);

}  // namespace eadual

#endif
