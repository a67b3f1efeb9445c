#pragma once

#include <vector>

#include "kolmo/matrix.hpp"

namespace kolmo::lin {

struct EigenResult {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // unitary, column i pairs with values[i]
};

// Cyclic Jacobi diagonalization of a Hermitian matrix: m = Q diag(values) Q*.
// Throws Error("not_hermitian") when the symmetry check at `tol` fails.
EigenResult hermitian_eigen(const ComplexMatrix& m, double tol = 1e-12);

// Positive square root with eigenvalues in [-tol*|lambda|_max, 0) clipped to 0.
// Throws Error("not_psd") below that.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol = 1e-10);

struct SvdResult {
  ComplexMatrix u;              // rows x r, orthonormal columns
  std::vector<double> sigma;    // descending, r = min(rows, cols)
  ComplexMatrix v;              // cols x r, orthonormal columns; a = u diag(sigma) v*
};

// One-sided Jacobi SVD; column pairs are rotated until mutually orthogonal,
// so small singular values are not squared away.
SvdResult svd(const ComplexMatrix& a);

// Moore-Penrose pseudoinverse. Singular values below tol*sigma_max count as zero.
ComplexMatrix pinv(const ComplexMatrix& m, double tol = 1e-10);

// Largest singular value.
double op_norm(const ComplexMatrix& m);

std::size_t rank(const ComplexMatrix& m, double tol = 1e-10);

// Orthogonal projection onto the range of a Hermitian PSD matrix.
ComplexMatrix range_projection(const ComplexMatrix& m, double tol = 1e-10);

// Orthonormal basis (columns) of the null space of `a`, i.e. right singular
// vectors whose singular value is <= tol*max(1, sigma_max).
ComplexMatrix null_space(const ComplexMatrix& a, double tol = 1e-10);

}  // namespace kolmo::lin
