#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kolmo/linalg.hpp"
#include "kolmo/matrix.hpp"

namespace kolmo::kernels {

// Positive definite kernel on an explicit finite point set. The Gram matrix
// carries the quadratic form sum K(x_i,x_j) xi_i conj(xi_j); callers own any
// truncation from an infinite index set.
struct FiniteKernel {
  std::vector<std::string> points;
  ComplexMatrix gram;

  FiniteKernel() = default;
  FiniteKernel(std::vector<std::string> pts, ComplexMatrix g);

  std::size_t size() const { return points.size(); }
};

// Kolmogorov data: vectors.column(i) = v_K(points[i]) in C^rank, with
// <v(x), v(y)> reproducing the Gram. Basis/phase freedom is not normalized;
// compare Grams, never raw vectors.
struct Decomposition {
  std::vector<std::string> points;
  std::size_t rank = 0;
  ComplexMatrix vectors;  // rank x n

  ComplexMatrix regram() const;  // <v(x_i), v(x_j)> as a Gram matrix
};

// Two-variable map L(x, y); not necessarily positive definite.
struct BiKernel {
  std::vector<std::string> left_points;
  std::vector<std::string> right_points;
  ComplexMatrix values;  // values(i, j) = L(left[i], right[j])

  BiKernel() = default;
  BiKernel(std::vector<std::string> lp, std::vector<std::string> rp, ComplexMatrix v);
  static BiKernel from_kernel(const FiniteKernel& k);
};

// Bounded operator between two decomposed kernel spaces.
struct KernelOperator {
  Decomposition source;
  Decomposition target;
  ComplexMatrix matrix;  // rank_target x rank_source
};

bool is_positive_definite(const FiniteKernel& k, double tol = 1e-10);

Decomposition kolmogorov_decompose(const FiniteKernel& k, double tol = 1e-10);

// Unitary W with W v1(x) = v2(x) when the Grams agree within tol, else empty.
std::optional<ComplexMatrix> unitary_equivalence(const Decomposition& d1,
                                                 const Decomposition& d2,
                                                 double tol = 1e-8);

// Least c >= 0 with K' <= cK, i.e. c*gram_K - gram_K' PSD; empty when the null
// space of gram_K is not contained in that of gram_K'.
std::optional<double> dominance_constant(const FiniteKernel& kprime, const FiniteKernel& k,
                                         double tol = 1e-10);

// Least c with |sum L(x_i,y_j) xi_i conj(eta_j)|^2 <= c (sum K..)(sum K'..);
// empty when L does not vanish on the null spaces of the two Grams.
std::optional<double> bound_constant(const BiKernel& l, const FiniteKernel& k,
                                     const FiniteKernel& kprime, double tol = 1e-10);

// The operator S: H_K -> H_K' with <S v_K(x), v_K'(y)> = L(x, y).
// Throws Error("unbounded") when bound_constant is empty.
KernelOperator intertwiner(const BiKernel& l, const FiniteKernel& k, const FiniteKernel& kprime,
                           double tol = 1e-10);

BiKernel operator_to_kernel(const KernelOperator& s);

// Positive S on H_K with <S v_K(x), v_K(y)> = K'(x, y); requires K' <= cK.
KernelOperator positive_intertwiner(const FiniteKernel& kprime, const FiniteKernel& k,
                                    double tol = 1e-10);

}  // namespace kolmo::kernels
