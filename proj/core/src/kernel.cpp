#include "kolmo/kernel.hpp"

#include <cmath>
#include <unordered_set>

namespace kolmo::kernels {

namespace {

void check_same_points(const std::vector<std::string>& a, const std::vector<std::string>& b,
                       const char* code) {
  if (a != b) fail(code, "point label lists differ");
}

}  // namespace

FiniteKernel::FiniteKernel(std::vector<std::string> pts, ComplexMatrix g)
    : points(std::move(pts)), gram(std::move(g)) {
  if (gram.rows() != points.size() || gram.cols() != points.size())
    fail("dimension_mismatch", "gram size does not match point count");
  const double scale = std::max(1.0, gram.norm_max());
  if (!gram.is_hermitian(1e-12 * scale))
    fail("not_hermitian", "kernel gram is not Hermitian");
  std::unordered_set<std::string> seen(points.begin(), points.end());
  if (seen.size() != points.size()) fail("duplicate_labels", "point labels must be unique");
}

ComplexMatrix Decomposition::regram() const {
  const std::size_t n = points.size();
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < rank; ++r) s += vectors(r, i) * std::conj(vectors(r, j));
      g(i, j) = s;
    }
  return g;
}

BiKernel::BiKernel(std::vector<std::string> lp, std::vector<std::string> rp, ComplexMatrix v)
    : left_points(std::move(lp)), right_points(std::move(rp)), values(std::move(v)) {
  if (values.rows() != left_points.size() || values.cols() != right_points.size())
    fail("dimension_mismatch", "bikernel values do not match point lists");
}

BiKernel BiKernel::from_kernel(const FiniteKernel& k) {
  return BiKernel(k.points, k.points, k.gram);
}

bool is_positive_definite(const FiniteKernel& k, double tol) {
  if (k.size() == 0) return true;
  lin::EigenResult eg = lin::hermitian_eigen(k.gram);
  const double lmax = std::max(eg.values.front(), 0.0);
  return eg.values.back() >= -tol * std::max(1.0, lmax);
}

Decomposition kolmogorov_decompose(const FiniteKernel& k, double tol) {
  if (!is_positive_definite(k, tol))
    fail("not_positive_definite", "kernel is not positive definite");
  Decomposition d;
  d.points = k.points;
  if (k.size() == 0) return d;

  lin::EigenResult eg = lin::hermitian_eigen(k.gram);
  const double lmax = std::max(eg.values.front(), 0.0);
  std::size_t r = 0;
  while (r < eg.values.size() && eg.values[r] > tol * lmax && eg.values[r] > 0.0) ++r;

  // v(x_i) = (sqrt(l_1) q_1[i], ..., sqrt(l_r) q_r[i]): minimal-rank section.
  d.rank = r;
  d.vectors = ComplexMatrix(r, k.size());
  for (std::size_t a = 0; a < r; ++a) {
    const double s = std::sqrt(eg.values[a]);
    for (std::size_t i = 0; i < k.size(); ++i) d.vectors(a, i) = s * eg.vectors(i, a);
  }
  return d;
}

std::optional<ComplexMatrix> unitary_equivalence(const Decomposition& d1, const Decomposition& d2,
                                                 double tol) {
  check_same_points(d1.points, d2.points, "label_mismatch");
  const ComplexMatrix g1 = d1.regram();
  const ComplexMatrix g2 = d2.regram();
  if ((g1 - g2).norm_max() > tol) return std::nullopt;
  if (d1.rank != d2.rank) return std::nullopt;

  ComplexMatrix w = d2.vectors * lin::pinv(d1.vectors);
  // Unitarity and the mapping property are automatic when the Grams agree;
  // verify anyway so roundoff never leaks a non-unitary witness.
  const ComplexMatrix wtw = w.adjoint() * w;
  if ((wtw - ComplexMatrix::identity(d1.rank)).norm_max() > std::max(tol, 1e-8))
    return std::nullopt;
  if ((w * d1.vectors - d2.vectors).norm_max() > std::max(tol, 1e-8) * (1.0 + d2.vectors.norm_max()))
    return std::nullopt;
  return w;
}

std::optional<double> dominance_constant(const FiniteKernel& kprime, const FiniteKernel& k,
                                         double tol) {
  check_same_points(kprime.points, k.points, "point_mismatch");
  if (!is_positive_definite(k, tol) || !is_positive_definite(kprime, tol))
    fail("not_positive_definite", "dominance requires positive definite kernels");
  if (k.size() == 0) return 0.0;

  // Finite c exists iff null(gram_K) sits inside null(gram_K').
  const ComplexMatrix p = lin::range_projection(k.gram, tol);
  const ComplexMatrix leak = kprime.gram - p * kprime.gram * p;
  const double scale = std::max(1.0, kprime.gram.norm_max());
  if (leak.norm_max() > 1e-8 * scale) return std::nullopt;

  // Whiten: c = lambda_max(pinv(sqrt(G)) G' pinv(sqrt(G))).
  const ComplexMatrix root_inv = lin::pinv(lin::psd_sqrt(k.gram, tol), std::sqrt(tol));
  const ComplexMatrix m = root_inv * kprime.gram * root_inv;
  lin::EigenResult eg = lin::hermitian_eigen(m, 1e-8);
  return eg.values.empty() ? 0.0 : std::max(0.0, eg.values.front());
}

std::optional<double> bound_constant(const BiKernel& l, const FiniteKernel& k,
                                     const FiniteKernel& kprime, double tol) {
  check_same_points(l.left_points, k.points, "dimension_mismatch");
  check_same_points(l.right_points, kprime.points, "dimension_mismatch");
  if (!is_positive_definite(k, tol) || !is_positive_definite(kprime, tol))
    fail("not_positive_definite", "bound requires positive definite kernels");
  if (k.size() == 0 || kprime.size() == 0) return 0.0;

  // L must vanish on null(gram_K) in its rows and null(gram_K') in its columns.
  const ComplexMatrix pk = lin::range_projection(k.gram, tol);
  const ComplexMatrix pk2 = lin::range_projection(kprime.gram, tol);
  const ComplexMatrix leak = l.values - pk * l.values * pk2;
  if (leak.norm_max() > 1e-8 * std::max(1.0, l.values.norm_max())) return std::nullopt;

  const ComplexMatrix a = lin::pinv(lin::psd_sqrt(k.gram, tol), std::sqrt(tol));
  const ComplexMatrix b = lin::pinv(lin::psd_sqrt(kprime.gram, tol), std::sqrt(tol));
  const double s = lin::op_norm(a * l.values * b);
  return s * s;
}

KernelOperator intertwiner(const BiKernel& l, const FiniteKernel& k, const FiniteKernel& kprime,
                           double tol) {
  const auto c = bound_constant(l, k, kprime, tol);
  if (!c) fail("unbounded", "L is not bounded with respect to K and K'");

  KernelOperator op;
  op.source = kolmogorov_decompose(k, tol);
  op.target = kolmogorov_decompose(kprime, tol);
  // <S v_K(x_i), v_K'(y_j)> = L(x_i, y_j) reads V'* S V = L^T entrywise.
  const ComplexMatrix lt = l.values.transpose();
  op.matrix = lin::pinv(op.target.vectors.adjoint()) * lt * lin::pinv(op.source.vectors);
  return op;
}

BiKernel operator_to_kernel(const KernelOperator& s) {
  const ComplexMatrix m = s.target.vectors.adjoint() * s.matrix * s.source.vectors;
  return BiKernel(s.source.points, s.target.points, m.transpose());
}

KernelOperator positive_intertwiner(const FiniteKernel& kprime, const FiniteKernel& k,
                                    double tol) {
  const auto c = dominance_constant(kprime, k, tol);
  if (!c) fail("not_dominated", "K' is not dominated by any multiple of K");

  KernelOperator op;
  op.source = kolmogorov_decompose(k, tol);
  op.target = op.source;
  const ComplexMatrix vin = lin::pinv(op.source.vectors);
  ComplexMatrix s = vin.adjoint() * kprime.gram.conjugate() * vin;
  // Hermitian in exact arithmetic; clean the roundoff skew.
  ComplexMatrix sym(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      sym(i, j) = 0.5 * (s(i, j) + std::conj(s(j, i)));
  op.matrix = std::move(sym);
  return op;
}

}  // namespace kolmo::kernels
