#include "kolmo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kolmo::lin {

namespace {

// One annihilation step of the complex Jacobi sweep. For a Hermitian 2x2 block
//   [ app  apq ]
//   [ apq* aqq ]   (app, aqq real)
// returns c (real), s (complex) so that J = [[c, -conj(s)], [s, c]] ... is
// encoded directly below via the (p,q)-plane update; phase is absorbed so the
// rotation reduces to the real case.
struct Rotation {
  double c;
  cplx s;  // J[q][p] entry; J[p][q] = -conj(s)
};

Rotation make_rotation(double app, double aqq, cplx apq) {
  const double absq = std::abs(apq);
  const cplx phase = apq / absq;  // caller guarantees apq != 0
  const double tau = (aqq - app) / (2.0 * absq);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  // s carries the phase that makes the pivot real before rotating.
  return Rotation{c, t * c * phase};
}

}  // namespace

EigenResult hermitian_eigen(const ComplexMatrix& m, double tol) {
  const std::size_t n = m.rows();
  if (m.cols() != n) fail("not_hermitian", "matrix is not square");
  const double scale = std::max(1.0, m.norm_max());
  if (!m.is_hermitian(tol * scale))
    fail("not_hermitian", "matrix is not Hermitian within tolerance");

  ComplexMatrix a = m;
  // Force exact symmetry so the sweep preserves it bit-for-bit.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix q = ComplexMatrix::identity(n);

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
  };

  const double stop = 1e-30 + 1e-15 * a.norm_fro();
  for (int sweep = 0; sweep < 80 && off_norm() > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t qq = p + 1; qq < n; ++qq) {
        const cplx apq = a(p, qq);
        if (std::abs(apq) == 0.0) continue;
        const Rotation r = make_rotation(a(p, p).real(), a(qq, qq).real(), apq);
        const double c = r.c;
        const cplx s = r.s;
        // A <- J* A J on rows/columns p,q.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, qq);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, qq) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(qq, k);
          a(p, k) = c * apk - s * aqk;
          a(qq, k) = std::conj(s) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx qkp = q(k, p), qkq = q(k, qq);
          q(k, p) = c * qkp - std::conj(s) * qkq;
          q(k, qq) = s * qkp + c * qkq;
        }
        a(p, qq) = 0.0;
        a(qq, p) = 0.0;
      }
    }
  }

  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i).real();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return vals[i] > vals[j]; });

  EigenResult out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = vals[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = q(i, order[j]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol) {
  EigenResult eg = hermitian_eigen(m, 1e-12);
  const double lmax = eg.values.empty() ? 0.0 : std::max(eg.values.front(), 0.0);
  const double floor = -tol * std::max(1.0, lmax);
  ComplexMatrix root(m.rows(), m.cols());
  for (std::size_t k = 0; k < eg.values.size(); ++k) {
    double lam = eg.values[k];
    if (lam < floor) fail("not_psd", "matrix has a negative eigenvalue beyond tolerance");
    lam = std::max(lam, 0.0);
    const double s = std::sqrt(lam);
    if (s == 0.0) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const cplx qi = eg.vectors(i, k) * s;
      for (std::size_t j = 0; j < m.cols(); ++j)
        root(i, j) += qi * std::conj(eg.vectors(j, k));
    }
  }
  return root;
}

SvdResult svd(const ComplexMatrix& a) {
  const bool tall = a.rows() >= a.cols();
  ComplexMatrix w = tall ? a : a.adjoint();  // rows >= cols
  const std::size_t m = w.rows(), n = w.cols();

  ComplexMatrix v = ComplexMatrix::identity(n);
  // One-sided Jacobi: rotate column pairs of w until orthogonal.
  const double eps = 1e-15;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        cplx apq = 0.0;
        double app = 0.0, aqq = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          app += std::norm(w(i, p));
          aqq += std::norm(w(i, q));
          apq += w(i, p) * std::conj(w(i, q));
        }
        if (std::abs(apq) <= eps * std::sqrt(app * aqq) || std::abs(apq) == 0.0) continue;
        rotated = true;
        const Rotation r = make_rotation(app, aqq, std::conj(apq));
        const double c = r.c;
        const cplx s = r.s;
        for (std::size_t i = 0; i < m; ++i) {
          const cplx wip = w(i, p), wiq = w(i, q);
          w(i, p) = c * wip - std::conj(s) * wiq;
          w(i, q) = s * wip + c * wiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - std::conj(s) * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sig(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::norm(w(i, j));
    sig[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return sig[i] > sig[j]; });

  ComplexMatrix u(m, n), vv(n, n);
  std::vector<double> sorted(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    sorted[j] = sig[src];
    // Columns with sigma ~ 0 keep a zero u column; pinv masks them anyway.
    const double inv = sig[src] > 0.0 ? 1.0 / sig[src] : 0.0;
    for (std::size_t i = 0; i < m; ++i) u(i, j) = w(i, src) * inv;
    for (std::size_t i = 0; i < n; ++i) vv(i, j) = v(i, src);
  }

  if (tall) return SvdResult{std::move(u), std::move(sorted), std::move(vv)};
  // a = (w)* = v sigma u*, so swap factors.
  return SvdResult{std::move(vv), std::move(sorted), std::move(u)};
}

ComplexMatrix pinv(const ComplexMatrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return ComplexMatrix(m.cols(), m.rows());
  SvdResult s = svd(m);
  const double smax = s.sigma.empty() ? 0.0 : s.sigma.front();
  const double cut = tol * smax;
  ComplexMatrix p(m.cols(), m.rows());
  for (std::size_t k = 0; k < s.sigma.size(); ++k) {
    if (s.sigma[k] <= cut || s.sigma[k] == 0.0) continue;
    const double inv = 1.0 / s.sigma[k];
    for (std::size_t i = 0; i < m.cols(); ++i) {
      const cplx vik = s.v(i, k) * inv;
      for (std::size_t j = 0; j < m.rows(); ++j) p(i, j) += vik * std::conj(s.u(j, k));
    }
  }
  return p;
}

double op_norm(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  SvdResult s = svd(m);
  return s.sigma.empty() ? 0.0 : s.sigma.front();
}

std::size_t rank(const ComplexMatrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  SvdResult s = svd(m);
  const double smax = s.sigma.empty() ? 0.0 : s.sigma.front();
  std::size_t r = 0;
  for (double x : s.sigma)
    if (x > tol * smax && x > 0.0) ++r;
  return r;
}

ComplexMatrix range_projection(const ComplexMatrix& m, double tol) {
  EigenResult eg = hermitian_eigen(m, 1e-10);
  const double lmax = eg.values.empty() ? 0.0 : std::abs(eg.values.front());
  ComplexMatrix p(m.rows(), m.cols());
  for (std::size_t k = 0; k < eg.values.size(); ++k) {
    if (std::abs(eg.values[k]) <= tol * std::max(1e-300, lmax)) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        p(i, j) += eg.vectors(i, k) * std::conj(eg.vectors(j, k));
  }
  return p;
}

ComplexMatrix null_space(const ComplexMatrix& a, double tol) {
  if (a.cols() == 0) return ComplexMatrix(0, 0);
  if (a.rows() == 0) return ComplexMatrix::identity(a.cols());
  SvdResult s = svd(a);
  const double smax = s.sigma.empty() ? 0.0 : s.sigma.front();
  const double cut = tol * std::max(1.0, smax);
  // svd() returns min(m,n) pairs; columns of v beyond rank(a) plus any v-columns
  // with tiny sigma span the null space. When rows < cols, missing directions
  // must be completed from the orthogonal complement of v's columns.
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < s.sigma.size(); ++k)
    if (s.sigma[k] <= cut) keep.push_back(k);

  const std::size_t n = a.cols();
  std::vector<CVector> basis;
  for (std::size_t k : keep) {
    CVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = s.v(i, k);
    basis.push_back(std::move(col));
  }
  if (a.rows() < a.cols()) {
    // Complete with Gram-Schmidt against all v columns.
    std::vector<CVector> have;
    for (std::size_t k = 0; k < s.sigma.size(); ++k) {
      CVector col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = s.v(i, k);
      have.push_back(std::move(col));
    }
    for (std::size_t e = 0; e < n && basis.size() + (s.sigma.size() - keep.size()) < n; ++e) {
      CVector cand(n);
      cand[e] = 1.0;
      for (const auto& b : have) {
        const cplx c = dot(cand, b);
        for (std::size_t i = 0; i < n; ++i) cand[i] -= c * b[i];
      }
      const double nn = norm(cand);
      if (nn > 1e-8) {
        for (auto& z : cand) z /= nn;
        have.push_back(cand);
        basis.push_back(cand);
      }
    }
  }

  ComplexMatrix out(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) out(i, j) = basis[j][i];
  return out;
}

}  // namespace kolmo::lin
