#include "kolmo/sampled.hpp"

#include <cmath>

#include "kolmo/fft.hpp"

namespace kolmo {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ipow(int base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::int64_t grid_anchor(const Grid& g) {
  const double k = g.start / g.step;
  const std::int64_t k0 = std::llround(k);
  if (std::abs(k - static_cast<double>(k0)) > 1e-9)
    fail("grid_mismatch", "time grid start is not an integer multiple of step");
  return k0;
}

cplx quad_inner(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.grid == g.grid) || f.domain != g.domain)
    fail("grid_mismatch", "inner product requires a shared grid");
  cplx s = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) s += f.values[i] * std::conj(g.values[i]);
  const double w = f.domain == Domain::time ? f.grid.step : f.grid.step / (2.0 * M_PI);
  return s * w;
}

double quad_norm(const SampledFunction& f) {
  double s = 0.0;
  for (const cplx& z : f.values) s += std::norm(z);
  const double w = f.domain == Domain::time ? f.grid.step : f.grid.step / (2.0 * M_PI);
  return std::sqrt(s * w);
}

SampledFunction translate(const SampledFunction& f, std::int64_t n) {
  const double shift = static_cast<double>(n) / f.grid.step;
  const std::int64_t cells = std::llround(shift);
  if (std::abs(shift - static_cast<double>(cells)) > 1e-9)
    fail("grid_mismatch", "translation is not an integer number of cells");
  SampledFunction out(f.grid, f.domain);
  const std::int64_t count = static_cast<std::int64_t>(f.grid.count);
  for (std::int64_t j = 0; j < count; ++j) {
    const std::int64_t src = j - cells;
    out.values[static_cast<std::size_t>(j)] =
        (src >= 0 && src < count) ? f.values[static_cast<std::size_t>(src)] : 0.0;
  }
  return out;
}

SampledFunction dilate_down(const SampledFunction& f, int scale_n, int m) {
  const std::int64_t k0 = grid_anchor(f.grid);
  const std::int64_t p = ipow(scale_n, m);
  const double amp = std::pow(static_cast<double>(scale_n), -0.5 * m);
  SampledFunction out(f.grid, f.domain);
  const std::int64_t count = static_cast<std::int64_t>(f.grid.count);
  for (std::int64_t j = 0; j < count; ++j) {
    const std::int64_t src = floor_div(k0 + j, p) - k0;
    out.values[static_cast<std::size_t>(j)] =
        (src >= 0 && src < count) ? amp * f.values[static_cast<std::size_t>(src)] : 0.0;
  }
  return out;
}

SampledFunction dilate_up(const SampledFunction& f, int scale_n, int m) {
  const std::int64_t k0 = grid_anchor(f.grid);
  const std::int64_t p = ipow(scale_n, m);
  const double amp = std::pow(static_cast<double>(scale_n), 0.5 * m);
  SampledFunction out(f.grid, f.domain);
  const std::int64_t count = static_cast<std::int64_t>(f.grid.count);
  for (std::int64_t j = 0; j < count; ++j) {
    const std::int64_t src = (k0 + j) * p - k0;
    out.values[static_cast<std::size_t>(j)] =
        (src >= 0 && src < count) ? amp * f.values[static_cast<std::size_t>(src)] : 0.0;
  }
  return out;
}

void scale_inplace(SampledFunction& f, cplx s) {
  for (cplx& z : f.values) z *= s;
}

void axpy_inplace(SampledFunction& acc, cplx a, const SampledFunction& x) {
  if (!(acc.grid == x.grid)) fail("grid_mismatch", "axpy requires a shared grid");
  for (std::size_t i = 0; i < acc.values.size(); ++i) acc.values[i] += a * x.values[i];
}

namespace {

void check_conjugate_ready(const SampledFunction& f, Domain expected) {
  if (f.domain != expected) fail("grid_mismatch", "wrong domain for transform");
  const std::size_t n = f.grid.count;
  if (n == 0 || (n & (n - 1))) fail("bad_shape", "transform length must be a power of two");
  const double want_start = -0.5 * static_cast<double>(n) * f.grid.step;
  if (std::abs(f.grid.start - want_start) > 1e-9 * f.grid.step)
    fail("grid_mismatch", "transform grid must be symmetric about zero");
}

}  // namespace

namespace {

// Centered DFT: out[o] ~ sum_l v[l] e^{sign 2pi i l o / n} with l, o counted
// from -n/2. Shifting both indices costs the (-1)^b (-1)^o (-1)^{n/2} twist.
std::vector<cplx> centered_dft(const CVector& v, int sign) {
  const std::size_t n = v.size();
  std::vector<cplx> buf(n);
  for (std::size_t b = 0; b < n; ++b) buf[b] = (b % 2 == 0) ? v[b] : -v[b];
  fft(buf, sign);
  const double sigma = ((n / 2) % 2 == 0) ? 1.0 : -1.0;
  for (std::size_t o = 0; o < n; ++o) buf[o] *= (o % 2 == 0) ? sigma : -sigma;
  return buf;
}

}  // namespace

SampledFunction inverse_transform(const SampledFunction& freq) {
  check_conjugate_ready(freq, Domain::frequency);
  const std::size_t n = freq.grid.count;
  const double dx = freq.grid.step;
  const double dt = 2.0 * M_PI / (static_cast<double>(n) * dx);

  // f(t_o) = (dx/2pi) sum_l F_l e^{i x_l t_o}, x_l t_o = 2pi l o / n.
  std::vector<cplx> buf = centered_dft(freq.values, +1);

  SampledFunction out;
  out.domain = Domain::time;
  out.grid = Grid{-0.5 * static_cast<double>(n) * dt, dt, n};
  out.values.resize(n);
  const double w = dx / (2.0 * M_PI);
  for (std::size_t o = 0; o < n; ++o) out.values[o] = w * buf[o];
  return out;
}

SampledFunction forward_transform(const SampledFunction& time) {
  check_conjugate_ready(time, Domain::time);
  const std::size_t n = time.grid.count;
  const double dt = time.grid.step;
  const double dx = 2.0 * M_PI / (static_cast<double>(n) * dt);

  std::vector<cplx> buf = centered_dft(time.values, -1);

  SampledFunction out;
  out.domain = Domain::frequency;
  out.grid = Grid{-0.5 * static_cast<double>(n) * dx, dx, n};
  out.values.resize(n);
  for (std::size_t o = 0; o < n; ++o) out.values[o] = dt * buf[o];
  return out;
}

SampledFunction restrict_to(const SampledFunction& f, const Grid& target) {
  const double ratio = target.step / f.grid.step;
  const std::int64_t factor = std::llround(ratio);
  if (factor < 1 || std::abs(ratio - static_cast<double>(factor)) > 1e-9)
    fail("grid_mismatch", "target step must be an integer multiple of source step");
  const double off = (target.start - f.grid.start) / f.grid.step;
  const std::int64_t base = std::llround(off);
  if (std::abs(off - static_cast<double>(base)) > 1e-6)
    fail("grid_mismatch", "target grid is not aligned to the source lattice");

  SampledFunction out(target, f.domain);
  const std::int64_t count = static_cast<std::int64_t>(f.grid.count);
  for (std::size_t j = 0; j < target.count; ++j) {
    cplx acc = 0.0;
    for (std::int64_t r = 0; r < factor; ++r) {
      const std::int64_t src = base + static_cast<std::int64_t>(j) * factor + r;
      if (src >= 0 && src < count) acc += f.values[static_cast<std::size_t>(src)];
    }
    out.values[j] = acc / static_cast<double>(factor);
  }
  return out;
}

}  // namespace kolmo
