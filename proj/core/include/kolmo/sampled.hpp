#pragma once

#include <cstdint>
#include <vector>

#include "kolmo/matrix.hpp"

namespace kolmo {

enum class Domain { time, frequency };

struct Grid {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  double point(std::size_t i) const { return start + step * static_cast<double>(i); }
  double end() const { return point(count); }
  bool operator==(const Grid& o) const {
    return start == o.start && step == o.step && count == o.count;
  }
};

// Uniformly sampled complex function. Time-domain samples use the
// right-continuous cell convention: values[i] is the value on
// [point(i), point(i+1)). That makes step functions with grid-aligned jumps
// exactly representable and makes the quadrature below exact for them.
struct SampledFunction {
  Grid grid;
  Domain domain = Domain::time;
  CVector values;

  SampledFunction() = default;
  SampledFunction(Grid g, Domain d) : grid(g), domain(d), values(g.count) {}
};

// Integer coordinate of the grid origin in units of step. Time-domain grids
// must sit on the integer lattice {k * step} so integer translations and
// dyadic dilations stay exact.
std::int64_t grid_anchor(const Grid& g);

// step * sum f conj(g); equals the trapezoid rule whenever the functions vanish
// at the grid ends, which all compactly supported data here does.
cplx quad_inner(const SampledFunction& f, const SampledFunction& g);
double quad_norm(const SampledFunction& f);

// f(t - n); exact index shift, n/step must be an integer.
SampledFunction translate(const SampledFunction& f, std::int64_t n);

// N^{-m/2} f(t / N^m) for m >= 1 (the unitary dilation), value looked up in the
// cell containing t/N^m; exact for step functions with aligned jumps.
SampledFunction dilate_down(const SampledFunction& f, int scale_n, int m);

// N^{m/2} f(N^m t): exact index arithmetic.
SampledFunction dilate_up(const SampledFunction& f, int scale_n, int m);

void scale_inplace(SampledFunction& f, cplx s);
void axpy_inplace(SampledFunction& acc, cplx a, const SampledFunction& x);

// Quadrature inverse Fourier transform of a frequency-domain function sampled
// on a symmetric power-of-two grid (start = -count/2*step). Returns time
// samples on the conjugate grid: step 2pi/(count*freq_step), same count,
// centered. Convention: f(t) = (1/2pi) Int F(x) e^{ixt} dx.
SampledFunction inverse_transform(const SampledFunction& freq);

// Forward counterpart on the conjugate grid: F(x) = Int f(t) e^{-ixt} dt.
SampledFunction forward_transform(const SampledFunction& time);

// Block-mean decimation onto a target grid with target.step = factor*f.step,
// target aligned to f's lattice. Cell averages keep step-function inner
// products exact while attenuating out-of-band reconstruction ringing.
SampledFunction restrict_to(const SampledFunction& f, const Grid& target);

}  // namespace kolmo
