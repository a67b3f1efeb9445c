#pragma once

#include <complex>
#include <vector>

namespace kolmo {

// In-place radix-2 FFT, x.size() a power of two.
// sign = -1: forward (e^{-2pi i jk/n}); sign = +1: inverse kernel, unnormalized.
void fft(std::vector<std::complex<double>>& x, int sign);

}  // namespace kolmo
