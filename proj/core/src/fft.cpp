#include "kolmo/fft.hpp"

#include <cmath>

#include "kolmo/error.hpp"

namespace kolmo {

void fft(std::vector<std::complex<double>>& x, int sign) {
  const std::size_t n = x.size();
  if (n == 0) return;
  if (n & (n - 1)) fail("bad_shape", "fft size must be a power of two");

  // Bit reversal.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  // Twiddles for the largest stage, strided for the smaller ones.
  std::vector<std::complex<double>> tw(n / 2);
  const double ang = sign * 2.0 * M_PI / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k)
    tw[k] = std::polar(1.0, ang * static_cast<double>(k));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> w = tw[k * stride];
        const std::complex<double> u = x[i + k];
        const std::complex<double> v = x[i + k + half] * w;
        x[i + k] = u + v;
        x[i + k + half] = u - v;
      }
    }
  }
}

}  // namespace kolmo
