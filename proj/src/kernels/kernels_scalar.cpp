#include <cassert>
#include <cmath>

#include "lzw/compensated.hpp"
#include "lzw/kernels.hpp"

namespace lzw::simd::scalar {

std::complex<double> dirichlet_sum(std::span<const double> x, std::span<const double> w_re,
                                   std::span<const double> w_im, double sigma, double t) {
  assert(w_re.size() == x.size() && w_im.size() == x.size());
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double amp = std::exp(-sigma * x[k]);
    const double phase = t * x[k];
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    const double ar = amp * w_re[k];
    const double ai = amp * w_im[k];
    re.add(ar * c + ai * s);
    im.add(ai * c - ar * s);
  }
  return {re.value(), im.value()};
}

std::complex<double> dirichlet_sum(std::span<const double> x, double sigma, double t) {
  CompensatedSum re;
  CompensatedSum im;
  for (const double xk : x) {
    const double amp = std::exp(-sigma * xk);
    const double phase = t * xk;
    re.add(amp * std::cos(phase));
    im.add(-(amp * std::sin(phase)));
  }
  return {re.value(), im.value()};
}

void sincos(std::span<const double> x, std::span<double> s, std::span<double> c) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    s[k] = std::sin(x[k]);
    c[k] = std::cos(x[k]);
  }
}

void exp(std::span<const double> x, std::span<double> out) {
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = std::exp(x[k]);
}

}  // namespace lzw::simd::scalar
