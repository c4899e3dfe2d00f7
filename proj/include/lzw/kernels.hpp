#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version built
// on <cmath> and, on x86-64, an AVX2+FMA version with its own vectorised
// exp/sincos. The active level is picked once at startup from the CPU
// features and the LZW_SIMD environment variable ("scalar", "avx2").

#include <complex>
#include <span>

namespace lzw::simd {

enum class Level { scalar, avx2 };

const char* level_name(Level level) noexcept;

/// True when the level is compiled in and the running CPU supports it.
bool level_supported(Level level) noexcept;

Level active_level() noexcept;

/// Overrides the dispatcher (tests, CLI --simd). Throws lzw::Error when the
/// level is unsupported here.
void force_level(Level level);

/// Sum over k of w_k * exp(-sigma * x_k) * exp(-i * t * x_k), accumulated
/// with per-lane compensated summation. With x_k = log n this is the
/// Dirichlet polynomial sum of w_n n^{-s}, s = sigma + i t.
/// w_re and w_im must have the same length as x.
std::complex<double> dirichlet_sum(std::span<const double> x, std::span<const double> w_re,
                                   std::span<const double> w_im, double sigma, double t);

/// Same with unit weights.
std::complex<double> dirichlet_sum(std::span<const double> x, double sigma, double t);

// Level-pinned entry points used by the equivalence tests.
namespace scalar {
std::complex<double> dirichlet_sum(std::span<const double> x, std::span<const double> w_re,
                                   std::span<const double> w_im, double sigma, double t);
std::complex<double> dirichlet_sum(std::span<const double> x, double sigma, double t);
void sincos(std::span<const double> x, std::span<double> s, std::span<double> c);
void exp(std::span<const double> x, std::span<double> out);
}  // namespace scalar

#ifdef LZW_HAVE_AVX2
namespace avx2 {
std::complex<double> dirichlet_sum(std::span<const double> x, std::span<const double> w_re,
                                   std::span<const double> w_im, double sigma, double t);
std::complex<double> dirichlet_sum(std::span<const double> x, double sigma, double t);
void sincos(std::span<const double> x, std::span<double> s, std::span<double> c);
void exp(std::span<const double> x, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace lzw::simd
