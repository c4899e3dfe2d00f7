#include <atomic>
#include <cstdlib>
#include <string_view>

#include "lzw/error.hpp"
#include "lzw/kernels.hpp"

namespace lzw::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(LZW_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Level detect() noexcept {
  const bool avx2 = cpu_has_avx2();
  if (const char* env = std::getenv("LZW_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return Level::scalar;
    if (want == "avx2" && avx2) return Level::avx2;
  }
  return avx2 ? Level::avx2 : Level::scalar;
}

std::atomic<Level>& current() noexcept {
  static std::atomic<Level> level{detect()};
  return level;
}

}  // namespace

const char* level_name(Level level) noexcept {
  switch (level) {
    case Level::scalar:
      return "scalar";
    case Level::avx2:
      return "avx2";
  }
  return "?";
}

bool level_supported(Level level) noexcept {
  return level == Level::scalar || (level == Level::avx2 && cpu_has_avx2());
}

Level active_level() noexcept { return current().load(std::memory_order_relaxed); }

void force_level(Level level) {
  if (!level_supported(level)) {
    throw Error(Errc::invalid_argument,
                std::string("SIMD level '") + level_name(level) + "' is not available on this machine");
  }
  current().store(level, std::memory_order_relaxed);
}

std::complex<double> dirichlet_sum(std::span<const double> x, std::span<const double> w_re,
                                   std::span<const double> w_im, double sigma, double t) {
#ifdef LZW_HAVE_AVX2
  if (active_level() == Level::avx2) return avx2::dirichlet_sum(x, w_re, w_im, sigma, t);
#endif
  return scalar::dirichlet_sum(x, w_re, w_im, sigma, t);
}

std::complex<double> dirichlet_sum(std::span<const double> x, double sigma, double t) {
#ifdef LZW_HAVE_AVX2
  if (active_level() == Level::avx2) return avx2::dirichlet_sum(x, sigma, t);
#endif
  return scalar::dirichlet_sum(x, sigma, t);
}

}  // namespace lzw::simd
