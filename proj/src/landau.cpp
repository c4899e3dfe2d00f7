#include "lzw/landau.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <span>
#include <vector>

#include "lzw/compensated.hpp"
#include "lzw/error.hpp"
#include "lzw/kernels.hpp"
#include "lzw/parallel.hpp"

namespace lzw {

namespace {

constexpr std::size_t kChunk = 4096;

std::uint64_t parse_u64(std::string_view s, const std::string& text) {
  std::uint64_t v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size() || s.empty()) {
    throw Error(Errc::invalid_argument, "'" + text + "' is not a rational number n or n/m");
  }
  return v;
}

}  // namespace

RationalPoint::RationalPoint(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num <= den) {
    throw Error(Errc::invalid_argument, "x = " + std::to_string(num) + "/" + std::to_string(den) + " must exceed 1");
  }
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RationalPoint RationalPoint::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return {parse_u64(text, text), 1};
  const std::string_view view(text);
  return {parse_u64(view.substr(0, slash), text), parse_u64(view.substr(slash + 1), text)};
}

double RationalPoint::log() const noexcept {
  return std::log(static_cast<double>(num_)) - std::log(static_cast<double>(den_));
}

std::string RationalPoint::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::uint64_t prime_power_base(std::uint64_t n) noexcept {
  if (n < 2) return 0;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? p : 0;
}

double von_mangoldt(const RationalPoint& x) noexcept {
  if (!x.is_integer()) return 0.0;
  const std::uint64_t p = prime_power_base(x.num());
  return p == 0 ? 0.0 : std::log(static_cast<double>(p));
}

double nearest_pp_distance(const RationalPoint& x) {
  // Distances are |num - u den| / den for integers u; scan outwards from x
  // until a prime power is met on each side (Bertrand bounds the walk).
  const std::uint64_t n = x.num();
  const std::uint64_t m = x.den();
  const std::uint64_t below_start = x.is_integer() ? n / m - 1 : n / m;
  std::uint64_t best = UINT64_MAX;
  for (std::uint64_t u = below_start; u >= 2; --u) {
    if (prime_power_base(u) != 0) {
      best = n - u * m;
      break;
    }
  }
  for (std::uint64_t u = n / m + 1;; ++u) {
    if (prime_power_base(u) != 0) {
      best = std::min(best, u * m - n);
      break;
    }
  }
  return static_cast<double>(best) / static_cast<double>(m);
}

std::complex<double> landau_zero_sum(const RationalPoint& x, const ZeroTable& zeros, double T, int sign,
                                     unsigned threads) {
  const std::size_t n = count(zeros, T);
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  const double phase = -static_cast<double>(sign) * x.log();
  std::vector<std::complex<double>> partial(chunks);
  parallel_for(chunks, [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) {
      const std::size_t lo = c * kChunk;
      const std::size_t len = std::min(kChunk, n - lo);
      partial[c] = simd::dirichlet_sum(std::span<const double>(zeros.ordinates.data() + lo, len), 0.0, phase);
    }
  }, threads);
  CompensatedComplexSum total;
  for (const auto& p : partial) total.add(p);
  return std::sqrt(x.value()) * total.value();
}

double landau_main_term(const RationalPoint& x, double T) noexcept {
  return -T / (2.0 * std::numbers::pi) * von_mangoldt(x);
}

double landau_error_budget(const RationalPoint& x, double T) {
  const double v = x.value();
  const double lx = x.log();
  return v * std::log(2.0 * v * T) * std::log(std::log(3.0 * v)) + lx * std::min(T, v / nearest_pp_distance(x)) +
         std::log(2.0 * T) * std::min(T, 1.0 / lx);
}

}  // namespace lzw
