#include "lzw/lfunc.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <string>

#include "lzw/compensated.hpp"
#include "lzw/error.hpp"
#include "lzw/kernels.hpp"
#include "tables.hpp"

namespace lzw {

namespace {

using cplx = std::complex<double>;

constexpr double kMaxHeight = 1e4;

cplx character_sum(const DirichletCharacter& chi, std::size_t n, double sigma, double t) {
  if (n == 0) return 0.0;
  const auto logs = detail::log_table(n);
  const auto w = detail::character_weights(chi, n);
  return simd::dirichlet_sum(std::span<const double>(logs->data(), n), std::span<const double>(w->re.data(), n),
                             std::span<const double>(w->im.data(), n), sigma, t);
}

}  // namespace

const char* method_name(Method m) noexcept { return m == Method::afe ? "afe" : "oracle"; }

AfeWindows afe_windows(double t, std::int64_t q, double delta) noexcept {
  const double root = std::sqrt(static_cast<double>(q) * t / (2.0 * std::numbers::pi));
  return {delta * root, root / delta};
}

double afe_bound(StripPoint s, std::int64_t q, double delta) noexcept {
  const auto [x, y] = afe_windows(s.t, q, delta);
  const double qd = static_cast<double>(q);
  return kAfeConstant * std::sqrt(qd) *
         (std::pow(y, -s.sigma) + std::pow(x, s.sigma - 1.0) * std::pow(qd * s.t, 0.5 - s.sigma)) *
         std::log(2.0 * s.t);
}

LValue l_afe(StripPoint s, const DirichletCharacter& chi, double delta) {
  if (!(s.sigma > 0.0 && s.sigma < 1.0) || !(s.t >= 10.0)) {
    throw Error(Errc::out_of_strip, "approximate functional equation needs 0 < sigma < 1 and t >= 10, got sigma = " +
                                        std::to_string(s.sigma) + ", t = " + std::to_string(s.t));
  }
  if (chi.is_principal()) throw Error(Errc::principal_character, "L(s, chi) needs a non-principal character");
  if (!(delta >= 1.0)) throw Error(Errc::invalid_argument, "delta must be at least 1");
  const auto [x, y] = afe_windows(s.t, chi.modulus(), delta);
  const cplx first = character_sum(chi, static_cast<std::size_t>(std::floor(x)), s.sigma, s.t);
  const cplx second = character_sum(chi.conj(), static_cast<std::size_t>(std::floor(y)), 1.0 - s.sigma, -s.t);
  return {first + x_factor(s, chi) * second, afe_bound(s, chi.modulus(), delta), Method::afe};
}

LValue l_oracle(std::complex<double> s, const DirichletCharacter& chi) {
  if (std::fabs(s.imag()) > kMaxHeight) {
    throw Error(Errc::height_exceeded, "oracle limited to |Im s| <= 1e4, got " + std::to_string(s.imag()));
  }
  if (chi.is_principal()) throw Error(Errc::principal_character, "L(s, chi) needs a non-principal character");
  const std::int64_t q = chi.modulus();
  const bool at_one = s == cplx(1.0, 0.0);
  CompensatedComplexSum sum;
  double bound = 0.0;
  for (std::int64_t a = 1; a < q; ++a) {
    const Certified h = at_one ? hurwitz_zeta_regularized(a, q) : hurwitz_zeta(s, a, q);
    sum.add(chi(a) * h.value);
    bound += h.bound;
  }
  const cplx scale = std::exp(-s * std::log(static_cast<double>(q)));
  const cplx value = scale * sum.value();
  return {value, std::abs(scale) * bound + 1e-15 * std::abs(value), Method::oracle};
}

}  // namespace lzw
