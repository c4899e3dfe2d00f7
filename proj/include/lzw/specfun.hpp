#pragma once

#include <complex>
#include <cstdint>

#include "lzw/characters.hpp"

namespace lzw {

/// s = sigma + i t.
struct StripPoint {
  double sigma;
  double t;

  std::complex<double> s() const noexcept { return {sigma, t}; }
};

/// A value together with an absolute error bound. `remainder` is the
/// truncation part of the bound; the rest is a rounding estimate.
struct Certified {
  std::complex<double> value;
  double bound;
  double remainder = 0.0;
};

/// Principal branch of log Gamma. Stirling's series after upward recurrence;
/// for Re z < 0 the recurrence itself is the continuation (a sum of principal
/// logarithms), so the branch matches the usual "loggamma" convention.
/// Errors: pole_at_non_positive_integer.
std::complex<double> log_gamma(std::complex<double> z);

/// X(s, chi) = eps(chi) (q/pi)^{1/2-s} Gamma((1-s+a)/2) / Gamma((s+a)/2), so that
/// L(s, chi) = X(s, chi) L(1-s, conj chi).
/// Errors: principal_character.
std::complex<double> x_factor(std::complex<double> s, const DirichletCharacter& chi);

/// Errors: out_of_strip unless 0 < sigma < 1; principal_character.
std::complex<double> x_factor(StripPoint p, const DirichletCharacter& chi);

/// Constant A in |X(sigma+it, chi)|^2 ~ A (q/pi)^{1-2 sigma} t^{1-2 sigma}.
/// Stirling gives |Gamma((1-s+a)/2)/Gamma((s+a)/2)| ~ (t/2)^{1/2-sigma}, hence
/// A = 2^{2 sigma - 1}.
double stirling_constant(double sigma) noexcept;

/// Riemann-Siegel theta. Asymptotic series for t >= 10, the exact log-Gamma
/// form below that. Errors: domain_too_small for t < 1.
double riemann_siegel_theta(double t);

/// Riemann zeta by Euler-Maclaurin. Errors: pole_at_one.
Certified zeta_em(std::complex<double> s);

/// Hurwitz zeta zeta(s, a) for rational a = num/den > 0, by Euler-Maclaurin
/// with a Backlund remainder bound. Errors: pole_at_one, invalid_argument.
Certified hurwitz_zeta(std::complex<double> s, std::int64_t num, std::int64_t den);

/// The constant term of zeta(s, a) at s = 1, lim (zeta(s, a) - 1/(s-1)) = -digamma(a).
/// Combinations whose poles cancel (sum of chi(a) zeta(s, a/q)) stay finite at s = 1.
Certified hurwitz_zeta_regularized(std::int64_t num, std::int64_t den);

/// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it) together with the size of the
/// imaginary part that the evaluation left behind.
struct HardyValue {
  double value;
  double residue;
};
HardyValue hardy_z_checked(double t);

/// Errors: domain_too_small for t < 10, accuracy_loss when the residue
/// exceeds 1e-6.
double hardy_z(double t);

}  // namespace lzw
