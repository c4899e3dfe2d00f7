#pragma once

#include <complex>
#include <cstdint>

#include "lzw/characters.hpp"
#include "lzw/specfun.hpp"

namespace lzw {

enum class Method { afe, oracle };

const char* method_name(Method m) noexcept;

/// L(s, chi) with an absolute error bound.
struct LValue {
  std::complex<double> value;
  double bound;
  Method method;
};

/// Implied constant used in the approximate functional equation bound.
inline constexpr double kAfeConstant = 10.0;

/// Window lengths x = delta sqrt(qt/2pi), y = sqrt(qt/2pi)/delta.
struct AfeWindows {
  double x;
  double y;
};
AfeWindows afe_windows(double t, std::int64_t q, double delta) noexcept;

/// kAfeConstant sqrt(q) (y^{-sigma} + x^{sigma-1} (qt)^{1/2-sigma}) log 2t.
double afe_bound(StripPoint s, std::int64_t q, double delta) noexcept;

/// sum_{n<=x} chi(n) n^{-s} + X(s, chi) sum_{n<=y} conj chi(n) n^{s-1}.
/// Errors: out_of_strip unless 0 < sigma < 1 and t >= 10; principal_character;
/// invalid_argument for delta < 1.
LValue l_afe(StripPoint s, const DirichletCharacter& chi, double delta = 1.0);

/// q^{-s} sum_a chi(a) zeta(s, a/q) from Euler-Maclaurin Hurwitz values;
/// s = 1 uses the regularised Hurwitz constants (the poles cancel).
/// Errors: height_exceeded for |Im s| > 1e4; principal_character.
LValue l_oracle(std::complex<double> s, const DirichletCharacter& chi);

}  // namespace lzw
