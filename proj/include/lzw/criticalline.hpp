#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lzw/characters.hpp"
#include "lzw/lfunc.hpp"
#include "lzw/zeros.hpp"

namespace lzw {

/// Smallest prime p = 1 (mod q) with chi2(p) != 1 and p not in {q, l}.
/// Errors: invalid_argument (equal moduli, principal characters),
/// search_exhausted past 10^6.
std::int64_t choose_p(const DirichletCharacter& chi1, const DirichletCharacter& chi2);

/// C_chi = G(1, conj chi) G(-p, chi) / q.
std::complex<double> c_constant(const DirichletCharacter& chi, std::int64_t p);

struct CriticalLineConfig {
  DirichletCharacter chi1;
  DirichletCharacter chi2;
  std::int64_t p;
  std::complex<double> C1;
  std::complex<double> C2;

  /// p = 0 selects choose_p. Errors: invalid_argument when p is not a prime
  /// coprime to both moduli; those of choose_p.
  static CriticalLineConfig make(const DirichletCharacter& chi1, const DirichletCharacter& chi2, std::int64_t p = 0);
};

/// Terms of A(gamma) = p^rho (L(rho, chi1) - L(rho, chi2)), rho = 1/2 + i gamma.
struct A2Sample {
  std::complex<double> value;
  std::complex<double> part1;  // p^rho L(rho, chi1)
  std::complex<double> part2;  // p^rho L(rho, chi2)
  LValue l1;
  LValue l2;
};

/// Errors: out_of_strip for gamma <= 10; those of lfunc.
A2Sample a2_sample(double gamma, const CriticalLineConfig& cfg, Method method = Method::afe, double delta = 1.0);
std::complex<double> a2_gamma(double gamma, const CriticalLineConfig& cfg, Method method = Method::afe,
                              double delta = 1.0);

struct CriticalLineReport {
  double T = 0.0;
  std::size_t N = 0;
  std::complex<double> sumA;
  std::complex<double> sum1;  // sum p^rho L(rho, chi1)
  std::complex<double> sum2;
  std::complex<double> M;     // (conj C1 - conj C2)(T/2pi) log(T/2pi)
  std::complex<double> M1;    // conj C1 (T/2pi) log(T/2pi)
  std::complex<double> M2;
  double sumAbsA2 = 0.0;
  double lowerBoundCount = 0.0;

  /// sumAbsA2 / (T log^2 T).
  double second_moment_ratio() const noexcept;
  double lower_bound_ratio() const noexcept { return T > 0.0 ? lowerBoundCount / T : 0.0; }
};

/// (T/2pi) log(T/2pi).
double critical_main_scale(double T) noexcept;

struct Thm2Options {
  Method method = Method::afe;
  double delta = 1.0;
  double audit_rate = 0.01;
  unsigned threads = 0;
};

/// One report per height from a single pass. Errors: range_exceeded,
/// division_by_zero, bound_violation (audit).
std::vector<CriticalLineReport> thm2_reports(const ZeroTable& zeros, const std::vector<double>& heights,
                                             const CriticalLineConfig& cfg, const Thm2Options& opt = {});

CriticalLineReport thm2_report(const ZeroTable& zeros, double T, const CriticalLineConfig& cfg,
                               const Thm2Options& opt = {});

}  // namespace lzw
