#include "lzw/criticalline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lzw/compensated.hpp"
#include "lzw/error.hpp"
#include "lzw/parallel.hpp"

namespace lzw {

namespace {

using cplx = std::complex<double>;

constexpr std::int64_t kSearchLimit = 1'000'000;

void audit(const LValue& fast, const LValue& exact, double gamma, const char* which) {
  if (std::abs(fast.value - exact.value) > fast.bound + exact.bound) {
    throw Error(Errc::bound_violation, std::string("audit failed for ") + which + " at gamma = " +
                                           std::to_string(gamma));
  }
}

}  // namespace

std::int64_t choose_p(const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  const std::int64_t q = chi1.modulus();
  const std::int64_t l = chi2.modulus();
  if (q == l) throw Error(Errc::invalid_argument, "choose_p needs distinct moduli");
  if (chi1.is_principal() || chi2.is_principal()) {
    throw Error(Errc::invalid_argument, "choose_p needs non-principal characters");
  }
  // Walk the progression 1 mod q; chi2 restricted to it is non-constant, so a
  // suitable prime exists by Dirichlet's theorem and the CRT.
  for (std::int64_t p = q + 1; p <= kSearchLimit; p += q) {
    if (p == l || !is_prime(p)) continue;
    const auto e = chi2.exponent(p);
    if (e && *e != 0) return p;
  }
  throw Error(Errc::search_exhausted, "no suitable prime below 10^6");
}

std::complex<double> c_constant(const DirichletCharacter& chi, std::int64_t p) {
  return gauss_sum(1, chi.conj()) * gauss_sum(-p, chi) / static_cast<double>(chi.modulus());
}

CriticalLineConfig CriticalLineConfig::make(const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                                            std::int64_t p) {
  if (p == 0) p = choose_p(chi1, chi2);
  if (!is_prime(p) || p % chi1.modulus() == 0 || p % chi2.modulus() == 0) {
    throw Error(Errc::invalid_argument, "p = " + std::to_string(p) + " must be a prime coprime to both moduli");
  }
  return {chi1, chi2, p, c_constant(chi1, p), c_constant(chi2, p)};
}

A2Sample a2_sample(double gamma, const CriticalLineConfig& cfg, Method method, double delta) {
  if (!(gamma > 10.0)) throw Error(Errc::out_of_strip, "A(gamma) needs gamma > 10");
  const StripPoint rho{0.5, gamma};
  A2Sample out{};
  if (method == Method::oracle) {
    out.l1 = l_oracle(rho.s(), cfg.chi1);
    out.l2 = l_oracle(rho.s(), cfg.chi2);
  } else {
    out.l1 = l_afe(rho, cfg.chi1, delta);
    out.l2 = l_afe(rho, cfg.chi2, delta);
  }
  const double lp = std::log(static_cast<double>(cfg.p));
  const cplx b = std::sqrt(static_cast<double>(cfg.p)) * cplx(std::cos(gamma * lp), std::sin(gamma * lp));
  out.part1 = b * out.l1.value;
  out.part2 = b * out.l2.value;
  out.value = b * (out.l1.value - out.l2.value);
  return out;
}

std::complex<double> a2_gamma(double gamma, const CriticalLineConfig& cfg, Method method, double delta) {
  return a2_sample(gamma, cfg, method, delta).value;
}

double CriticalLineReport::second_moment_ratio() const noexcept {
  const double l = std::log(T);
  return sumAbsA2 / (T * l * l);
}

double critical_main_scale(double T) noexcept {
  const double u = T / (2.0 * std::numbers::pi);
  return u * std::log(u);
}

std::vector<CriticalLineReport> thm2_reports(const ZeroTable& zeros, const std::vector<double>& heights,
                                             const CriticalLineConfig& cfg, const Thm2Options& opt) {
  if (heights.empty()) return {};
  std::vector<double> sorted = heights;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = count(zeros, sorted.back());
  for (const double T : sorted) count(zeros, T);

  const std::size_t stride =
      opt.audit_rate > 0.0 ? std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(1.0 / opt.audit_rate))) : 0;
  std::vector<cplx> part1(n), part2(n), value(n);
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const double g = zeros.ordinates[i];
      const A2Sample a = a2_sample(g, cfg, opt.method, opt.delta);
      part1[i] = a.part1;
      part2[i] = a.part2;
      value[i] = a.value;
      if (opt.method == Method::afe && stride != 0 && i % stride == 0) {
        audit(a.l1, l_oracle(cplx(0.5, g), cfg.chi1), g, "L(rho, chi1)");
        audit(a.l2, l_oracle(cplx(0.5, g), cfg.chi2), g, "L(rho, chi2)");
      }
    }
  }, opt.threads);

  std::vector<CriticalLineReport> out;
  CompensatedComplexSum s, s1, s2;
  CompensatedSum sq;
  std::size_t i = 0;
  for (const double T : sorted) {
    const std::size_t upto = count(zeros, T);
    for (; i < upto; ++i) {
      s.add(value[i]);
      s1.add(part1[i]);
      s2.add(part2[i]);
      sq.add(std::norm(value[i]));
    }
    CriticalLineReport r;
    r.T = T;
    r.N = upto;
    r.sumA = s.value();
    r.sum1 = s1.value();
    r.sum2 = s2.value();
    const double scale = critical_main_scale(T);
    r.M1 = std::conj(cfg.C1) * scale;
    r.M2 = std::conj(cfg.C2) * scale;
    r.M = r.M1 - r.M2;
    r.sumAbsA2 = sq.value();
    if (!(r.sumAbsA2 > 0.0)) {
      throw Error(Errc::division_by_zero, "sum of |A(gamma)|^2 vanishes up to T = " + std::to_string(T));
    }
    r.lowerBoundCount = std::norm(r.sumA) / r.sumAbsA2;
    out.push_back(r);
  }
  return out;
}

CriticalLineReport thm2_report(const ZeroTable& zeros, double T, const CriticalLineConfig& cfg,
                               const Thm2Options& opt) {
  return thm2_reports(zeros, {T}, cfg, opt).front();
}

}  // namespace lzw
