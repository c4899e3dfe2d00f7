#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "lzw/characters.hpp"
#include "lzw/cyclotomic.hpp"
#include "lzw/lfunc.hpp"
#include "lzw/zeros.hpp"

namespace lzw {

/// Largest cutoff whose support bound (prod p)^2 fits in 64 bits.
inline constexpr std::int64_t kMaxCutoff = 23;

/// B(s, P) = prod_{p <= P} (1 - chi1(p) p^{-s})(1 - chi2(p) p^{-s}) expanded
/// into an exact coefficient map n -> c_n over Z[zeta_L], L the lcm of the
/// two value-group orders.
class BPolynomial {
 public:
  /// Errors: invalid_argument (P not prime, equal moduli, principal
  /// characters), cutoff_too_small (P < max(q, l)), cutoff_too_large.
  BPolynomial(std::int64_t P, const DirichletCharacter& chi1, const DirichletCharacter& chi2);

  std::int64_t cutoff() const noexcept { return P_; }
  const DirichletCharacter& chi1() const noexcept { return chi1_; }
  const DirichletCharacter& chi2() const noexcept { return chi2_; }
  const std::vector<std::int64_t>& primes() const noexcept { return primes_; }
  int order() const noexcept { return order_; }
  /// R = (prod_{p <= P} p)^2.
  std::uint64_t support_bound() const noexcept { return R_; }

  const std::map<std::uint64_t, RootSum>& coefficients() const noexcept { return coeffs_; }
  /// c_n exactly (zero outside the support).
  RootSum exact(std::uint64_t n) const;
  std::complex<double> c(std::uint64_t n) const { return exact(n).value(); }

  /// chi(n) as an element of Z[zeta_L]; chi must be chi1 or chi2 (or a conjugate).
  RootSum character_value(const DirichletCharacter& chi, std::uint64_t n) const;

  /// B(s, P) from the product form.
  std::complex<double> evaluate(std::complex<double> s) const;

 private:
  std::int64_t P_;
  DirichletCharacter chi1_;
  DirichletCharacter chi2_;
  std::vector<std::int64_t> primes_;
  int order_;
  std::uint64_t R_;
  std::map<std::uint64_t, RootSum> coeffs_;
};

inline BPolynomial build_b_polynomial(std::int64_t P, const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  return {P, chi1, chi2};
}

/// Errors as BPolynomial; auto cutoff is max(q, l).
std::int64_t default_cutoff(const DirichletCharacter& chi1, const DirichletCharacter& chi2) noexcept;

enum class SeriesKind { d, e, d_prime };

/// Dirichlet coefficients of B(s,P)L(s,chi1) (kind d), B(s,P)L(s,chi2)
/// (kind e) or the truncated convolution d'_n(t) with m <= sqrt(q l t/2pi).
class CoefficientSeries {
 public:
  CoefficientSeries(std::shared_ptr<const BPolynomial> b, SeriesKind kind, double t = 0.0);

  SeriesKind kind() const noexcept { return kind_; }

  /// sum over n = k m of c_k chi(m) (restricted to small m for d').
  RootSum convolution(std::uint64_t n) const;

  /// Multiplicative closed form; kinds d and e only.
  RootSum closed_form(std::uint64_t n) const;

  /// Convolution value, checked against the closed form for kinds d and e.
  /// Errors: closed_form_mismatch.
  RootSum exact(std::uint64_t n) const;

  std::complex<double> coeff(std::uint64_t n) const { return exact(n).value(); }

 private:
  std::shared_ptr<const BPolynomial> b_;
  SeriesKind kind_;
  double m_limit_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, RootSum> cache_;
};

/// Truncation lengths for the limit constants.
struct SeriesOptions {
  std::uint64_t N = 1'000'000;  // Dirichlet series terms summed directly
  std::uint64_t Q = 100'000;    // Euler product cutoff
};

/// A constant evaluated three ways: the Dirichlet series (direct head plus a
/// periodic Hurwitz tail), the Euler product closed through L(2 sigma, psi),
/// and the plainly truncated Euler product. `value` is whichever of the first
/// two carries the smaller bound.
struct DualEvaluation {
  std::complex<double> value;
  double bound;
  std::complex<double> series;
  double series_bound;
  std::complex<double> product;
  double product_bound;
  std::complex<double> euler;
  double euler_bound;
};

/// D = sum d_n conj chi2(n) n^{-2 sigma}. Errors: out_of_strip unless
/// 1/2 < sigma < 1; series_product_disagreement.
DualEvaluation series_D(const BPolynomial& b, double sigma, const SeriesOptions& opt = {});

/// E = sum e_n conj chi1(n) n^{-2 sigma}.
DualEvaluation series_E(const BPolynomial& b, double sigma, const SeriesOptions& opt = {});

/// L-values feeding one A(gamma).
struct A1Sample {
  std::complex<double> value;
  LValue l1;
  LValue l2;
};

/// AFE window parameters; 0 selects the defaults sqrt(l) for chi1 and
/// R sqrt(q) for chi2, for which B(s,P) times the first window of L(s,chi1)
/// is the truncated series with coefficients d'_n.
struct A1Windows {
  double delta1 = 0.0;
  double delta2 = 0.0;
};

/// A(gamma) = B(s,P) (L1 conj L2 - conj L1 L2) = B(s,P) 2i Im(L1 conj L2), s = sigma + i gamma.
/// Errors: out_of_strip unless 1/2 < sigma < 1 and gamma > 10; those of lfunc.
A1Sample a1_sample(double gamma, double sigma, const BPolynomial& b, Method method = Method::afe,
                   const A1Windows& windows = {});
std::complex<double> a1_gamma(double gamma, double sigma, const BPolynomial& b, Method method = Method::afe,
                              const A1Windows& windows = {});

struct MeanValueReport {
  double T = 0.0;
  std::size_t N = 0;
  std::complex<double> sumA;
  double sumAbsA2 = 0.0;
  std::complex<double> predictedC;
  double lowerBoundCount = 0.0;
  double sigma = 0.0;

  double lower_bound_ratio() const noexcept { return N == 0 ? 0.0 : lowerBoundCount / static_cast<double>(N); }
};

struct Thm1Options {
  double sigma = 0.75;
  Method method = Method::afe;
  A1Windows windows;
  /// Fraction of ordinates re-evaluated with the oracle (every round(1/rate)-th).
  double audit_rate = 0.01;
  SeriesOptions series;
  unsigned threads = 0;
};

/// One report per height in `heights` from a single pass over the zeros.
/// Errors: range_exceeded, division_by_zero (all sampled A vanish),
/// bound_violation (audit), series_product_disagreement.
std::vector<MeanValueReport> thm1_reports(const ZeroTable& zeros, const std::vector<double>& heights,
                                          const BPolynomial& b, const Thm1Options& opt = {});

MeanValueReport thm1_report(const ZeroTable& zeros, double T, const BPolynomial& b, const Thm1Options& opt = {});

}  // namespace lzw
