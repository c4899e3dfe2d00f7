#include "lzw/meanvalues.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <span>

#include "lzw/compensated.hpp"
#include "lzw/error.hpp"
#include "lzw/kernels.hpp"
#include "lzw/parallel.hpp"
#include "lzw/specfun.hpp"
#include "tables.hpp"

namespace lzw {

namespace {

using cplx = std::complex<double>;

constexpr double kEps = 0x1p-52;
// Periodic Hurwitz tails are used while the period stays this small.
constexpr std::uint64_t kMaxTailPeriod = 1'000'000;

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<char> composite(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t m = p * p; m <= n; m += p) composite[static_cast<std::size_t>(m)] = 1;
  }
  return out;
}

// psi = chi_a conj(chi_b) on residues modulo q_a q_b.
class ProductCharacter {
 public:
  ProductCharacter(const DirichletCharacter& a, const DirichletCharacter& b)
      : a_(a), b_(b), modulus_(a.modulus() * b.modulus()), values_(static_cast<std::size_t>(modulus_)) {
    const std::int64_t oa = a.group_order(), ob = b.group_order();
    for (std::int64_t r = 0; r < modulus_; ++r) {
      const auto ea = a.exponent(r), eb = b.exponent(r);
      if (ea && eb) values_[static_cast<std::size_t>(r)] = unit_root(*ea * ob - *eb * oa, oa * ob);
    }
  }

  std::int64_t modulus() const noexcept { return modulus_; }
  cplx operator()(std::uint64_t n) const noexcept {
    return values_[static_cast<std::size_t>(n % static_cast<std::uint64_t>(modulus_))];
  }

 private:
  DirichletCharacter a_;
  DirichletCharacter b_;
  std::int64_t modulus_;
  std::vector<cplx> values_;
};

// Coefficient a_n of sum d_n conj chi_b(n) n^{-w} (d built from chi_a, chi_b).
// Multiplicative: -1 at primes p <= P other than q_b, 0 at their squares and
// at multiples of q_b, psi(p)^k at powers of larger primes.
cplx constant_coefficient(std::uint64_t n, const std::vector<std::int64_t>& primes, std::int64_t q_b,
                          const ProductCharacter& psi) {
  int sign = 1;
  for (const std::int64_t p64 : primes) {
    const auto p = static_cast<std::uint64_t>(p64);
    if (n % p != 0) continue;
    if (p64 == q_b) return 0.0;
    n /= p;
    if (n % p == 0) return 0.0;
    sign = -sign;
  }
  return static_cast<double>(sign) * psi(n);
}

// L(w, psi) = M^{-w} sum_a psi(a) zeta(w, a/M).
Certified l_product(double w, const ProductCharacter& psi) {
  const std::int64_t m = psi.modulus();
  CompensatedComplexSum sum;
  double bound = 0.0;
  for (std::int64_t a = 1; a < m; ++a) {
    const cplx v = psi(static_cast<std::uint64_t>(a));
    if (v == cplx(0.0, 0.0)) continue;
    const Certified h = hurwitz_zeta(cplx(w, 0.0), a, m);
    sum.add(v * h.value);
    bound += h.bound;
  }
  const double scale = std::pow(static_cast<double>(m), -w);
  return {scale * sum.value(), scale * bound};
}

DualEvaluation limit_constant(const BPolynomial& b, double sigma, const SeriesOptions& opt, bool for_d) {
  if (!(sigma > 0.5 && sigma < 1.0)) {
    throw Error(Errc::out_of_strip, "limit constants need 1/2 < sigma < 1, got " + std::to_string(sigma));
  }
  if (opt.N < 1 || opt.Q < static_cast<std::uint64_t>(b.cutoff())) {
    throw Error(Errc::invalid_argument, "series truncation N must be positive and Q at least P");
  }
  const DirichletCharacter& chi_a = for_d ? b.chi1() : b.chi2();
  const DirichletCharacter& chi_b = for_d ? b.chi2() : b.chi1();
  const std::int64_t q_b = chi_b.modulus();
  const ProductCharacter psi(chi_a, chi_b);
  const double w = 2.0 * sigma;
  const auto& primes = b.primes();

  // Dirichlet series: head up to N, exact tail from the period R of a_n.
  const std::size_t n = static_cast<std::size_t>(opt.N);
  std::vector<double> re(n), im(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx a = constant_coefficient(k + 1, primes, q_b, psi);
    re[k] = a.real();
    im[k] = a.imag();
  }
  const auto logs = detail::log_table(n);
  const cplx head = simd::dirichlet_sum(std::span<const double>(logs->data(), n), re, im, w, 0.0);
  const double head_mass = 1.0 + (std::pow(static_cast<double>(n), 1.0 - w) - 1.0) / (1.0 - w);

  cplx tail = 0.0;
  double tail_bound = 0.0;
  const std::uint64_t R = b.support_bound();
  if (R <= kMaxTailPeriod) {
    CompensatedComplexSum sum;
    double hb = 0.0;
    for (std::uint64_t r = 1; r <= R; ++r) {
      const cplx a = constant_coefficient(opt.N + r, primes, q_b, psi);
      if (a == cplx(0.0, 0.0)) continue;
      const Certified h = hurwitz_zeta(cplx(w, 0.0), static_cast<std::int64_t>(opt.N + r), static_cast<std::int64_t>(R));
      sum.add(a * h.value);
      hb += h.bound;
    }
    const double scale = std::pow(static_cast<double>(R), -w);
    tail = scale * sum.value();
    tail_bound = scale * hb;
  } else {
    // |a_n| <= 1: sum_{n > N} n^{-w} <= N^{1-w}/(w-1).
    tail_bound = std::pow(static_cast<double>(opt.N), 1.0 - w) / (w - 1.0);
  }

  DualEvaluation out{};
  out.series = head + tail;
  out.series_bound = tail_bound + 16.0 * kEps * (head_mass + std::abs(tail));

  // Euler product closed through L(w, psi).
  cplx local = 1.0;
  for (const std::int64_t p : primes) {
    const double pw = std::pow(static_cast<double>(p), -w);
    if (p != q_b) local *= 1.0 - pw;
    local *= 1.0 - psi(static_cast<std::uint64_t>(p)) * pw;
  }
  const Certified l = l_product(w, psi);
  out.product = local * l.value;
  out.product_bound = std::abs(local) * l.bound + 16.0 * kEps * std::abs(out.product);

  // Plain truncated Euler product.
  cplx euler = 1.0;
  for (const std::int64_t p : primes) {
    if (p != q_b) euler *= 1.0 - std::pow(static_cast<double>(p), -w);
  }
  const auto big_primes = primes_up_to(static_cast<std::int64_t>(opt.Q));
  for (const std::int64_t p : big_primes) {
    if (p <= b.cutoff()) continue;
    euler /= 1.0 - psi(static_cast<std::uint64_t>(p)) * std::pow(static_cast<double>(p), -w);
  }
  const double tau = std::pow(static_cast<double>(opt.Q), 1.0 - w) / (w - 1.0);
  out.euler = euler;
  out.euler_bound = std::abs(euler) * std::expm1(1.01 * tau) + 1e-13 * std::abs(euler);

  const char* name = for_d ? "D" : "E";
  if (std::abs(out.series - out.product) > out.series_bound + out.product_bound) {
    throw Error(Errc::series_product_disagreement,
                std::string(name) + ": Dirichlet series and Euler product differ by " +
                    std::to_string(std::abs(out.series - out.product)));
  }
  if (std::abs(out.euler - out.product) > out.euler_bound + out.product_bound) {
    throw Error(Errc::series_product_disagreement,
                std::string(name) + ": truncated Euler product is outside its tail bound");
  }
  if (out.series_bound <= out.product_bound) {
    out.value = out.series;
    out.bound = out.series_bound;
  } else {
    out.value = out.product;
    out.bound = out.product_bound;
  }
  return out;
}

}  // namespace

BPolynomial::BPolynomial(std::int64_t P, const DirichletCharacter& chi1, const DirichletCharacter& chi2)
    : P_(P), chi1_(chi1), chi2_(chi2) {
  if (chi1.is_principal() || chi2.is_principal()) {
    throw Error(Errc::principal_character, "B(s, P) needs non-principal characters");
  }
  if (chi1.modulus() == chi2.modulus()) {
    throw Error(Errc::invalid_argument, "the two characters need distinct prime moduli");
  }
  if (P > kMaxCutoff) {
    throw Error(Errc::cutoff_too_large, "P = " + std::to_string(P) + " exceeds " + std::to_string(kMaxCutoff) +
                                            " ((prod p)^2 would overflow 64 bits)");
  }
  if (P < std::max(chi1.modulus(), chi2.modulus())) {
    throw Error(Errc::cutoff_too_small, "P = " + std::to_string(P) + " must be at least max(q, l) = " +
                                            std::to_string(std::max(chi1.modulus(), chi2.modulus())));
  }
  if (!is_prime(P)) throw Error(Errc::invalid_argument, "P = " + std::to_string(P) + " is not prime");
  primes_ = primes_up_to(P);
  order_ = static_cast<int>(std::lcm(chi1.group_order(), chi2.group_order()));
  std::uint64_t radical = 1;
  for (const auto p : primes_) radical *= static_cast<std::uint64_t>(p);
  R_ = radical * radical;

  coeffs_.emplace(1, RootSum::integer(order_, 1));
  for (const auto p64 : primes_) {
    const auto p = static_cast<std::uint64_t>(p64);
    const RootSum a1 = character_value(chi1_, p);
    const RootSum a2 = character_value(chi2_, p);
    const std::array<RootSum, 3> local = {RootSum::integer(order_, 1), -(a1 + a2), a1 * a2};
    std::map<std::uint64_t, RootSum> next;
    for (const auto& [n, c] : coeffs_) {
      std::uint64_t m = n;
      for (int e = 0; e < 3; ++e, m *= p) {
        if (local[static_cast<std::size_t>(e)].is_zero()) continue;
        RootSum v = c * local[static_cast<std::size_t>(e)];
        if (!v.is_zero()) next.emplace(m, std::move(v));
      }
    }
    coeffs_ = std::move(next);
  }
}

RootSum BPolynomial::exact(std::uint64_t n) const {
  const auto it = coeffs_.find(n);
  return it == coeffs_.end() ? RootSum(order_) : it->second;
}

RootSum BPolynomial::character_value(const DirichletCharacter& chi, std::uint64_t n) const {
  const auto e = chi.exponent(static_cast<std::int64_t>(n % static_cast<std::uint64_t>(chi.modulus())));
  if (!e) return RootSum(order_);
  return RootSum::root(order_, *e * (order_ / chi.group_order()));
}

std::complex<double> BPolynomial::evaluate(std::complex<double> s) const {
  cplx v = 1.0;
  for (const auto p : primes_) {
    const cplx ps = std::exp(-s * std::log(static_cast<double>(p)));
    v *= (1.0 - chi1_(p) * ps) * (1.0 - chi2_(p) * ps);
  }
  return v;
}

std::int64_t default_cutoff(const DirichletCharacter& chi1, const DirichletCharacter& chi2) noexcept {
  return std::max(chi1.modulus(), chi2.modulus());
}

CoefficientSeries::CoefficientSeries(std::shared_ptr<const BPolynomial> b, SeriesKind kind, double t)
    : b_(std::move(b)), kind_(kind), m_limit_(std::numeric_limits<double>::infinity()) {
  if (kind == SeriesKind::d_prime) {
    if (!(t > 0.0)) throw Error(Errc::invalid_argument, "d'_n(t) needs t > 0");
    const double ql = static_cast<double>(b_->chi1().modulus() * b_->chi2().modulus());
    m_limit_ = std::sqrt(ql * t / (2.0 * std::numbers::pi));
  }
}

RootSum CoefficientSeries::convolution(std::uint64_t n) const {
  const DirichletCharacter& chi = kind_ == SeriesKind::e ? b_->chi2() : b_->chi1();
  const auto& primes = b_->primes();
  RootSum total(b_->order());
  // Divisors k of n inside the support: exponents 0..2 of each p <= P.
  auto walk = [&](auto&& self, std::size_t i, std::uint64_t k) -> void {
    if (i == primes.size()) {
      const std::uint64_t m = n / k;
      if (static_cast<double>(m) > m_limit_) return;
      const RootSum c = b_->exact(k);
      const RootSum v = b_->character_value(chi, m);
      total += c * v;
      return;
    }
    const auto p = static_cast<std::uint64_t>(primes[i]);
    std::uint64_t pk = 1;
    for (int e = 0; e <= 2; ++e) {
      self(self, i + 1, k * pk);
      if ((n / k) % (pk * p) != 0) break;
      pk *= p;
    }
  };
  walk(walk, 0, 1);
  return total;
}

RootSum CoefficientSeries::closed_form(std::uint64_t n) const {
  if (kind_ == SeriesKind::d_prime) {
    throw Error(Errc::invalid_argument, "no closed form for d'_n(t)");
  }
  const DirichletCharacter& main = kind_ == SeriesKind::d ? b_->chi1() : b_->chi2();
  const DirichletCharacter& other = kind_ == SeriesKind::d ? b_->chi2() : b_->chi1();
  RootSum value = RootSum::integer(b_->order(), 1);
  std::uint64_t rest = n;
  for (const auto p64 : b_->primes()) {
    const auto p = static_cast<std::uint64_t>(p64);
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) return RootSum(b_->order());
    value = -(value * b_->character_value(other, p));
  }
  return value * b_->character_value(main, rest);
}

RootSum CoefficientSeries::exact(std::uint64_t n) const {
  if (n == 0) throw Error(Errc::invalid_argument, "coefficients are indexed from 1");
  {
    std::lock_guard lock(mutex_);
    if (const auto it = cache_.find(n); it != cache_.end()) return it->second;
  }
  RootSum v = convolution(n);
  if (kind_ != SeriesKind::d_prime && !(v == closed_form(n))) {
    throw Error(Errc::closed_form_mismatch, "convolution and closed form differ at n = " + std::to_string(n));
  }
  std::lock_guard lock(mutex_);
  return cache_.emplace(n, std::move(v)).first->second;
}

DualEvaluation series_D(const BPolynomial& b, double sigma, const SeriesOptions& opt) {
  return limit_constant(b, sigma, opt, true);
}

DualEvaluation series_E(const BPolynomial& b, double sigma, const SeriesOptions& opt) {
  return limit_constant(b, sigma, opt, false);
}

A1Sample a1_sample(double gamma, double sigma, const BPolynomial& b, Method method, const A1Windows& windows) {
  if (!(sigma > 0.5 && sigma < 1.0) || !(gamma > 10.0)) {
    throw Error(Errc::out_of_strip, "A(gamma) needs 1/2 < sigma < 1 and gamma > 10");
  }
  const StripPoint s{sigma, gamma};
  A1Sample out{};
  if (method == Method::oracle) {
    out.l1 = l_oracle(s.s(), b.chi1());
    out.l2 = l_oracle(s.s(), b.chi2());
  } else {
    const double q = static_cast<double>(b.chi1().modulus());
    const double l = static_cast<double>(b.chi2().modulus());
    const double d1 = windows.delta1 > 0.0 ? windows.delta1 : std::sqrt(l);
    const double d2 = windows.delta2 > 0.0 ? windows.delta2 : static_cast<double>(b.support_bound()) * std::sqrt(q);
    out.l1 = l_afe(s, b.chi1(), d1);
    out.l2 = l_afe(s, b.chi2(), d2);
  }
  const double inner = (out.l1.value * std::conj(out.l2.value)).imag();
  out.value = b.evaluate(s.s()) * cplx(0.0, 2.0 * inner);
  return out;
}

std::complex<double> a1_gamma(double gamma, double sigma, const BPolynomial& b, Method method,
                              const A1Windows& windows) {
  return a1_sample(gamma, sigma, b, method, windows).value;
}

namespace {

void audit(const LValue& fast, const LValue& exact, double gamma, const char* which) {
  if (std::abs(fast.value - exact.value) > fast.bound + exact.bound) {
    throw Error(Errc::bound_violation, std::string("audit failed for ") + which + " at gamma = " +
                                           std::to_string(gamma) + ": |afe - oracle| = " +
                                           std::to_string(std::abs(fast.value - exact.value)) + " exceeds bound " +
                                           std::to_string(fast.bound + exact.bound));
  }
}

}  // namespace

std::vector<MeanValueReport> thm1_reports(const ZeroTable& zeros, const std::vector<double>& heights,
                                          const BPolynomial& b, const Thm1Options& opt) {
  if (heights.empty()) return {};
  std::vector<double> sorted = heights;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = count(zeros, sorted.back());
  for (const double T : sorted) count(zeros, T);

  const auto D = series_D(b, opt.sigma, opt.series);
  const auto E = series_E(b, opt.sigma, opt.series);
  const cplx C = D.value - E.value;

  const std::size_t stride =
      opt.audit_rate > 0.0 ? std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(1.0 / opt.audit_rate))) : 0;
  std::vector<cplx> values(n);
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const double g = zeros.ordinates[i];
      const A1Sample a = a1_sample(g, opt.sigma, b, opt.method, opt.windows);
      values[i] = a.value;
      if (opt.method == Method::afe && stride != 0 && i % stride == 0) {
        audit(a.l1, l_oracle(cplx(opt.sigma, g), b.chi1()), g, "L(s, chi1)");
        audit(a.l2, l_oracle(cplx(opt.sigma, g), b.chi2()), g, "L(s, chi2)");
      }
    }
  }, opt.threads);

  std::vector<MeanValueReport> out;
  CompensatedComplexSum sum;
  CompensatedSum sum_sq;
  std::size_t i = 0;
  for (const double T : sorted) {
    const std::size_t upto = count(zeros, T);
    for (; i < upto; ++i) {
      sum.add(values[i]);
      sum_sq.add(std::norm(values[i]));
    }
    MeanValueReport r;
    r.T = T;
    r.N = upto;
    r.sumA = sum.value();
    r.sumAbsA2 = sum_sq.value();
    r.predictedC = C;
    r.sigma = opt.sigma;
    if (!(r.sumAbsA2 > 0.0)) {
      throw Error(Errc::division_by_zero, "sum of |A(gamma)|^2 vanishes up to T = " + std::to_string(T));
    }
    r.lowerBoundCount = std::norm(r.sumA) / r.sumAbsA2;
    out.push_back(r);
  }
  return out;
}

MeanValueReport thm1_report(const ZeroTable& zeros, double T, const BPolynomial& b, const Thm1Options& opt) {
  return thm1_reports(zeros, {T}, b, opt).front();
}

}  // namespace lzw
