#include "lzw/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "lzw/error.hpp"
#include "lzw/kernels.hpp"
#include "tables.hpp"

namespace lzw {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 0x1p-52;

// B_{2k} / (2k (2k-1)), k = 1..16.
constexpr std::array<double, 16> kStirling = {
    8.33333333333333333e-2,  -2.77777777777777778e-3, 7.93650793650793651e-4,
    -5.95238095238095238e-4, 8.41750841750841751e-4,  -1.91752691752691753e-3,
    6.41025641025641026e-3,  -2.95506535947712418e-2, 1.79644372368830573e-1,
    -1.39243221690590112,    1.3402864044168392e+1,   -1.56848284626002017e+2,
    2.19310333333333333e+3,  -3.61087712537249894e+4, 6.91472268851313067e+5,
    -1.52382215394074162e+7,
};

// B_{2k} / (2k)!, k = 1..40.
constexpr std::array<double, 40> kBernoulliFact = {
    8.33333333333333333e-2,   -1.38888888888888889e-3,  3.30687830687830688e-5,
    -8.2671957671957672e-7,   2.0876756987868099e-8,    -5.28419013868749318e-10,
    1.33825365306846788e-11,  -3.38968029632258287e-13, 8.58606205627784456e-15,
    -2.17486869855806187e-16, 5.50900282836022952e-18,  -1.39544646858125233e-19,
    3.53470703962946747e-21,  -8.95351742703754685e-23, 2.26795245233768306e-24,
    -5.74479066887220245e-26, 1.4551724756148649e-27,   -3.68599494066531018e-29,
    9.33673425709504467e-31,  -2.36502241570062993e-32, 5.9906717624821343e-34,
    -1.51745488446829026e-35, 3.84375812545418823e-37,  -9.73635307264669104e-39,
    2.46624704420068096e-40,  -6.24707674182074369e-42, 1.58240302446449143e-43,
    -4.00827368594893597e-45, 1.01530758555695563e-46,  -2.57180415824187175e-48,
    6.51445603523381493e-50,  -1.65013099068965246e-51, 4.17983062853947589e-53,
    -1.05876346677029088e-54, 2.68187919126077067e-56,  -6.79327935110742121e-58,
    1.72075776166814049e-59,  -4.35873032934889384e-61, 1.10407929036846668e-62,
    -2.79666551337813451e-64,
};

// Theta expansion: theta(t) = t/2 log(t/2pi) - t/2 - pi/8 + sum c_k t^{1-2k},
// c_k = (1 - 2^{1-2k}) |B_{2k}| / (4k (2k-1)).
constexpr std::array<double, 8> kTheta = {
    2.08333333333333333e-2, 1.21527777777777778e-3, 3.84424603174603175e-4,
    2.9529389880952381e-4,  4.20053398569023569e-4, 9.58295312543359418e-4,
    3.20473695412660256e-3, 1.47748758901957593e-2,
};

constexpr double kStirlingRadius = 15.0;

cplx stirling(cplx w) {
  const double half_log_2pi = 0.91893853320467274178;
  cplx result = (w - 0.5) * std::log(w) - w + half_log_2pi;
  const cplx inv = 1.0 / w;
  const cplx inv2 = inv * inv;
  cplx power = inv;
  for (const double c : kStirling) {
    const cplx term = c * power;
    result += term;
    if (std::abs(term) < 1e-18 * std::abs(result)) break;
    power *= inv2;
  }
  return result;
}

bool is_non_positive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Integral bound for sum_{n<count} (n+a)^{-2 sigma}, used by the rounding estimate.
double square_mass(double a, double sigma, double count) {
  const double e = 1.0 - 2.0 * sigma;
  double integral;
  if (std::fabs(e) < 1e-12) {
    integral = std::log((count + a) / a);
  } else {
    integral = (std::pow(count + a, e) - std::pow(a, e)) / e;
  }
  return std::pow(a, -2.0 * sigma) + std::max(integral, 0.0);
}

Certified hurwitz_em(cplx s, std::int64_t num, std::int64_t den, bool regularized) {
  if (num <= 0 || den <= 0) {
    throw Error(Errc::invalid_argument, "Hurwitz parameter must be a positive rational");
  }
  const double sigma = s.real();
  const double t = s.imag();
  const double a = static_cast<double>(num) / static_cast<double>(den);
  const double abs_s = std::abs(s);
  const auto n_terms = static_cast<std::int64_t>(std::max(20.0, std::ceil(abs_s / kPi) + 10.0));

  // x_n = log(n + a) = log(den n + num) - log(den).
  const std::int64_t top = den * n_terms + num;
  const bool use_table = top <= (std::int64_t{1} << 23);
  std::shared_ptr<const std::vector<double>> logs;
  if (use_table) logs = detail::log_table(static_cast<std::size_t>(top));
  auto log_int = [&](std::int64_t m) {
    return use_table ? (*logs)[static_cast<std::size_t>(m - 1)] : std::log(static_cast<double>(m));
  };
  const double log_den = log_int(den);

  cplx head;
  if (num == 1 && den == 1 && use_table) {
    head = simd::dirichlet_sum(std::span<const double>(logs->data(), static_cast<std::size_t>(n_terms)), sigma, t);
  } else {
    std::vector<double> x(static_cast<std::size_t>(n_terms));
    for (std::int64_t n = 0; n < n_terms; ++n) x[static_cast<std::size_t>(n)] = log_int(den * n + num) - log_den;
    head = simd::dirichlet_sum(x, sigma, t);
  }

  const double log_big = log_int(top) - log_den;  // log(N + a)
  const double big = static_cast<double>(n_terms) + a;
  const cplx big_pow = std::exp(-s * log_big);  // (N + a)^{-s}
  cplx tail;
  if (regularized) {
    tail = -log_big;
  } else {
    tail = big_pow * big / (s - 1.0);
  }
  tail += 0.5 * big_pow;

  // Bernoulli corrections B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}. The
  // Pochhammer symbol and the power are carried as one product so that
  // neither overflows at large |s|.
  cplx factor = s * big_pow / big;
  const double inv_big2 = 1.0 / (big * big);
  cplx corr = 0.0;
  double remainder = 0.0;
  bool converged = false;
  for (std::size_t k = 0; k < kBernoulliFact.size(); ++k) {
    const cplx term = kBernoulliFact[k] * factor;
    // Backlund: the error after stopping before term k+1 is at most
    // |s + 2k + 1| / (sigma + 2k + 1) times that term.
    const double m = static_cast<double>(k);  // terms taken so far
    const double backlund = std::abs(s + 2.0 * m + 1.0) / (sigma + 2.0 * m + 1.0) * std::abs(term);
    if (k > 0 && backlund < 1e-17 * std::abs(head + tail + corr)) {
      remainder = backlund;
      converged = true;
      break;
    }
    corr += term;
    factor *= (s + (2.0 * m + 1.0)) * (s + (2.0 * m + 2.0)) * inv_big2;
  }
  if (!converged) {
    const double m = static_cast<double>(kBernoulliFact.size());
    // Next coefficient is below the last one in size for these arguments.
    const double last = std::abs(kBernoulliFact.back() * factor);
    remainder = std::abs(s + 2.0 * m + 1.0) / (sigma + 2.0 * m + 1.0) * last * 2.0;
  }

  const cplx value = head + tail + corr;
  const double phase_error = kEps * (std::fabs(t) * log_big + 8.0);
  const double rounding = phase_error * std::sqrt(square_mass(a, sigma, static_cast<double>(n_terms))) +
                          8.0 * kEps * (std::abs(head) + std::abs(tail) + std::abs(corr));
  return {value, remainder + rounding, remainder};
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (is_non_positive_integer(z)) {
    throw Error(Errc::pole_at_non_positive_integer, "log Gamma has a pole at " + std::to_string(z.real()));
  }
  if (z == cplx(1.0, 0.0) || z == cplx(2.0, 0.0)) return 0.0;
  cplx w = z;
  cplx shift = 0.0;
  while (w.real() < 0.0 || std::abs(w) < kStirlingRadius) {
    shift += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift;
}

std::complex<double> x_factor(std::complex<double> s, const DirichletCharacter& chi) {
  if (chi.is_principal()) throw Error(Errc::principal_character, "X(s, chi) needs a non-principal character");
  const double q = static_cast<double>(chi.modulus());
  const double a = chi.parity();
  const cplx log_ratio = log_gamma((1.0 - s + a) / 2.0) - log_gamma((s + a) / 2.0);
  return root_number(chi) * std::exp((0.5 - s) * std::log(q / kPi) + log_ratio);
}

std::complex<double> x_factor(StripPoint p, const DirichletCharacter& chi) {
  if (!(p.sigma > 0.0 && p.sigma < 1.0)) {
    throw Error(Errc::out_of_strip, "sigma = " + std::to_string(p.sigma) + " outside (0, 1)");
  }
  return x_factor(p.s(), chi);
}

double stirling_constant(double sigma) noexcept { return std::exp2(2.0 * sigma - 1.0); }

double riemann_siegel_theta(double t) {
  if (!(t >= 1.0)) throw Error(Errc::domain_too_small, "theta needs t >= 1, got " + std::to_string(t));
  if (t < 10.0) {
    return log_gamma(cplx(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
  }
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (const double c : kTheta) {
    series += c * power;
    power *= inv2;
  }
  return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + series;
}

Certified zeta_em(std::complex<double> s) { return hurwitz_zeta(s, 1, 1); }

Certified hurwitz_zeta(std::complex<double> s, std::int64_t num, std::int64_t den) {
  if (s == cplx(1.0, 0.0)) throw Error(Errc::pole_at_one, "zeta(s, a) has a pole at s = 1");
  return hurwitz_em(s, num, den, false);
}

Certified hurwitz_zeta_regularized(std::int64_t num, std::int64_t den) {
  return hurwitz_em(cplx(1.0, 0.0), num, den, true);
}

HardyValue hardy_z_checked(double t) {
  const Certified z = zeta_em(cplx(0.5, t));
  const double theta = riemann_siegel_theta(t);
  const cplx rotated = cplx(std::cos(theta), std::sin(theta)) * z.value;
  return {rotated.real(), std::fabs(rotated.imag())};
}

double hardy_z(double t) {
  if (!(t >= 10.0)) throw Error(Errc::domain_too_small, "Z(t) needs t >= 10, got " + std::to_string(t));
  const HardyValue z = hardy_z_checked(t);
  if (z.residue > 1e-6) {
    throw Error(Errc::accuracy_loss, "imaginary residue " + std::to_string(z.residue) + " at t = " + std::to_string(t));
  }
  return z.value;
}

}  // namespace lzw
