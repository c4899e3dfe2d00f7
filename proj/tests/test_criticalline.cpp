#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lzw/criticalline.hpp"
#include "lzw/error.hpp"

using namespace lzw;
using cplx = std::complex<double>;

namespace {

constexpr double kGamma1 = 14.13472514173469379045725;

const CriticalLineConfig& default_config() {
  static const auto cfg = CriticalLineConfig::make(character(3, 1), character(5, 2));
  return cfg;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("prime selection") {
  CHECK(default_config().p == 7);
  for (const auto& [a, b] : {std::pair{character(3, 1), character(7, 3)}, std::pair{character(5, 1), character(3, 1)},
                             std::pair{character(7, 2), character(11, 5)}, std::pair{character(13, 6), character(5, 2)}}) {
    const std::int64_t p = choose_p(a, b);
    CHECK(is_prime(p));
    CHECK(p % a.modulus() == 1);
    CHECK(p != b.modulus());
    CHECK(std::abs(b(p) - 1.0) > 1e-9);
    for (std::int64_t r = a.modulus() + 1; r < p; r += a.modulus()) {
      if (is_prime(r) && r != b.modulus()) CHECK(std::abs(b(r) - 1.0) < 1e-12);
    }
  }
  CHECK(code_of([] { choose_p(character(5, 1), character(5, 2)); }) == Errc::invalid_argument);
  CHECK(code_of([] { choose_p(character(3, 0), character(5, 2)); }) == Errc::invalid_argument);
  CHECK_THROWS_AS(CriticalLineConfig::make(character(3, 1), character(5, 2), 9), Error);
  CHECK_THROWS_AS(CriticalLineConfig::make(character(3, 1), character(5, 2), 5), Error);
}

TEST_CASE("Gauss sum constants") {
  const auto& cfg = default_config();
  CHECK(std::abs(cfg.C2 - cplx(-1.0)) < 1e-12);
  CHECK(std::abs(cfg.C1 - cplx(1.0)) < 1e-12);
  CHECK(std::abs(cfg.C1 - cfg.C2) >= 1e-6);

  for (std::int64_t q : {3, 5, 7}) {
    for (std::int64_t j = 1; j < q - 1; ++j) {
      const auto chi = character(q, j);
      for (std::int64_t p : {2, 11, 13, 17, 19, 23, 29}) {
        if (p % q == 0) continue;
        const cplx c = c_constant(chi, p);
        CHECK(std::abs(std::abs(c) - 1.0) < 1e-12);
        // only p mod q matters
        for (std::int64_t k = 1; k <= 4; ++k) CHECK(std::abs(c_constant(chi, p + k * q) - c) < 1e-12);
        CHECK(std::abs(c - std::conj(chi(p))) < 1e-12);
      }
    }
  }
}

TEST_CASE("statistic on the line") {
  const auto& cfg = default_config();
  const cplx ref(4.1273050159272374864, -1.9403551122276001223);
  CHECK(std::abs(a2_gamma(kGamma1, cfg, Method::oracle) - ref) < 1e-7);

  const auto fast = a2_sample(kGamma1, cfg);
  const double sp = std::sqrt(7.0);
  CHECK(std::abs(fast.value - ref) <= sp * (fast.l1.bound + fast.l2.bound));
  for (double g : {kGamma1, 250.0, 4000.0}) {
    const auto a = a2_sample(g, cfg, Method::oracle);
    CHECK(std::abs(a.value) == doctest::Approx(sp * std::abs(a.l1.value - a.l2.value)).epsilon(1e-13));
    CHECK(std::abs(a.part1 - a.part2 - a.value) < 1e-12 * (1 + std::abs(a.value)));
  }
  const auto same = CriticalLineConfig{character(3, 1), character(3, 1), 7, 1.0, 1.0};
  CHECK(a2_gamma(100.0, same) == cplx(0.0));
  CHECK_THROWS_AS(a2_gamma(10.0, cfg), Error);
}

TEST_CASE("critical line reports") {
  const auto zeros = compute_zeros(5000.0);
  const auto& cfg = default_config();
  const auto reports = thm2_reports(zeros, {5000.0, 1000.0, 2000.0}, cfg);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].T == 1000.0);

  const double pi2 = 2 * std::numbers::pi;
  const double log7 = std::log(7.0);
  // L'/L(1, chi) at 40 digits
  const double dl3 = 0.36828161597014784263;
  const double dl5 = 0.82767947671550488799;
  for (const auto& r : reports) {
    CHECK(r.N == count(zeros, r.T));
    CHECK(r.lowerBoundCount <= static_cast<double>(r.N));
    CHECK(r.lower_bound_ratio() > 0.0);
    CHECK(std::abs(r.sumA - (r.sum1 - r.sum2)) < 1e-9 * std::abs(r.sumA));
    const double u = r.T / pi2;
    CHECK(std::abs(r.M - (std::conj(cfg.C1) - std::conj(cfg.C2)) * u * std::log(u)) < 1e-9 * std::abs(r.M));
    CHECK(r.second_moment_ratio() > 0.5);
    CHECK(r.second_moment_ratio() < 2.0);

    // next-order term of each sum: u (chi(p) (log u - 1 + L'/L(1, chi)) - log p)
    if (r.T < 2000.0) continue;
    const double pred1 = u * (std::log(u) - 1 + dl3 - log7);
    const double pred2 = u * (-(std::log(u) - 1 + dl5) - log7);
    CHECK(std::abs(r.sum1.real() - pred1) < 0.06 * std::abs(r.M1));
    CHECK(std::abs(r.sum2.real() - pred2) < 0.06 * std::abs(r.M2));
  }
  const double e1000 = std::abs(reports[0].sumA - reports[0].M) / std::abs(reports[0].M);
  const double e5000 = std::abs(reports[2].sumA - reports[2].M) / std::abs(reports[2].M);
  CHECK(e5000 < e1000);

  Thm2Options oracle;
  oracle.method = Method::oracle;
  const auto slow = thm2_report(zeros, 1000.0, cfg, oracle);
  double budget = 0.0;
  for (std::size_t i = 0; i < reports[0].N; ++i) {
    const auto a = a2_sample(zeros.ordinates[i], cfg);
    budget += std::sqrt(7.0) * (a.l1.bound + a.l2.bound);
  }
  CHECK(std::abs(slow.sumA - reports[0].sumA) <= budget);
  CHECK_THROWS_AS(thm2_report(zeros, 6000.0, cfg), Error);
}
