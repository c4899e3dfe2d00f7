#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lzw/error.hpp"
#include "lzw/landau.hpp"

using namespace lzw;

namespace {

const ZeroTable& zeros() {
  static const ZeroTable t = compute_zeros(5000.0);
  return t;
}

}  // namespace

TEST_CASE("rational points") {
  const RationalPoint x(15, 2);
  CHECK(x.num() == 15);
  CHECK(RationalPoint(10, 4).num() == 5);
  CHECK(RationalPoint(10, 4).den() == 2);
  CHECK(RationalPoint::parse("15/2").value() == 7.5);
  CHECK(RationalPoint::parse("8").is_integer());
  CHECK_THROWS_AS(RationalPoint(1, 1), Error);
  CHECK_THROWS_AS(RationalPoint(1, 2), Error);
  CHECK_THROWS_AS(RationalPoint::parse("x/2"), Error);
}

TEST_CASE("von Mangoldt") {
  CHECK(von_mangoldt(RationalPoint(8)) == doctest::Approx(std::log(2.0)));
  CHECK(von_mangoldt(RationalPoint(6)) == 0.0);
  CHECK(von_mangoldt(RationalPoint(7, 2)) == 0.0);
  CHECK(von_mangoldt(RationalPoint(49)) == doctest::Approx(std::log(7.0)));
  CHECK(von_mangoldt(RationalPoint(97)) == doctest::Approx(std::log(97.0)));
  CHECK(prime_power_base(1024) == 2);
  CHECK(prime_power_base(12) == 0);
}

TEST_CASE("distance to the nearest prime power") {
  CHECK(nearest_pp_distance(RationalPoint(10)) == 1.0);
  CHECK(nearest_pp_distance(RationalPoint(5, 2)) == 0.5);
  CHECK(nearest_pp_distance(RationalPoint(8)) == 1.0);
  CHECK(nearest_pp_distance(RationalPoint(2)) == 1.0);
  CHECK(nearest_pp_distance(RationalPoint(3, 2)) == 0.5);
  CHECK(nearest_pp_distance(RationalPoint(24)) == 1.0);
  CHECK(nearest_pp_distance(RationalPoint(7, 3)) == doctest::Approx(1.0 / 3.0));
  // 90..96 hold no prime powers; 89 and 97 are prime.
  CHECK(nearest_pp_distance(RationalPoint(93)) == 4.0);
}

TEST_CASE("error budget") {
  const double T = 1000.0;
  const double expected = 2 * std::log(4 * T) * std::log(std::log(6.0)) + std::log(2.0) * 2.0 +
                          std::log(2 * T) * (1.0 / std::log(2.0));
  CHECK(landau_error_budget(RationalPoint(2), T) == doctest::Approx(expected).epsilon(1e-12));
  // min(T, 1/log x) saturates at T for x close to 1.
  const RationalPoint near_one(1000001, 1000000);
  const double b = landau_error_budget(near_one, 50.0);
  CHECK(b >= std::log(100.0) * 50.0);
}

TEST_CASE("zero sums") {
  const auto& z = zeros();
  const auto s2 = landau_zero_sum(RationalPoint(2), z, 1000.0);
  const double main = landau_main_term(RationalPoint(2), 1000.0);
  CHECK(main == doctest::Approx(-1000.0 / (2 * std::numbers::pi) * std::log(2.0)));
  CHECK(std::fabs(s2.real() - main) <= landau_error_budget(RationalPoint(2), 1000.0));
  CHECK(landau_zero_sum(RationalPoint(2), z, 10.0) == std::complex<double>(0.0, 0.0));
  for (const auto& x : {RationalPoint(6), RationalPoint(10), RationalPoint(15, 2)}) {
    const auto plus = landau_zero_sum(x, z, 3000.0, 1);
    const auto minus = landau_zero_sum(x, z, 3000.0, -1);
    CHECK(minus == std::conj(plus));
  }
  // direct long double sums, no kernel or chunking
  for (const auto& x : {RationalPoint(10), RationalPoint(15, 2)}) {
    for (const double T : {1000.0, 2000.0, 4000.0}) {
      const long double lx = std::log(static_cast<long double>(x.num())) - std::log(static_cast<long double>(x.den()));
      long double re = 0, im = 0;
      for (std::size_t i = 0; i < count(z, T); ++i) {
        re += std::cos(z.ordinates[i] * lx);
        im += std::sin(z.ordinates[i] * lx);
      }
      const long double amp = std::sqrt(static_cast<long double>(x.value()));
      const auto fast = landau_zero_sum(x, z, T);
      CHECK(std::fabs(fast.real() - static_cast<double>(amp * re)) < 1e-8);
      CHECK(std::fabs(fast.imag() - static_cast<double>(amp * im)) < 1e-8);
    }
  }
  CHECK(landau_zero_sum(RationalPoint(3), z, 4000.0, 1, 1) == landau_zero_sum(RationalPoint(3), z, 4000.0, 1, 4));
  CHECK_THROWS_AS(landau_zero_sum(RationalPoint(2), z, 6000.0), Error);
}

TEST_CASE("main term recovery and suppression") {
  const auto& z = zeros();
  for (const int xv : {2, 3, 4, 5, 8, 9}) {
    const RationalPoint x(static_cast<std::uint64_t>(xv));
    for (const double T : {1000.0, 2000.0, 5000.0}) {
      const double main = landau_main_term(x, T);
      const double err = std::fabs(landau_zero_sum(x, z, T).real() - main);
      CHECK(err <= std::max(5 * landau_error_budget(x, T), 0.2 * std::fabs(main)));
    }
  }
  const double r1 = std::abs(landau_zero_sum(RationalPoint(2), z, 1000.0)) / 1000.0;
  for (const double T : {2000.0, 4000.0}) {
    CHECK(std::fabs(std::abs(landau_zero_sum(RationalPoint(2), z, T)) / T / r1 - 1.0) <= 0.2);
  }
}

TEST_CASE("non-prime-power sums shrink relative to T") {
  const auto& z = zeros();
  for (const auto& x : {RationalPoint(6), RationalPoint(10), RationalPoint(15, 2)}) {
    CAPTURE(x.to_string());
    double prev = std::abs(landau_zero_sum(x, z, 1000.0)) / 1000.0;
    for (const double T : {2000.0, 4000.0}) {
      CAPTURE(T);
      const double r = std::abs(landau_zero_sum(x, z, T)) / T;
      CHECK(r <= 1.2 * prev);
      prev = r;
    }
  }
}
