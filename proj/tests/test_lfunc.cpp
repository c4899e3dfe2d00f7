#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lzw/error.hpp"
#include "lzw/lfunc.hpp"

using namespace lzw;
using cplx = std::complex<double>;

namespace {

// Direct partial sums with an alternating-block tail bound are enough at s = 2.
cplx direct_sum(double s, const DirichletCharacter& chi, int n) {
  long double re = 0, im = 0;
  for (int k = 1; k <= n; ++k) {
    const cplx c = chi(k);
    const long double w = std::pow(static_cast<long double>(k), -static_cast<long double>(s));
    re += w * c.real();
    im += w * c.imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace

TEST_CASE("oracle reference values") {
  const auto chi3 = character(3, 1);
  const auto l1 = l_oracle(1.0, chi3);
  CHECK(std::abs(l1.value - cplx(std::numbers::pi / (3 * std::sqrt(3.0)), 0.0)) < 1e-12);
  CHECK(l1.bound <= 1e-9);
  CHECK(std::abs(l_oracle(2.0, chi3).value - 0.78130241289648629687) < 1e-12);
  CHECK(std::abs(l_oracle(2.0, chi3).value - direct_sum(2.0, chi3, 3000000)) < 1e-9);
  CHECK(std::abs(l_oracle(cplx(0.75, 100), chi3).value - cplx(0.84401806891615357631, 0.40175618974720088098)) < 1e-10);
  CHECK(std::abs(l_oracle(cplx(0.5, 14.13472514173469379045725), character(5, 2)).value -
                 cplx(4.1186670627884205769, -0.92548255411505316473)) < 1e-10);
  CHECK(std::abs(l_oracle(cplx(0.6, 50), character(5, 1)).value -
                 cplx(0.92146673586423855655, -1.8192126893420335242)) < 1e-10);
  CHECK_THROWS_AS(l_oracle(cplx(0.5, 2e4), chi3), Error);
  for (double t : {10.0, 1000.0, 5000.0, 10000.0}) CHECK(l_oracle(cplx(0.55, t), character(5, 3)).bound <= 1e-9);
}

TEST_CASE("approximate functional equation") {
  const auto chi3 = character(3, 1);
  const StripPoint s{0.75, 100.0};
  const auto oracle = l_oracle(s.s(), chi3);
  const auto one = l_afe(s, chi3, 1.0);
  const auto two = l_afe(s, chi3, 2.0);
  CHECK(one.method == Method::afe);
  CHECK(std::abs(one.value - oracle.value) <= one.bound);
  CHECK(std::abs(one.value - two.value) <= one.bound + two.bound);

  const auto chi5 = character(5, 2);
  const StripPoint rho{0.5, 14.13472514173469379045725};
  const auto afe = l_afe(rho, chi5, 1.0);
  CHECK(std::abs(afe.value) > 0.0);
  CHECK(std::abs(afe.value - l_oracle(rho.s(), chi5).value) <= afe.bound);

  CHECK_THROWS_AS(l_afe(StripPoint{1.0, 100.0}, chi3, 1.0), Error);
  CHECK_THROWS_AS(l_afe(StripPoint{0.5, 5.0}, chi3, 1.0), Error);
  CHECK_THROWS_AS(l_afe(s, character(3, 0), 1.0), Error);
  CHECK_THROWS_AS(l_afe(s, chi3, 0.5), Error);
}

TEST_CASE("window lengths") {
  const auto w = afe_windows(2 * std::numbers::pi, 4, 3.0);
  CHECK(w.x == doctest::Approx(6.0));
  CHECK(w.y == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("non-integer delta respects the bound") {
  const auto chi = character(5, 1);
  for (double delta : {1.3, 2.5, 3.7}) {
    for (double t : {50.0, 700.0}) {
      const StripPoint s{0.6, t};
      const auto a = l_afe(s, chi, delta);
      CHECK(std::abs(a.value - l_oracle(s.s(), chi).value) <= a.bound);
    }
  }
}
