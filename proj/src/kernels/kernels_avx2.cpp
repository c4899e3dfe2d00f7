// AVX2 + FMA variants. Compiled with -mavx2 -mfma; only reached through the
// dispatcher after a CPUID check.

#include <immintrin.h>

#include <array>
#include <cassert>
#include <cmath>

#include "lzw/compensated.hpp"
#include "lzw/kernels.hpp"

namespace lzw::simd::avx2 {
namespace {

// fdlibm/musl reduction and kernel coefficients.
constexpr double kInvPio2 = 6.36619772367581382433e-01;
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Lo = 6.07710050650619224932e-11;

constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

constexpr double kInvLn2 = 1.44269504088896338700e+00;
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kP1 = 1.66666666666666019037e-01;
constexpr double kP2 = -2.77777777770155933842e-03;
constexpr double kP3 = 6.61375632143793436117e-05;
constexpr double kP4 = -1.65339022054652515390e-06;
constexpr double kP5 = 4.13813679705723846039e-08;

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// sin and cos of x for |x| up to about 1e6 (quadrant count below 2^20).
inline void sincos4(__m256d x, __m256d& out_sin, __m256d& out_cos) {
  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, splat(kInvPio2)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  // n * kPio2Hi is exact for |n| < 2^20.
  const __m256d r = _mm256_sub_pd(_mm256_sub_pd(x, _mm256_mul_pd(n, splat(kPio2Hi))),
                                  _mm256_mul_pd(n, splat(kPio2Lo)));

  const __m256d z = _mm256_mul_pd(r, r);
  const __m256d w = _mm256_mul_pd(z, z);

  // sin kernel
  __m256d sr = _mm256_fmadd_pd(z, splat(kS4), splat(kS3));
  sr = _mm256_fmadd_pd(z, sr, splat(kS2));
  __m256d s56 = _mm256_fmadd_pd(z, splat(kS6), splat(kS5));
  sr = _mm256_fmadd_pd(_mm256_mul_pd(z, w), s56, sr);
  const __m256d v = _mm256_mul_pd(z, r);
  const __m256d sin_r = _mm256_fmadd_pd(v, _mm256_fmadd_pd(z, sr, splat(kS1)), r);

  // cos kernel
  __m256d c123 = _mm256_fmadd_pd(z, splat(kC3), splat(kC2));
  c123 = _mm256_mul_pd(z, _mm256_fmadd_pd(z, c123, splat(kC1)));
  __m256d c456 = _mm256_fmadd_pd(z, splat(kC6), splat(kC5));
  c456 = _mm256_fmadd_pd(z, c456, splat(kC4));
  const __m256d cr = _mm256_fmadd_pd(_mm256_mul_pd(w, w), c456, c123);
  const __m256d hz = _mm256_mul_pd(splat(0.5), z);
  const __m256d one = splat(1.0);
  const __m256d cw = _mm256_sub_pd(one, hz);
  const __m256d cos_r = _mm256_add_pd(
      cw, _mm256_fmadd_pd(z, cr, _mm256_sub_pd(_mm256_sub_pd(one, cw), hz)));

  // quadrant fix-up
  const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
  const __m256i one_i = _mm256_set1_epi64x(1);
  const __m256i two_i = _mm256_set1_epi64x(2);
  const __m256d swap =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, one_i), one_i));
  const __m256d neg_sin = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(q, two_i), 62));
  const __m256d neg_cos = _mm256_castsi256_pd(
      _mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(q, one_i), two_i), 62));
  out_sin = _mm256_xor_pd(_mm256_blendv_pd(sin_r, cos_r, swap), neg_sin);
  out_cos = _mm256_xor_pd(_mm256_blendv_pd(cos_r, sin_r, swap), neg_cos);
}

// exp(x), clamped to |x| <= 700.
inline __m256d exp4(__m256d x) {
  x = _mm256_max_pd(_mm256_min_pd(x, splat(700.0)), splat(-700.0));
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, splat(kInvLn2)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d hi = _mm256_sub_pd(x, _mm256_mul_pd(k, splat(kLn2Hi)));
  const __m256d lo = _mm256_mul_pd(k, splat(kLn2Lo));
  const __m256d r = _mm256_sub_pd(hi, lo);
  const __m256d rr = _mm256_mul_pd(r, r);
  __m256d p = _mm256_fmadd_pd(rr, splat(kP5), splat(kP4));
  p = _mm256_fmadd_pd(rr, p, splat(kP3));
  p = _mm256_fmadd_pd(rr, p, splat(kP2));
  p = _mm256_fmadd_pd(rr, p, splat(kP1));
  const __m256d c = _mm256_fnmadd_pd(rr, p, r);
  const __m256d frac = _mm256_div_pd(_mm256_mul_pd(r, c), _mm256_sub_pd(splat(2.0), c));
  const __m256d y = _mm256_add_pd(splat(1.0), _mm256_add_pd(_mm256_sub_pd(frac, lo), hi));
  const __m256i ki = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(k));
  const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(ki, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(y, _mm256_castsi256_pd(bits));
}

// Four independent Neumaier accumulators.
struct LaneSum {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  void add(__m256d v) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    const __m256d t = _mm256_add_pd(sum, v);
    const __m256d big_sum =
        _mm256_cmp_pd(_mm256_and_pd(sum, abs_mask), _mm256_and_pd(v, abs_mask), _CMP_GE_OQ);
    const __m256d c_sum = _mm256_add_pd(_mm256_sub_pd(sum, t), v);
    const __m256d c_v = _mm256_add_pd(_mm256_sub_pd(v, t), sum);
    comp = _mm256_add_pd(comp, _mm256_blendv_pd(c_v, c_sum, big_sum));
    sum = t;
  }

  void fold_into(CompensatedSum& out) const {
    alignas(32) std::array<double, 4> s{};
    alignas(32) std::array<double, 4> c{};
    _mm256_store_pd(s.data(), sum);
    _mm256_store_pd(c.data(), comp);
    for (int lane = 0; lane < 4; ++lane) {
      out.add(s[lane]);
      out.add(c[lane]);
    }
  }
};

template <bool Weighted>
std::complex<double> dirichlet_sum_impl(const double* x, const double* w_re, const double* w_im,
                                        std::size_t n, double sigma, double t) {
  const __m256d neg_sigma = splat(-sigma);
  const __m256d vt = splat(t);
  LaneSum re;
  LaneSum im;

  auto step = [&](__m256d xv, __m256d wr, __m256d wi) {
    const __m256d amp = exp4(_mm256_mul_pd(neg_sigma, xv));
    __m256d s;
    __m256d c;
    sincos4(_mm256_mul_pd(vt, xv), s, c);
    if constexpr (Weighted) {
      const __m256d ar = _mm256_mul_pd(amp, wr);
      const __m256d ai = _mm256_mul_pd(amp, wi);
      re.add(_mm256_add_pd(_mm256_mul_pd(ar, c), _mm256_mul_pd(ai, s)));
      im.add(_mm256_sub_pd(_mm256_mul_pd(ai, c), _mm256_mul_pd(ar, s)));
    } else {
      const __m256d a = _mm256_mul_pd(amp, wr);
      re.add(_mm256_mul_pd(a, c));
      im.add(_mm256_sub_pd(_mm256_setzero_pd(), _mm256_mul_pd(a, s)));
    }
  };

  std::size_t k = 0;
  const __m256d ones = splat(1.0);
  for (; k + 4 <= n; k += 4) {
    const __m256d xv = _mm256_loadu_pd(x + k);
    if constexpr (Weighted) {
      step(xv, _mm256_loadu_pd(w_re + k), _mm256_loadu_pd(w_im + k));
    } else {
      step(xv, ones, ones);
    }
  }
  if (k < n) {
    // Pad the tail with zero-weight lanes so it goes through the same math.
    alignas(32) std::array<double, 4> xt{};
    alignas(32) std::array<double, 4> rt{};
    alignas(32) std::array<double, 4> it{};
    for (std::size_t j = 0; k + j < n; ++j) {
      xt[j] = x[k + j];
      rt[j] = Weighted ? w_re[k + j] : 1.0;
      it[j] = Weighted ? w_im[k + j] : 0.0;
    }
    step(_mm256_load_pd(xt.data()), _mm256_load_pd(rt.data()), _mm256_load_pd(it.data()));
  }

  CompensatedSum re_total;
  CompensatedSum im_total;
  re.fold_into(re_total);
  im.fold_into(im_total);
  return {re_total.value(), im_total.value()};
}

}  // namespace

std::complex<double> dirichlet_sum(std::span<const double> x, std::span<const double> w_re,
                                   std::span<const double> w_im, double sigma, double t) {
  assert(w_re.size() == x.size() && w_im.size() == x.size());
  return dirichlet_sum_impl<true>(x.data(), w_re.data(), w_im.data(), x.size(), sigma, t);
}

std::complex<double> dirichlet_sum(std::span<const double> x, double sigma, double t) {
  return dirichlet_sum_impl<false>(x.data(), nullptr, nullptr, x.size(), sigma, t);
}

void sincos(std::span<const double> x, std::span<double> s, std::span<double> c) {
  std::size_t k = 0;
  for (; k + 4 <= x.size(); k += 4) {
    __m256d sv;
    __m256d cv;
    sincos4(_mm256_loadu_pd(x.data() + k), sv, cv);
    _mm256_storeu_pd(s.data() + k, sv);
    _mm256_storeu_pd(c.data() + k, cv);
  }
  for (; k < x.size(); ++k) {
    __m256d sv;
    __m256d cv;
    sincos4(splat(x[k]), sv, cv);
    s[k] = _mm256_cvtsd_f64(sv);
    c[k] = _mm256_cvtsd_f64(cv);
  }
}

void exp(std::span<const double> x, std::span<double> out) {
  std::size_t k = 0;
  for (; k + 4 <= x.size(); k += 4) {
    _mm256_storeu_pd(out.data() + k, exp4(_mm256_loadu_pd(x.data() + k)));
  }
  for (; k < x.size(); ++k) out[k] = _mm256_cvtsd_f64(exp4(splat(x[k])));
}

}  // namespace lzw::simd::avx2
