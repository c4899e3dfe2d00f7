#pragma once

#include <cmath>
#include <complex>

namespace lzw {

// Neumaier's variant of Kahan summation. Requires strict IEEE evaluation
// (no contraction, no reassociation).
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double v) noexcept {
    add(v);
    return *this;
  }

  // Folds another partial sum in, keeping both of its components.
  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> v) noexcept {
    re_.add(v.real());
    im_.add(v.imag());
  }

  CompensatedComplexSum& operator+=(std::complex<double> v) noexcept {
    add(v);
    return *this;
  }

  void merge(const CompensatedComplexSum& other) noexcept {
    re_.merge(other.re_);
    im_.merge(other.im_);
  }

  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace lzw
