#include "lzw/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "lzw/characters.hpp"
#include "lzw/compensated.hpp"
#include "lzw/error.hpp"

namespace lzw {

namespace {

// Quotient of a by the monic polynomial b; the remainder must vanish.
std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = exact_divide(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

RootSum::RootSum(int order) : coeffs_(static_cast<std::size_t>(order), 0) {
  if (order < 1) throw Error(Errc::invalid_argument, "root order must be positive");
}

RootSum RootSum::integer(int order, std::int64_t v) {
  RootSum r(order);
  r.coeffs_[0] = v;
  return r;
}

RootSum RootSum::root(int order, std::int64_t k) {
  RootSum r(order);
  const std::int64_t m = order;
  r.coeffs_[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
  return r;
}

static void require_same_order(const RootSum& a, const RootSum& b) {
  if (a.order() != b.order()) {
    throw Error(Errc::invalid_argument, "root sums of different orders " + std::to_string(a.order()) +
                                            " and " + std::to_string(b.order()));
  }
}

RootSum& RootSum::operator+=(const RootSum& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

RootSum& RootSum::operator-=(const RootSum& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

RootSum RootSum::operator-() const {
  RootSum r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RootSum operator*(const RootSum& a, const RootSum& b) {
  require_same_order(a, b);
  const std::size_t m = a.coeffs_.size();
  RootSum r(a.order());
  for (std::size_t i = 0; i < m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b.coeffs_[j] != 0) r.coeffs_[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

RootSum RootSum::times_root(std::int64_t k) const {
  const std::int64_t m = order();
  const std::size_t shift = static_cast<std::size_t>(((k % m) + m) % m);
  RootSum r(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[(i + shift) % coeffs_.size()] = coeffs_[i];
  return r;
}

std::complex<double> RootSum::value() const {
  CompensatedComplexSum sum;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      sum.add(static_cast<double>(coeffs_[i]) * unit_root(static_cast<std::int64_t>(i), order()));
    }
  }
  return sum.value();
}

std::vector<std::int64_t> RootSum::reduced() const {
  const auto& phi = cyclotomic_polynomial(order());
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> r = coeffs_;
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg);
  return r;
}

bool RootSum::is_zero() const {
  for (const auto c : reduced()) {
    if (c != 0) return false;
  }
  return true;
}

bool operator==(const RootSum& a, const RootSum& b) { return (a - b).is_zero(); }

}  // namespace lzw
