#include "lzw/characters.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "lzw/compensated.hpp"
#include "lzw/error.hpp"

namespace lzw {

struct DirichletCharacter::Tables {
  std::int64_t q;
  std::int64_t g;
  std::vector<std::int32_t> dlog;  // dlog[n mod q], -1 at 0
};

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t kMaxModulus = 1 << 24;

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t primitive_root(std::int64_t q) {
  if (!is_prime(q)) throw Error(Errc::non_prime_modulus, std::to_string(q) + " is not prime");
  if (q == 2) return 1;
  std::vector<std::int64_t> factors;
  std::int64_t m = q - 1;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < q; ++g) {
    bool generates = true;
    for (const std::int64_t f : factors) {
      if (powmod(g, (q - 1) / f, q) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw Error(Errc::non_prime_modulus, "no primitive root modulo " + std::to_string(q));
}

std::complex<double> unit_root(std::int64_t r, std::int64_t m) noexcept {
  r = floor_mod(r, m);
  if ((4 * r) % m == 0) {
    switch ((4 * r) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  // Smallest-magnitude representative keeps the argument of sin/cos short.
  if (2 * r > m) r -= m;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

std::shared_ptr<const DirichletCharacter::Tables> DirichletCharacter::tables_for(std::int64_t q) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::shared_ptr<const DirichletCharacter::Tables>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  auto t = std::make_shared<DirichletCharacter::Tables>();
  t->q = q;
  t->g = primitive_root(q);
  t->dlog.assign(static_cast<std::size_t>(q), -1);
  std::int64_t v = 1;
  for (std::int64_t k = 0; k < q - 1; ++k) {
    t->dlog[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(k);
    v = mulmod(v, t->g, q);
  }
  cache.emplace(q, t);
  return t;
}

DirichletCharacter::DirichletCharacter(std::int64_t q, std::int64_t j) : q_(q), j_(j) {
  if (q < 3 || !is_prime(q)) {
    throw Error(Errc::non_prime_modulus, "modulus " + std::to_string(q) + " is not an odd prime");
  }
  if (q > kMaxModulus) {
    throw Error(Errc::non_prime_modulus, "modulus " + std::to_string(q) + " is too large");
  }
  if (j < 0 || j > q - 2) {
    throw Error(Errc::index_out_of_range,
                "index " + std::to_string(j) + " not in [0, " + std::to_string(q - 2) + "]");
  }
  tables_ = tables_for(q);
}

DirichletCharacter::DirichletCharacter(std::int64_t q, std::int64_t j,
                                       std::shared_ptr<const Tables> tables)
    : q_(q), j_(j), tables_(std::move(tables)) {}

DirichletCharacter DirichletCharacter::parse(std::string_view text) {
  const auto colon = text.find(':');
  auto bad = [&] {
    return Error(Errc::invalid_argument,
                 "character must be written as q:j, got '" + std::string(text) + "'");
  };
  if (colon == std::string_view::npos) throw bad();
  std::int64_t q = 0;
  std::int64_t j = 0;
  const auto qs = text.substr(0, colon);
  const auto js = text.substr(colon + 1);
  auto r1 = std::from_chars(qs.data(), qs.data() + qs.size(), q);
  auto r2 = std::from_chars(js.data(), js.data() + js.size(), j);
  if (r1.ec != std::errc{} || r1.ptr != qs.data() + qs.size() || r2.ec != std::errc{} ||
      r2.ptr != js.data() + js.size()) {
    throw bad();
  }
  return {q, j};
}

std::int64_t DirichletCharacter::generator() const noexcept { return tables_->g; }

int DirichletCharacter::parity() const noexcept {
  // chi(-1) = exp(pi i j) since ind(-1) = (q-1)/2.
  return static_cast<int>(j_ & 1);
}

std::optional<std::int64_t> DirichletCharacter::discrete_log(std::int64_t n) const noexcept {
  const auto k = tables_->dlog[static_cast<std::size_t>(floor_mod(n, q_))];
  if (k < 0) return std::nullopt;
  return k;
}

std::optional<std::int64_t> DirichletCharacter::exponent(std::int64_t n) const noexcept {
  const auto k = discrete_log(n);
  if (!k) return std::nullopt;
  return (j_ * *k) % (q_ - 1);
}

std::complex<double> DirichletCharacter::operator()(std::int64_t n) const noexcept {
  const auto r = exponent(n);
  if (!r) return {0.0, 0.0};
  return unit_root(*r, q_ - 1);
}

DirichletCharacter DirichletCharacter::conj() const noexcept {
  return {q_, j_ == 0 ? 0 : (q_ - 1) - j_, tables_};
}

std::string DirichletCharacter::to_string() const {
  return std::to_string(q_) + ":" + std::to_string(j_);
}

std::complex<double> gauss_sum(std::int64_t k, const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  const std::int64_t m = q * (q - 1);
  const std::int64_t kk = floor_mod(k, q);
  CompensatedComplexSum sum;
  for (std::int64_t a = 1; a <= q; ++a) {
    const auto r = chi.exponent(a);
    if (!r) continue;
    // r/(q-1) + a k/q as a single fraction over q(q-1).
    const std::int64_t num = *r * q + ((a * kk) % q) * (q - 1);
    sum.add(unit_root(num, m));
  }
  return sum.value();
}

std::complex<double> root_number(const DirichletCharacter& chi) {
  const std::complex<double> i_pow = chi.parity() == 1 ? std::complex<double>{0.0, -1.0}
                                                       : std::complex<double>{1.0, 0.0};
  return i_pow * gauss_sum(1, chi) / std::sqrt(static_cast<double>(chi.modulus()));
}

}  // namespace lzw
