#include "tables.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace lzw::detail {

namespace {

std::size_t grown(std::size_t have, std::size_t want) {
  std::size_t size = std::max<std::size_t>(have, 1024);
  while (size < want) size *= 2;
  return size;
}

}  // namespace

std::shared_ptr<const std::vector<double>> log_table(std::size_t n) {
  static std::mutex mutex;
  static std::shared_ptr<const std::vector<double>> table = std::make_shared<std::vector<double>>();
  std::lock_guard lock(mutex);
  if (table->size() >= n) return table;
  auto next = std::make_shared<std::vector<double>>(grown(table->size(), n));
  for (std::size_t k = 0; k < next->size(); ++k) (*next)[k] = std::log(static_cast<double>(k + 1));
  table = next;
  return table;
}

std::shared_ptr<const CharacterWeights> character_weights(const DirichletCharacter& chi, std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const CharacterWeights>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{chi.modulus(), chi.index()}];
  if (slot && slot->re.size() >= n) return slot;
  const std::size_t size = grown(slot ? slot->re.size() : 0, n);
  const auto q = static_cast<std::size_t>(chi.modulus());
  std::vector<std::complex<double>> period(q);
  for (std::size_t r = 0; r < q; ++r) period[r] = chi(static_cast<std::int64_t>(r));
  auto next = std::make_shared<CharacterWeights>();
  next->re.resize(size);
  next->im.resize(size);
  for (std::size_t k = 0; k < size; ++k) {
    const auto v = period[(k + 1) % q];
    next->re[k] = v.real();
    next->im[k] = v.imag();
  }
  slot = next;
  return slot;
}

}  // namespace lzw::detail
