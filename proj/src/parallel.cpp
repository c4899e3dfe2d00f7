#include "lzw/parallel.hpp"

#include <atomic>

namespace lzw {
namespace {
std::atomic<unsigned> configured{0};
}

unsigned thread_count() noexcept {
  const unsigned n = configured.load(std::memory_order_relaxed);
  if (n != 0) return n;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void set_thread_count(unsigned n) noexcept { configured.store(n, std::memory_order_relaxed); }

}  // namespace lzw
