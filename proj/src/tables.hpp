#pragma once

// Process-wide caches of per-integer data used by the Dirichlet polynomial
// kernels. Returned snapshots are immutable; a larger request swaps in a
// longer table without invalidating older snapshots.

#include <cstddef>
#include <memory>
#include <vector>

#include "lzw/characters.hpp"

namespace lzw::detail {

/// Entry k holds log(k + 1); size is at least n.
std::shared_ptr<const std::vector<double>> log_table(std::size_t n);

/// Entry k holds chi(k + 1); size is at least n.
struct CharacterWeights {
  std::vector<double> re;
  std::vector<double> im;
};
std::shared_ptr<const CharacterWeights> character_weights(const DirichletCharacter& chi, std::size_t n);

}  // namespace lzw::detail
