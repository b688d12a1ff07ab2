#include <algorithm>
#include <string>
#include <vector>

#include "tetravex/error.hpp"
#include "tetravex/solver.hpp"

namespace tvx {

std::uint64_t brute_force_count(const Instance& instance) {
  if (instance.cell_count() > kBruteForceMaxCells) {
    throw Refusal("brute_force_count: " + std::to_string(instance.cell_count()) +
                  " cells exceeds the limit of " + std::to_string(kBruteForceMaxCells));
  }
  // next_permutation over a sorted multiset visits each distinct
  // arrangement exactly once, which is type-level counting.
  std::vector<Tile> arrangement(instance.tiles().begin(), instance.tiles().end());
  std::uint64_t count = 0;
  do {
    const Tiling tiling(instance.width(), instance.height(), arrangement);
    if (validate_tiling(instance, tiling).valid) ++count;
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return count;
}

}  // namespace tvx
