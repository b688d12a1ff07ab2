#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "tetravex/instance.hpp"

namespace tvx {

enum class SolveStatus { Solvable, Unsolvable, LimitReached };

std::string_view to_string(SolveStatus status);

struct SearchStats {
  /// Every candidate placement attempt, successful or not.
  std::uint64_t nodes_expanded = 0;
  /// Largest number of simultaneously placed cells.
  int max_depth = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsolvable;
  /// Type-level distinct tilings found, at most the requested limit.
  std::uint64_t count = 0;
  std::vector<Tiling> witnesses;
  SearchStats stats;
};

inline constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

/// Exhaustive backtracking over cells in row-major order.
///
/// Two tilings are distinct iff some cell holds a different tile type, so
/// identical tiles are never branched on separately. The search stops once
/// `limit` tilings are found (status LimitReached) and keeps the first
/// `collect` of them. Deterministic: candidates are tried in canonical tile
/// order. Throws InvalidArgument unless 1 <= limit and collect <= limit.
SolveResult solve(const Instance& instance, std::uint64_t limit = kNoLimit,
                  std::uint64_t collect = 0);

/// solve(instance, 2).count == 1.
bool is_uniquely_solvable(const Instance& instance);

/// Largest board brute_force_count will enumerate.
inline constexpr std::size_t kBruteForceMaxCells = 9;

/// Independent oracle: enumerates every distinct arrangement of the tile
/// multiset and checks each with validate_tiling. No pruning and nothing
/// shared with solve(). Throws Refusal above kBruteForceMaxCells cells.
std::uint64_t brute_force_count(const Instance& instance);

}  // namespace tvx
