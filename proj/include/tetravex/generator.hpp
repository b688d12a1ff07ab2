#pragma once

#include <cstdint>
#include <string_view>

#include "tetravex/instance.hpp"

namespace tvx {

enum class GenMode { Shredded, Iid };

std::string_view to_string(GenMode mode);
/// "shredded" or "iid"; throws InvalidArgument otherwise.
GenMode parse_gen_mode(std::string_view text);

struct GenConfig {
  int width = 1;
  int height = 1;
  /// Labels are drawn from 0..alphabet-1.
  int alphabet = 1;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::Shredded;
};

/// A board and the instance cut from it.
struct ShreddedBoard {
  Instance instance;
  Tiling board;
};

/// Draws every edge of the grid (horizontal edges row by row for r = 0..H,
/// then vertical edges row by row for c = 0..W) from one SplitMix64 stream,
/// cuts the grid into tiles and Fisher-Yates shuffles them with the same
/// stream. Bordered. Throws InvalidArgument on a bad config.
Instance generate_shredded(const GenConfig& cfg);
ShreddedBoard generate_shredded_board(const GenConfig& cfg);

/// Width x height tiles, each with top, right, bottom, left drawn in that
/// order. No solvability guarantee.
Instance generate_iid(const GenConfig& cfg);

/// Dispatches on cfg.mode.
Instance generate(const GenConfig& cfg);

/// Tries generate_shredded with seeds seed, seed+1, ... and returns the
/// first uniquely solvable instance. Throws Error after `budget` misses.
Instance generate_unique(const GenConfig& cfg, int budget);

}  // namespace tvx
