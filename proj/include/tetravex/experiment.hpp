#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tetravex/generator.hpp"

namespace tvx {

struct BoardSize {
  int width = 1;
  int height = 1;
};

struct ExperimentSpec {
  std::vector<GenMode> modes;
  std::vector<BoardSize> sizes;
  std::vector<int> alphabets;
  int trials = 1;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct ExperimentRow {
  GenMode mode = GenMode::Shredded;
  int width = 0;
  int height = 0;
  int alphabet = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  double solvable_frac = 0;
  double unique_frac = 0;
  double mean_nodes = 0;
  /// Wall-clock, informational only.
  double mean_micros = 0;
};

/// One row per (mode, size, alphabet), in that nesting order. Trial k of a
/// row uses seed derive_seed(spec.seed, k) and is solved with limit 2.
/// Rows do not depend on the thread count or scheduling (timing aside).
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

inline constexpr const char* kExperimentCsvHeader =
    "mode,width,height,alphabet,seed,trials,solvable_frac,unique_frac,mean_nodes,mean_micros";

/// Header line plus one line per row; fractions with 6 decimals.
std::string experiment_csv(const std::vector<ExperimentRow>& rows);

/// "WxH" -> size; throws InvalidArgument.
BoardSize parse_board_size(std::string_view text);

}  // namespace tvx
