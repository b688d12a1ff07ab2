#pragma once

// Internal to the reduction library: per-role tile formulas shared by the
// instance builder and the witness layout.

#include <array>
#include <vector>

#include "tetravex/reduction.hpp"

namespace tvx::detail {

/// Orientation of every gadget. For the emitted multiset any consistent
/// choice works because flipping a polarity only permutes tiles inside a
/// gadget; the witness layout uses the assignment's.
struct Polarity {
  std::vector<bool> var_true;                  // [i-1]
  std::vector<std::array<bool, 3>> slot_true;  // [p-1][s-1]
};

/// All variables true and, in every clause column, the first slot true.
Polarity reference_polarity(const ReductionMap& map);
Polarity assignment_polarity(const ReductionMap& map, const Assignment& a);

Tile role_tile(const ReductionMap& map, int row, int col, const Polarity& polarity);

/// Geometry of the unpadded construction.
inline int block_col(int var, int pos) { return 4 * var - 4 + pos; }  // pos 1..4
inline int wire_col(int var, int side) { return 4 * var - 3 + side; }  // side 1..2
inline int slot_row(int clause, int slot, int row) { return 12 * (clause - 1) + 3 * slot + row - 1; }
inline int clause_row(int clause, int offset) { return 12 * (clause - 1) + offset; }

}  // namespace tvx::detail
