#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tetravex/instance.hpp"
#include "tetravex/one_in_three.hpp"

namespace tvx {

/// Label allocation. Variable i uses +-i, clause p uses +-(n+p) and the
/// junction for slot s of clause p uses +-(n+m+3(p-1)+s); the three ranges
/// are disjoint and every junction label exceeds n+m.
struct LabelPlan {
  int n = 0;
  int m = 0;

  [[nodiscard]] std::int64_t variable(int i) const noexcept { return i; }
  [[nodiscard]] std::int64_t clause(int p) const noexcept { return n + p; }
  [[nodiscard]] std::int64_t junction(int p, int slot) const noexcept {
    return n + m + 3 * (p - 1) + slot;
  }
  /// Largest absolute label used by the construction.
  [[nodiscard]] std::int64_t max_label() const noexcept { return junction(m, 3); }

  friend bool operator==(const LabelPlan&, const LabelPlan&) = default;
};

/// How faces that carry no signal are labelled.
///   Rigid  every such face gets a label derived from its position (faces
///          that must stay interchangeable share one), the right border is
///          Right and the bottom border uses labels that never occur as a
///          top. Only the intended binary choices remain free.
///   ZeroFill  every such face is 0 (the bare gadget tiles). Kept for
///          comparison: this labelling admits tilings for unsatisfiable
///          formulas such as {(1,1,1)}.
enum class LabelScheme { Rigid, ZeroFill };

std::string_view to_string(LabelScheme scheme);

enum class RoleKind {
  TopStart,
  AssignBlock,
  TopEnd,
  ClauseCell,
  VerticalWire,
  HorizontalWire,
  Crossing,
  Junction,
  Filler,
  VerticalEnd,    // toroidal terminator row
  HorizontalEnd,  // toroidal terminator column
  Padding,        // pad_to_square block
};

/// What a board cell is for. Which fields are meaningful depends on kind:
///   AssignBlock     var, index = position 1..4 inside the block
///   ClauseCell      clause, index = offset 1..12 from the clause's first row
///   VerticalWire    var, side (1 = left column of the pair, 2 = right)
///   HorizontalWire  clause, slot, row (1 = upper row of the pair, 2 = lower)
///   Crossing        var (of the vertical wire), clause, slot, side, row
///   Junction        clause, slot, side, row (the corner of the 2x2 block)
///   VerticalEnd     var, side
///   HorizontalEnd   clause, slot, row
struct CellRole {
  RoleKind kind = RoleKind::Filler;
  int var = 0;
  int clause = 0;
  int slot = 0;
  int index = 0;
  int side = 0;
  int row = 0;

  friend bool operator==(const CellRole&, const CellRole&) = default;
};

/// Debug token, e.g. "S", "A2.3", "C1.7", "V1.2", "H1.3.1", "X2.1.3.1.2",
/// "J1.2.ul", "F", "TV1.2", "TH1.1.2", "P".
std::string role_token(const CellRole& role);
/// Inverse of role_token; throws InvalidArgument.
CellRole parse_role_token(std::string_view token);

/// Per-cell roles tying a reduced board back to its 1-in-3 instance.
struct ReductionMap {
  int width = 0;
  int height = 0;
  Boundary boundary = Boundary::Bordered;
  LabelScheme labels = LabelScheme::Rigid;
  OneInThreeInstance formula;
  LabelPlan plan;
  std::vector<CellRole> roles;  // row-major
  // Position of the unpadded construction inside a padded board.
  int col_offset = 0;
  int row_offset = 0;
  // First fresh label of the padding block; 0 when unpadded.
  std::int64_t pad_base = 0;

  [[nodiscard]] const CellRole& at(int row, int col) const {
    return roles[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                 static_cast<std::size_t>(col)];
  }
  friend bool operator==(const ReductionMap&, const ReductionMap&) = default;
};

struct ReduceOptions {
  Boundary boundary = Boundary::Bordered;
  bool pad_square = false;
  LabelScheme labels = LabelScheme::Rigid;
};

struct Reduction {
  Instance instance;
  ReductionMap map;
};

/// Role geometry only (no tiles). Bordered: (4n+2) x (12m+1). Toroidal adds a
/// terminator column and row.
ReductionMap build_role_map(const OneInThreeInstance& formula, Boundary boundary,
                            LabelScheme labels = LabelScheme::Rigid);

/// The gadget tile emitted for one cell's role, independent of any truth
/// assignment. The multiset over all cells is the reduced instance.
Tile emitted_tile(const ReductionMap& map, int row, int col);

/// Compiles a positive 1-in-3 instance into a Tetravex instance. pad_square
/// requires the bordered boundary (throws InvalidArgument otherwise).
Reduction reduce(const OneInThreeInstance& formula, ReduceOptions options = {});

struct CountReport {
  int width = 0;
  int height = 0;
  int total_tiles = 0;
  int assignment_tiles = 0;  // row 0, including start and end tiles
  int clause_tiles = 0;
  int junction_tiles = 0;
  /// Wire categories as counted in the construction's arithmetic: both
  /// include the non-junction crossing cells.
  int vertical_wire_cells = 0;
  int horizontal_wire_cells = 0;
  int crossing_cells = 0;
  /// One role per cell: wires without the crossings.
  int pure_vertical_cells = 0;
  int pure_horizontal_cells = 0;
  int filler_tiles = 0;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Closed-form counts for the bordered construction. Requires n, m >= 1.
CountReport expected_counts(int n, int m);
/// Counts by walking the roles of a (bordered, unpadded) map.
CountReport tally_roles(const ReductionMap& map);

/// A valid tiling of the reduced instance in which the assignment blocks,
/// wires, junctions and clause columns follow `a`. Throws InvalidArgument if
/// `a` does not 1-in-3-satisfy the formula.
Tiling layout_witness(const ReductionMap& map, const Assignment& a);
Tiling layout_witness(const OneInThreeInstance& formula, const Assignment& a,
                      ReduceOptions options = {});

/// Reads the truth values back from a valid tiling of the reduced instance:
/// variable i is true iff the block tile with bottom +i sits left of the one
/// with bottom -i (cyclically, on a torus). Under the rigid labels these are
/// the block's two middle cells; under ZeroFill the block tiles can
/// shift, so the two tiles are located wherever they are. Throws
/// InvalidArgument when they are missing, duplicated or not within one block
/// width of each other in one row.
Assignment decode_assignment(const ReductionMap& map, const Tiling& tiling);

/// Pads a bordered reduction instance to a square by docking a rigid block
/// of fresh-label tiles onto its constant Left (or Top) sentinel edge.
/// Square input is returned unchanged. Throws Refusal for instances that do
/// not have the sentinel edge, or a map whose dims/boundary disagree.
Instance pad_to_square(const Instance& instance, const ReductionMap& map);
/// The role map matching pad_to_square's output.
ReductionMap pad_map_to_square(const ReductionMap& map, const Instance& instance);

// Role map text file:
//   tvxroles 1
//   dims <W> <H>
//   boundary bordered|toroidal
//   labels rigid|zerofill
//   origin <col_offset> <row_offset>
//   padbase <first fresh label, 0 if none>
//   p 1in3 <n> <m>
//   <m clause lines>
//   <H lines of W role tokens>
std::string serialize_role_map(const ReductionMap& map);
ReductionMap parse_role_map(std::string_view text);

}  // namespace tvx
