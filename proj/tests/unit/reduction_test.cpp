#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "tetravex/error.hpp"
#include "tetravex/reduction.hpp"
#include "tetravex/rng.hpp"
#include "tetravex/solver.hpp"
#include "tetravex/text_format.hpp"

using namespace tvx;

namespace {

const OneInThreeInstance kSat = parse_1in3("p 1in3 3 1\n1 2 3\n");
const OneInThreeInstance kUnsat = parse_1in3("p 1in3 1 1\n1 1 1\n");
const OneInThreeInstance kTwoClauses = parse_1in3("p 1in3 4 2\n1 2 3\n1 2 4\n");

std::vector<OneInThreeInstance> random_formulas(int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<OneInThreeInstance> out;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform(3));
    const int m = 1 + static_cast<int>(rng.uniform(2));
    out.push_back(random_formula(n, m, rng));
  }
  return out;
}

std::vector<Tile> sorted(std::vector<Tile> tiles) {
  std::sort(tiles.begin(), tiles.end());
  return tiles;
}

std::vector<Tile> sorted(std::span<const Tile> tiles) { return sorted(std::vector<Tile>(tiles.begin(), tiles.end())); }

std::uint64_t factorial(int k) { return k <= 1 ? 1 : static_cast<std::uint64_t>(k) * factorial(k - 1); }

}  // namespace

TEST(Counts, PublishedFormulas) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const CountReport e = expected_counts(n, m);
      EXPECT_EQ(e.width, 4 * n + 2);
      EXPECT_EQ(e.height, 12 * m + 1);
      EXPECT_EQ(e.junction_tiles, 12 * m);
      EXPECT_EQ(e.vertical_wire_cells, 24 * n * m - 12 * m);
      EXPECT_EQ(e.horizontal_wire_cells, 24 * n * m - 6 * m);
      EXPECT_EQ(e.total_tiles, e.width * e.height);
      EXPECT_EQ(e.assignment_tiles + e.clause_tiles + e.junction_tiles + e.pure_vertical_cells +
                    e.pure_horizontal_cells + e.crossing_cells + e.filler_tiles,
                e.total_tiles);
    }
  }
}

TEST(Counts, SmallCases) {
  const CountReport one = expected_counts(1, 1);
  EXPECT_EQ(one.total_tiles, 78);
  EXPECT_EQ(one.junction_tiles, 12);
  EXPECT_EQ(one.vertical_wire_cells, 12);
  EXPECT_EQ(one.horizontal_wire_cells, 18);
  EXPECT_EQ(one.crossing_cells, 0);
  EXPECT_EQ(one.filler_tiles, 18);
  EXPECT_EQ(one.assignment_tiles, 6);
  EXPECT_EQ(one.clause_tiles, 12);

  const CountReport two = expected_counts(2, 1);
  EXPECT_EQ(two.vertical_wire_cells, 36);
  EXPECT_EQ(two.horizontal_wire_cells, 42);
  EXPECT_EQ(two.crossing_cells, 12);
  EXPECT_THROW(expected_counts(0, 1), InvalidArgument);
}

TEST(Counts, RoleTalliesMatchForEveryShape) {
  SplitMix64 rng(21);
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const OneInThreeInstance f = random_formula(n, m, rng);
      for (Boundary b : {Boundary::Bordered, Boundary::Toroidal}) {
        const Reduction r = reduce(f, {b});
        const CountReport tally = tally_roles(r.map);
        CountReport expected = expected_counts(n, m);
        if (b == Boundary::Toroidal) {
          // The terminator row and column are extra cells outside every category.
          expected.width += 1;
          expected.height += 1;
          expected.total_tiles = expected.width * expected.height;
        }
        EXPECT_EQ(tally.width, expected.width);
        EXPECT_EQ(tally.height, expected.height);
        EXPECT_EQ(r.instance.width(), expected.width);
        EXPECT_EQ(r.instance.height(), expected.height);
        if (b == Boundary::Bordered) {
          EXPECT_EQ(tally, expected);
        }
        EXPECT_EQ(tally.junction_tiles, expected.junction_tiles);
        EXPECT_EQ(tally.vertical_wire_cells, expected.vertical_wire_cells);
        EXPECT_EQ(tally.horizontal_wire_cells, expected.horizontal_wire_cells);
        EXPECT_EQ(tally.crossing_cells, expected.crossing_cells);
      }
    }
  }
}

TEST(Reduce, SmallestBoard) {
  const Reduction r = reduce(kUnsat);
  EXPECT_EQ(r.instance.width(), 6);
  EXPECT_EQ(r.instance.height(), 13);
  EXPECT_EQ(r.instance.cell_count(), 78u);
  EXPECT_EQ(r.map, build_role_map(kUnsat, Boundary::Bordered));
}

TEST(Reduce, MultisetDoesNotDependOnEnumerationOrder) {
  for (const OneInThreeInstance& f : {kSat, kUnsat, kTwoClauses}) {
    const Reduction r = reduce(f);
    std::vector<Tile> row_major;
    std::vector<Tile> column_major_reversed;
    for (int row = 0; row < r.map.height; ++row) {
      for (int col = 0; col < r.map.width; ++col) row_major.push_back(emitted_tile(r.map, row, col));
    }
    for (int col = r.map.width; col-- > 0;) {
      for (int row = r.map.height; row-- > 0;) column_major_reversed.push_back(emitted_tile(r.map, row, col));
    }
    const Instance a(r.map.width, r.map.height, Boundary::Bordered, row_major);
    const Instance b(r.map.width, r.map.height, Boundary::Bordered, column_major_reversed);
    EXPECT_EQ(serialize_instance(a), serialize_instance(b));
    EXPECT_EQ(serialize_instance(a), serialize_instance(r.instance));
    EXPECT_EQ(serialize_instance(reduce(f).instance), serialize_instance(r.instance));
  }
}

TEST(Reduce, EveryWitnessUsesTheSameMultiset) {
  for (const OneInThreeInstance& f : random_formulas(20, 22)) {
    const Reduction r = reduce(f);
    for (const Assignment& a : sat_oracle(f)) {
      const Tiling t = layout_witness(r.map, a);
      EXPECT_EQ(sorted(t.cells()), sorted(r.instance.tiles()));
    }
  }
}

TEST(Reduce, SentinelDiscipline) {
  for (const OneInThreeInstance& f : random_formulas(10, 23)) {
    for (const Tile& t : reduce(f).instance.tiles()) {
      EXPECT_NE(t.bottom, Label::top());
      EXPECT_NE(t.right, Label::left());
      EXPECT_NE(t.left, Label::right());
    }
  }
}

TEST(Reduce, PaddingOnlyBreaksSentinelsAtTheDock) {
  // The docking column (or row) of the padding block faces the original's
  // Left (or Top) edge; nothing else may carry a sentinel on the wrong side.
  for (const char* text : {"p 1in3 2 1\n1 2 2\n", "p 1in3 4 1\n1 2 3\n"}) {
    const Reduction r = reduce(parse_1in3(text), {Boundary::Bordered, true});
    const bool tall = r.map.col_offset > 0;
    int docking = 0;
    for (const Tile& t : r.instance.tiles()) {
      EXPECT_NE(t.left, Label::right());
      if (t.right == Label::left() || t.bottom == Label::top()) {
        ++docking;
        EXPECT_EQ(t.right == Label::left(), tall);
        EXPECT_EQ(t.bottom == Label::top(), !tall);
      }
    }
    EXPECT_EQ(docking, r.instance.width());
  }
}

TEST(Reduce, JunctionsSitOnTheirWires) {
  const Reduction r = reduce(kTwoClauses);
  std::map<std::pair<int, int>, int> var_column;  // (var, side) -> column
  std::map<std::tuple<int, int, int>, int> slot_row;  // (clause, slot, row) -> row
  for (int row = 0; row < r.map.height; ++row) {
    for (int col = 0; col < r.map.width; ++col) {
      const CellRole& role = r.map.at(row, col);
      if (role.kind == RoleKind::VerticalWire || role.kind == RoleKind::Crossing) {
        auto [it, fresh] = var_column.emplace(std::pair{role.var, role.side}, col);
        EXPECT_EQ(it->second, col);
      }
      if (role.kind == RoleKind::HorizontalWire || role.kind == RoleKind::Crossing) {
        auto [it, fresh] = slot_row.emplace(std::tuple{role.clause, role.slot, role.row}, row);
        EXPECT_EQ(it->second, row);
      }
    }
  }
  int junctions = 0;
  for (int row = 0; row < r.map.height; ++row) {
    for (int col = 0; col < r.map.width; ++col) {
      const CellRole& role = r.map.at(row, col);
      if (role.kind != RoleKind::Junction) continue;
      ++junctions;
      const int var = kTwoClauses.clauses[static_cast<std::size_t>(role.clause - 1)][static_cast<std::size_t>(role.slot - 1)];
      EXPECT_EQ(col, var_column.at({var, role.side}));
      EXPECT_EQ(row, slot_row.at({role.clause, role.slot, role.row}));
    }
  }
  EXPECT_EQ(junctions, 24);
}

TEST(Reduce, SatisfiableIffSolvable) {
  std::vector<OneInThreeInstance> formulas = random_formulas(40, 24);
  formulas.push_back(kSat);
  formulas.push_back(kUnsat);
  for (const OneInThreeInstance& f : formulas) {
    const bool satisfiable = !sat_oracle(f).empty();
    EXPECT_EQ(solve(reduce(f).instance, 1).count > 0, satisfiable) << serialize_1in3(f);
  }
}

TEST(Reduce, SatisfiableIffSolvableForVariants) {
  std::vector<OneInThreeInstance> formulas = random_formulas(8, 25);
  formulas.push_back(kSat);
  formulas.push_back(kUnsat);
  for (const OneInThreeInstance& f : formulas) {
    const bool satisfiable = !sat_oracle(f).empty();
    const Instance torus = reduce(f, {Boundary::Toroidal}).instance;
    const Instance square = reduce(f, {Boundary::Bordered, true}).instance;
    EXPECT_EQ(square.width(), square.height());
    EXPECT_EQ(torus.boundary(), Boundary::Toroidal);
    EXPECT_EQ(solve(torus, 1).count > 0, satisfiable) << serialize_1in3(f);
    EXPECT_EQ(solve(square, 1).count > 0, satisfiable) << serialize_1in3(f);
  }
}

// Junction halves on the same variable can trade places, left halves among
// themselves and right halves among themselves, so each variable with k
// occurrences multiplies the count by (k!)^2.
TEST(Reduce, TilingCountIsSolutionsTimesJunctionExchanges) {
  std::vector<OneInThreeInstance> formulas = random_formulas(30, 26);
  formulas.push_back(kSat);
  formulas.push_back(kTwoClauses);
  for (const OneInThreeInstance& f : formulas) {
    std::map<int, int> occurrences;
    for (const auto& c : f.clauses) {
      for (int v : c) ++occurrences[v];
    }
    std::uint64_t exchanges = 1;
    for (auto [v, k] : occurrences) exchanges *= factorial(k) * factorial(k);
    const std::uint64_t expected = sat_oracle(f).size() * exchanges;
    EXPECT_EQ(solve(reduce(f).instance).count, expected) << serialize_1in3(f);
  }
}

TEST(Witness, RoundTripsThroughDecode) {
  std::vector<OneInThreeInstance> formulas = random_formulas(20, 27);
  formulas.push_back(kSat);
  formulas.push_back(kTwoClauses);
  for (const OneInThreeInstance& f : formulas) {
    for (const ReduceOptions& options : {ReduceOptions{Boundary::Bordered, false}, ReduceOptions{Boundary::Bordered, true},
                                         ReduceOptions{Boundary::Toroidal, false}}) {
      const Reduction r = reduce(f, options);
      for (const Assignment& a : sat_oracle(f)) {
        const Tiling t = layout_witness(f, a, options);
        EXPECT_TRUE(validate_tiling(r.instance, t).valid) << serialize_1in3(f) << to_string(a);
        EXPECT_EQ(decode_assignment(r.map, t), a);
        EXPECT_EQ(parse_tiling(serialize_tiling(t), r.instance), t);
      }
    }
  }
}

TEST(Witness, Examples) {
  const Reduction r = reduce(kSat);
  EXPECT_TRUE(validate_tiling(r.instance, layout_witness(kSat, parse_assignment("100"))).valid);
  EXPECT_EQ(decode_assignment(r.map, layout_witness(kSat, parse_assignment("010"))), parse_assignment("010"));
  EXPECT_THROW(layout_witness(kSat, parse_assignment("110")), InvalidArgument);
  EXPECT_THROW(layout_witness(kSat, parse_assignment("10")), InvalidArgument);
  const Reduction two = reduce(kTwoClauses);
  EXPECT_TRUE(validate_tiling(two.instance, layout_witness(kTwoClauses, parse_assignment("0011"))).valid);
}

TEST(Witness, SolverTilingsDecodeToSolutions) {
  for (const OneInThreeInstance& f : {kSat, kTwoClauses}) {
    const Reduction r = reduce(f);
    const auto solutions = sat_oracle(f);
    const SolveResult s = solve(r.instance, kNoLimit, kNoLimit);
    ASSERT_FALSE(s.witnesses.empty());
    std::set<std::string> seen;
    for (const Tiling& t : s.witnesses) {
      const Assignment a = decode_assignment(r.map, t);
      EXPECT_NE(std::find(solutions.begin(), solutions.end(), a), solutions.end());
      seen.insert(to_string(a));
    }
    EXPECT_EQ(seen.size(), solutions.size());
  }
}

TEST(Witness, CorruptGridIsRejected) {
  const Reduction r = reduce(kSat);
  const Tiling zeros(r.map.width, r.map.height,
                     std::vector<Tile>(r.instance.cell_count(), num_tile(0, 0, 0, 0)));
  EXPECT_THROW(decode_assignment(r.map, zeros), InvalidArgument);
  EXPECT_THROW(decode_assignment(r.map, Tiling(1, 1, {num_tile(0, 0, 0, 0)})), InvalidArgument);
}

TEST(Padding, SmallestBoardBecomesSquare) {
  const Reduction r = reduce(kUnsat);
  const Instance padded = pad_to_square(r.instance, r.map);
  EXPECT_EQ(padded.width(), 13);
  EXPECT_EQ(padded.height(), 13);
  EXPECT_EQ(padded.cell_count(), 169u);
  EXPECT_EQ(padded, reduce(kUnsat, {Boundary::Bordered, true}).instance);
}

TEST(Padding, WideBoardsGrowDownwards) {
  // 4n+2 > 12m+1 once n >= 3 with m = 1.
  const OneInThreeInstance f = parse_1in3("p 1in3 4 1\n1 2 3\n");
  const Reduction r = reduce(f, {Boundary::Bordered, true});
  EXPECT_EQ(r.instance.width(), 18);
  EXPECT_EQ(r.instance.height(), 18);
  EXPECT_EQ(r.map.row_offset, 5);
  EXPECT_EQ(solve(r.instance, 1).count, 1u);
}

TEST(Padding, FreshLabelsAreDisjoint) {
  for (const OneInThreeInstance& f : {kSat, kUnsat, kTwoClauses}) {
    const Reduction r = reduce(f);
    std::set<Label> original;
    for (const Tile& t : r.instance.tiles()) original.insert({t.top, t.right, t.bottom, t.left});
    const Instance padded = reduce(f, {Boundary::Bordered, true}).instance;
    std::multiset<Tile> added(padded.tiles().begin(), padded.tiles().end());
    for (const Tile& t : r.instance.tiles()) added.erase(added.find(t));
    EXPECT_EQ(added.size(), static_cast<std::size_t>(std::max(r.map.width, r.map.height)) *
                                static_cast<std::size_t>(std::abs(r.map.width - r.map.height)));
    for (const Tile& t : added) {
      for (Label l : {t.top, t.right, t.bottom, t.left}) {
        // The docking face is the only place padding touches a shared label.
        if (l == Label::left() || l == Label::top()) continue;
        EXPECT_FALSE(original.count(l)) << to_string(t);
        EXPECT_TRUE(l.is_num());
        EXPECT_NE(l, Label::num(0));
      }
    }
  }
}

TEST(Padding, Refusals) {
  const Reduction torus = reduce(kSat, {Boundary::Toroidal});
  EXPECT_THROW(pad_to_square(torus.instance, torus.map), Refusal);
  EXPECT_THROW(reduce(kSat, {Boundary::Toroidal, true}), InvalidArgument);
  const Reduction padded = reduce(kSat, {Boundary::Bordered, true});
  EXPECT_THROW(pad_to_square(padded.instance, padded.map), Refusal);
}

TEST(RoleMap, TextRoundTrip) {
  for (const ReduceOptions& options : {ReduceOptions{Boundary::Bordered, false}, ReduceOptions{Boundary::Bordered, true},
                                       ReduceOptions{Boundary::Toroidal, false},
                                       ReduceOptions{Boundary::Bordered, false, LabelScheme::ZeroFill}}) {
    const ReductionMap map = reduce(kTwoClauses, options).map;
    EXPECT_EQ(parse_role_map(serialize_role_map(map)), map);
  }
  for (const CellRole& role : reduce(kTwoClauses, {Boundary::Toroidal}).map.roles) {
    EXPECT_EQ(parse_role_token(role_token(role)), role);
  }
  EXPECT_THROW(parse_role_token("nonsense"), InvalidArgument);
  EXPECT_THROW(parse_role_map("tvxroles 2\n"), ParseError);
}

TEST(RoleMap, PaddingFromTheMapMatchesDirectPadding) {
  const Reduction r = reduce(kTwoClauses);
  const ReductionMap padded_map = pad_map_to_square(r.map, r.instance);
  EXPECT_EQ(padded_map, reduce(kTwoClauses, {Boundary::Bordered, true}).map);
  std::vector<Tile> tiles;
  for (int row = 0; row < padded_map.height; ++row) {
    for (int col = 0; col < padded_map.width; ++col) tiles.push_back(emitted_tile(padded_map, row, col));
  }
  EXPECT_EQ(sorted(tiles), sorted(pad_to_square(r.instance, r.map).tiles()));
}

// The zero-filled labelling keeps the same geometry but lets rows and wires
// slide; a formula with no solution then still tiles.
TEST(ZeroFill, IsNotSound) {
  const Reduction r = reduce(kUnsat, {Boundary::Bordered, false, LabelScheme::ZeroFill});
  EXPECT_EQ(tally_roles(r.map), expected_counts(1, 1));
  const SolveResult s = solve(r.instance, 1, 1);
  ASSERT_EQ(s.count, 1u);
  EXPECT_TRUE(validate_tiling(r.instance, s.witnesses.front()).valid);
  EXPECT_TRUE(sat_oracle(kUnsat).empty());
}

TEST(ZeroFill, WitnessesStillValidate) {
  const ReduceOptions options{Boundary::Bordered, false, LabelScheme::ZeroFill};
  const Reduction r = reduce(kTwoClauses, options);
  for (const Assignment& a : sat_oracle(kTwoClauses)) {
    EXPECT_TRUE(validate_tiling(r.instance, layout_witness(kTwoClauses, a, options)).valid);
  }
}
