#include "tetravex/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>

#include "gadgets.hpp"
#include "tetravex/error.hpp"

namespace tvx {

namespace detail {

Polarity reference_polarity(const ReductionMap& map) {
  Polarity p;
  p.var_true.assign(static_cast<std::size_t>(map.formula.n), true);
  p.slot_true.assign(static_cast<std::size_t>(map.formula.m()), {true, false, false});
  return p;
}

Polarity assignment_polarity(const ReductionMap& map, const Assignment& a) {
  Polarity p;
  p.var_true = a.values;
  for (const auto& clause : map.formula.clauses) {
    p.slot_true.push_back({a[clause[0]], a[clause[1]], a[clause[2]]});
  }
  return p;
}

Tile padding_tile(const ReductionMap& map, int row, int col);  // padding.cpp

namespace {

Label num(std::int64_t v) { return Label::num(v); }

struct Gadgets {
  const ReductionMap& map;
  const Polarity& pol;
  // Dimensions of the unpadded construction (terminators included).
  int width;
  int height;
  bool torus = map.boundary == Boundary::Toroidal;
  bool rigid = map.labels == LabelScheme::Rigid;
  std::int64_t base = map.plan.max_label() + 1;

  // Sentinels become plain 0 on a torus.
  Label top() const { return torus ? num(0) : Label::top(); }
  Label left() const { return torus ? num(0) : Label::left(); }
  Label right() const { return torus ? num(0) : Label::right(); }

  int sign(int var) const { return pol.var_true[static_cast<std::size_t>(var - 1)] ? 1 : -1; }
  int slot_var(int p, int s) const {
    return map.formula.clauses[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(s - 1)];
  }

  // Label carried by a vertical wire column: true puts +i on the left column.
  std::int64_t column_label(int var, int side) const {
    return (side == 1 ? sign(var) : -sign(var)) * map.plan.variable(var);
  }
  // Label carried by a horizontal wire row: true puts +v on the upper row.
  std::int64_t row_label(int p, int s, int row) const {
    const int v = slot_var(p, s);
    return (row == 1 ? sign(v) : -sign(v)) * map.plan.variable(v);
  }

  // ---- position labels for faces that carry no signal (rigid scheme) ----
  //
  // Face h(r, c) is the top of cell (r, c); face v(r, c) is its left side.
  // Each gets its own label, except where two tiles must stay swappable:
  //   * across a vertical wire pair: the pair's left, middle and right faces
  //   * across a horizontal wire pair: the faces above, between and below
  //   * the right faces of a clause's four buffer cells (and, on a torus,
  //     the wrapped left faces of buffer and slot rows)
  //   * the top faces of a block's two middle tiles, and the bottom border
  //     under a wire pair.

  Label h_id(int r, int c) const { return num(base + std::int64_t{r} * width + c); }
  Label v_id(int r, int c) const {
    return num(base + std::int64_t{height + 1} * width + std::int64_t{r} * (width + 1) + c);
  }

  int clause_rows() const { return 12 * map.formula.m(); }
  // Variable whose wire pair occupies column c, or 0.
  int wire_var(int c) const {
    if (c < 2 || c > 4 * map.formula.n - 1) return 0;
    return (c - 2) % 4 <= 1 ? (c - 2) / 4 + 1 : 0;
  }
  // First row of the slot pair containing row r, or -1.
  int slot_first_row(int r) const {
    if (r < 1 || r > clause_rows()) return -1;
    const int o = (r - 1) % 12 + 1;
    if (o == 3 || o == 6 || o == 9) return r;
    if (o == 4 || o == 7 || o == 10) return r - 1;
    return -1;
  }
  // First buffer row of the clause owning buffer row r, or -1.
  int buffer_first_row(int r) const {
    if (r < 1 || r > clause_rows()) return -1;
    const int o = (r - 1) % 12 + 1;
    if (o == 2 || o == 5 || o == 8 || o == 11) return r - o + 2;
    return -1;
  }

  Label hface(int r, int c) const {
    if (torus && r == height) r = 0;
    if (!torus && r == 0) return Label::top();
    if (const int v = wire_var(c); v != 0 && (r == 0 || r == height)) return h_id(r, 4 * v - 2);
    if (wire_var(c) == 0) {
      if (const int first = slot_first_row(r); first >= 0) return h_id(first, c);
      if (const int first = slot_first_row(r - 1); first >= 0 && first == r - 2) return h_id(first, c);
    }
    return h_id(r, c);
  }

  Label vface(int r, int c) const {
    if (torus && c == width) c = 0;
    if (!torus && c == 0) return Label::left();
    if (!torus && c == width) return Label::right();
    if (c == 0 || c == 1) {
      if (const int first = buffer_first_row(r); first >= 0) return v_id(first, c);
    }
    if (c == 0) {
      if (const int first = slot_first_row(r); first >= 0) return v_id(first, 0);
    }
    if (r >= 1 && slot_first_row(r) < 0 && c >= 2 && c <= 4 * map.formula.n && (c - 2) % 4 <= 2) {
      return v_id(r, 4 * ((c - 2) / 4) + 2);
    }
    return v_id(r, c);
  }

  Tile plain(int r, int c) const { return {hface(r, c), vface(r, c + 1), hface(r + 1, c), vface(r, c)}; }

  // ---- gadgets ----

  Tile junction(int p, int s, int side, int row) const {
    // Arrangement for a false signal is the true one with v and j negated.
    const int v = slot_var(p, s);
    const std::int64_t u = sign(v) * map.plan.variable(v);
    const std::int64_t k = sign(v) * map.plan.junction(p, s);
    if (row == 1 && side == 1) return {num(u), num(-u), num(-k), num(u)};
    if (row == 1 && side == 2) return {num(-u), num(u), num(k), num(-u)};
    if (row == 2 && side == 1) return {num(-k), num(u), num(u), num(-u)};
    return {num(k), num(-u), num(-u), num(u)};
  }

  Tile clause_cell(int p, int offset, int r) const {
    const std::int64_t c = map.plan.clause(p);
    const auto& truth = pol.slot_true[static_cast<std::size_t>(p - 1)];
    const Label edge = rigid ? vface(r, 0) : left();
    const Label blank_right = rigid ? vface(r, 1) : num(0);
    // Edge label entering/leaving slot s: +c around the true slot, -c otherwise.
    auto entry = [&](int s) -> std::int64_t { return truth[static_cast<std::size_t>(s - 1)] ? c : -c; };
    auto buffer = [&](std::int64_t above, std::int64_t below) {
      return Tile{num(above), blank_right, num(below), edge};
    };
    switch (offset) {
      case 1:
        return {rigid ? hface(r, 0) : num(0), blank_right, num(-c), edge};
      case 2:
        return buffer(-c, entry(1));
      case 5:
        return buffer(entry(1), entry(2));
      case 8:
        return buffer(entry(2), entry(3));
      case 11:
        return buffer(entry(3), -c);
      case 12:
        return {num(-c), blank_right, rigid ? hface(r + 1, 0) : num(0), edge};
      default:
        break;
    }
    const int s = offset / 3;
    const bool upper = offset % 3 == 0;
    // The pair's right faces follow the slot's own truth value, which in a
    // witness equals the polarity of the wire it docks with.
    const std::int64_t e = entry(s);
    const std::int64_t v = map.plan.variable(slot_var(p, s));
    const std::int64_t h = truth[static_cast<std::size_t>(s - 1)] ? v : -v;
    return upper ? Tile{num(e), num(h), num(-e), edge} : Tile{num(-e), num(-h), num(e), edge};
  }

  Tile assignment_cell(int var, int index, int r, int c) const {
    const std::int64_t i = map.plan.variable(var);
    const Label roof = rigid ? hface(r, c) : top();
    switch (index) {
      case 1:
        return rigid ? Tile{roof, num(i), hface(r + 1, c), vface(r, c)} : Tile{roof, num(i), num(0), num(i)};
      case 2:
        return {roof, num(i), num(sign(var) * i), num(i)};
      case 3:
        return {roof, num(i), num(-sign(var) * i), num(i)};
      default:
        return rigid ? Tile{roof, vface(r, c + 1), hface(r + 1, c), num(i)}
                     : Tile{roof, num(i + 1), num(0), num(i)};
    }
  }

  Tile tile(const CellRole& role, int r, int c) const {
    const int n = map.formula.n;
    switch (role.kind) {
      case RoleKind::TopStart:
        return rigid ? plain(r, c) : Tile{top(), num(1), num(0), left()};
      case RoleKind::TopEnd:
        return rigid ? plain(r, c) : Tile{top(), right(), num(0), num(n + 1)};
      case RoleKind::AssignBlock:
        return assignment_cell(role.var, role.index, r, c);
      case RoleKind::ClauseCell:
        return clause_cell(role.clause, role.index, r);
      case RoleKind::VerticalWire: {
        const Label l = num(column_label(role.var, role.side));
        if (!rigid) return {l, num(0), l, num(0)};
        const bool last = !torus && r + 1 == height;
        return {l, vface(r, c + 1), last ? hface(r + 1, c) : l, vface(r, c)};
      }
      case RoleKind::HorizontalWire: {
        const Label h = num(row_label(role.clause, role.slot, role.row));
        if (!rigid) return {num(0), h, num(0), h};
        const bool last = !torus && c + 1 == width;
        return {hface(r, c), last ? vface(r, c + 1) : h, hface(r + 1, c), h};
      }
      case RoleKind::Crossing: {
        const auto l = column_label(role.var, role.side);
        const auto h = row_label(role.clause, role.slot, role.row);
        return {num(l), num(h), num(l), num(h)};
      }
      case RoleKind::Junction:
        return junction(role.clause, role.slot, role.side, role.row);
      case RoleKind::VerticalEnd: {
        const Label l = num(column_label(role.var, role.side));
        if (!rigid) return {l, num(0), num(0), num(0)};
        return {l, vface(r, c + 1), hface(r + 1, c), vface(r, c)};
      }
      case RoleKind::HorizontalEnd: {
        const Label h = num(row_label(role.clause, role.slot, role.row));
        if (!rigid) return {num(0), num(0), num(0), h};
        return {hface(r, c), vface(r, c + 1), hface(r + 1, c), h};
      }
      case RoleKind::Padding:
        break;  // handled by role_tile
      case RoleKind::Filler:
        return rigid ? plain(r, c) : num_tile(0, 0, 0, 0);
    }
    return num_tile(0, 0, 0, 0);
  }
};

}  // namespace

Tile role_tile(const ReductionMap& map, int row, int col, const Polarity& polarity) {
  const CellRole& role = map.at(row, col);
  if (role.kind == RoleKind::Padding) return padding_tile(map, row, col);
  const Gadgets g{map, polarity, map.width - map.col_offset, map.height - map.row_offset};
  return g.tile(role, row - map.row_offset, col - map.col_offset);
}

}  // namespace detail

std::string_view to_string(LabelScheme scheme) {
  return scheme == LabelScheme::Rigid ? "rigid" : "zerofill";
}

Tile emitted_tile(const ReductionMap& map, int row, int col) {
  return detail::role_tile(map, row, col, detail::reference_polarity(map));
}

namespace {

Instance instance_from_map(const ReductionMap& map) {
  const auto pol = detail::reference_polarity(map);
  std::vector<Tile> tiles;
  tiles.reserve(map.roles.size());
  for (int r = 0; r < map.height; ++r) {
    for (int c = 0; c < map.width; ++c) tiles.push_back(detail::role_tile(map, r, c, pol));
  }
  return Instance(map.width, map.height, map.boundary, std::move(tiles));
}

}  // namespace

Reduction reduce(const OneInThreeInstance& formula, ReduceOptions options) {
  if (options.pad_square && options.boundary != Boundary::Bordered) {
    throw InvalidArgument("square padding is only defined for the bordered reduction");
  }
  ReductionMap map = build_role_map(formula, options.boundary, options.labels);
  Instance instance = instance_from_map(map);
  if (options.pad_square) {
    Instance padded = pad_to_square(instance, map);
    ReductionMap padded_map = pad_map_to_square(map, instance);
    return {std::move(padded), std::move(padded_map)};
  }
  return {std::move(instance), std::move(map)};
}

CountReport expected_counts(int n, int m) {
  if (n < 1 || m < 1) throw InvalidArgument("expected_counts needs n, m >= 1");
  CountReport r;
  r.width = 4 * n + 2;
  r.height = 12 * m + 1;
  r.total_tiles = r.width * r.height;
  r.assignment_tiles = 4 * n + 2;
  r.clause_tiles = 12 * m;
  r.junction_tiles = 4 * 3 * m;
  r.vertical_wire_cells = 24 * n * m - 12 * m;
  r.horizontal_wire_cells = 24 * n * m - 6 * m;
  r.crossing_cells = 12 * n * m - 12 * m;
  r.pure_vertical_cells = r.vertical_wire_cells - r.crossing_cells;
  r.pure_horizontal_cells = r.horizontal_wire_cells - r.crossing_cells;
  r.filler_tiles = 12 * n * m + 6 * m;
  return r;
}

CountReport tally_roles(const ReductionMap& map) {
  CountReport r;
  r.width = map.width;
  r.height = map.height;
  r.total_tiles = static_cast<int>(map.roles.size());
  for (const CellRole& role : map.roles) {
    switch (role.kind) {
      case RoleKind::TopStart:
      case RoleKind::TopEnd:
      case RoleKind::AssignBlock:
        ++r.assignment_tiles;
        break;
      case RoleKind::ClauseCell:
        ++r.clause_tiles;
        break;
      case RoleKind::Junction:
        ++r.junction_tiles;
        break;
      case RoleKind::VerticalWire:
        ++r.pure_vertical_cells;
        break;
      case RoleKind::HorizontalWire:
        ++r.pure_horizontal_cells;
        break;
      case RoleKind::Crossing:
        ++r.crossing_cells;
        break;
      case RoleKind::Filler:
        ++r.filler_tiles;
        break;
      case RoleKind::VerticalEnd:
      case RoleKind::HorizontalEnd:
      case RoleKind::Padding:
        break;
    }
  }
  r.vertical_wire_cells = r.pure_vertical_cells + r.crossing_cells;
  r.horizontal_wire_cells = r.pure_horizontal_cells + r.crossing_cells;
  return r;
}

Tiling layout_witness(const ReductionMap& map, const Assignment& a) {
  if (a.values.size() != static_cast<std::size_t>(map.formula.n)) {
    throw InvalidArgument("assignment has " + std::to_string(a.values.size()) +
                          " values for " + std::to_string(map.formula.n) + " variables");
  }
  if (!satisfies(map.formula, a)) {
    throw InvalidArgument("assignment " + to_string(a) +
                          " does not make exactly one occurrence true in every clause");
  }
  const auto pol = detail::assignment_polarity(map, a);
  std::vector<Tile> cells;
  cells.reserve(map.roles.size());
  for (int r = 0; r < map.height; ++r) {
    for (int c = 0; c < map.width; ++c) cells.push_back(detail::role_tile(map, r, c, pol));
  }
  return Tiling(map.width, map.height, std::move(cells));
}

Tiling layout_witness(const OneInThreeInstance& formula, const Assignment& a,
                      ReduceOptions options) {
  return layout_witness(reduce(formula, options).map, a);
}

Assignment decode_assignment(const ReductionMap& map, const Tiling& tiling) {
  if (tiling.width() != map.width || tiling.height() != map.height) {
    throw InvalidArgument("tiling dims do not match the reduction map");
  }
  const int w = map.width;

  // Locate the two middle tiles of each block; they are unique in the multiset.
  struct Found {
    std::optional<CellPos> plus;
    std::optional<CellPos> minus;
    int duplicates = 0;
  };
  std::vector<Found> found(static_cast<std::size_t>(map.formula.n));
  for (int r = 0; r < tiling.height(); ++r) {
    for (int c = 0; c < w; ++c) {
      const Tile& t = tiling.at(r, c);
      // Only a block's middle tiles have left = right = i and bottom +-i.
      if (!t.left.is_num() || t.left != t.right || !t.bottom.is_num()) continue;
      const std::int64_t i = t.left.value();
      if (i < 1 || i > map.formula.n || std::llabs(t.bottom.value()) != i) continue;
      Found& f = found[static_cast<std::size_t>(i - 1)];
      auto& slot = t.bottom.value() > 0 ? f.plus : f.minus;
      if (slot) ++f.duplicates;
      slot = CellPos{r, c};
    }
  }

  Assignment a;
  for (int i = 1; i <= map.formula.n; ++i) {
    const Found& f = found[static_cast<std::size_t>(i - 1)];
    const std::string who = "variable " + std::to_string(i);
    if (!f.plus || !f.minus || f.duplicates > 0) {
      throw InvalidArgument("corrupt tiling: " + who + " does not have exactly one +i and one -i block tile");
    }
    if (f.plus->row != f.minus->row) {
      throw InvalidArgument("corrupt tiling: " + who + " block tiles are in different rows");
    }
    // Forward distance from the +i tile to the -i tile along the row.
    int forward = f.minus->col - f.plus->col;
    if (map.boundary == Boundary::Toroidal && forward < 0) forward += w;
    const int backward = map.boundary == Boundary::Toroidal ? w - forward : -forward;
    if (forward == 1 || forward == 2) {
      a.values.push_back(true);
    } else if (backward == 1 || backward == 2) {
      a.values.push_back(false);
    } else {
      throw InvalidArgument("corrupt tiling: " + who + " block tiles are not in one block");
    }
  }
  return a;
}

}  // namespace tvx
