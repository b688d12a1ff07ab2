#include <charconv>
#include <string>

#include "gadgets.hpp"
#include "tetravex/error.hpp"
#include "tetravex/reduction.hpp"
#include "tetravex/text_lines.hpp"

namespace tvx {

using detail::block_col;
using detail::clause_row;
using detail::slot_row;
using detail::wire_col;

ReductionMap build_role_map(const OneInThreeInstance& formula, Boundary boundary,
                            LabelScheme labels) {
  check(formula);
  const int n = formula.n;
  const int m = formula.m();
  const bool torus = boundary == Boundary::Toroidal;

  ReductionMap map;
  map.width = 4 * n + 2 + (torus ? 1 : 0);
  map.height = 12 * m + 1 + (torus ? 1 : 0);
  map.boundary = boundary;
  map.labels = labels;
  map.formula = formula;
  map.plan = LabelPlan{n, m};
  map.roles.assign(static_cast<std::size_t>(map.width) * static_cast<std::size_t>(map.height),
                   CellRole{});
  auto role = [&](int r, int c) -> CellRole& {
    return map.roles[static_cast<std::size_t>(r) * static_cast<std::size_t>(map.width) +
                     static_cast<std::size_t>(c)];
  };

  // Row 0: start tile, one 4-tile block per variable, end tile.
  role(0, 0) = {.kind = RoleKind::TopStart};
  for (int i = 1; i <= n; ++i) {
    for (int pos = 1; pos <= 4; ++pos) {
      role(0, block_col(i, pos)) = {.kind = RoleKind::AssignBlock, .var = i, .index = pos};
    }
  }
  role(0, 4 * n + 1) = {.kind = RoleKind::TopEnd};

  // Column 0: one 12-cell clause component per clause.
  for (int p = 1; p <= m; ++p) {
    for (int off = 1; off <= 12; ++off) {
      role(clause_row(p, off), 0) = {.kind = RoleKind::ClauseCell, .clause = p, .index = off};
    }
  }

  // Vertical wires run the full clause height under the block's middle cells.
  for (int i = 1; i <= n; ++i) {
    for (int side = 1; side <= 2; ++side) {
      for (int r = 1; r <= 12 * m; ++r) {
        role(r, wire_col(i, side)) = {.kind = RoleKind::VerticalWire, .var = i, .side = side};
      }
    }
  }

  // Horizontal wires: two rows per slot, crossing every other variable's
  // wire and meeting their own variable's wire in a 2x2 junction.
  for (int p = 1; p <= m; ++p) {
    for (int s = 1; s <= 3; ++s) {
      const int v = formula.clauses[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(s - 1)];
      for (int row = 1; row <= 2; ++row) {
        const int r = slot_row(p, s, row);
        for (int c = 1; c <= 4 * n + 1; ++c) {
          CellRole& cell = role(r, c);
          if (cell.kind == RoleKind::VerticalWire) {
            if (cell.var == v) {
              cell = {.kind = RoleKind::Junction, .clause = p, .slot = s, .side = cell.side, .row = row};
            } else {
              cell = {.kind = RoleKind::Crossing, .var = cell.var, .clause = p, .slot = s,
                      .side = cell.side, .row = row};
            }
          } else {
            cell = {.kind = RoleKind::HorizontalWire, .clause = p, .slot = s, .row = row};
          }
        }
        if (torus) {
          role(r, 4 * n + 2) = {.kind = RoleKind::HorizontalEnd, .clause = p, .slot = s, .row = row};
        }
      }
    }
  }

  if (torus) {
    for (int i = 1; i <= n; ++i) {
      for (int side = 1; side <= 2; ++side) {
        role(12 * m + 1, wire_col(i, side)) = {.kind = RoleKind::VerticalEnd, .var = i, .side = side};
      }
    }
  }
  return map;
}

namespace {

std::string join(char prefix, std::initializer_list<int> parts) {
  std::string out(1, prefix);
  bool first = true;
  for (int p : parts) {
    if (!first) out += '.';
    out += std::to_string(p);
    first = false;
  }
  return out;
}

constexpr const char* kCorners[2][2] = {{"ul", "ur"}, {"ll", "lr"}};

}  // namespace

std::string role_token(const CellRole& r) {
  switch (r.kind) {
    case RoleKind::TopStart:
      return "S";
    case RoleKind::TopEnd:
      return "E";
    case RoleKind::Filler:
      return "F";
    case RoleKind::Padding:
      return "P";
    case RoleKind::AssignBlock:
      return join('A', {r.var, r.index});
    case RoleKind::ClauseCell:
      return join('C', {r.clause, r.index});
    case RoleKind::VerticalWire:
      return join('V', {r.var, r.side});
    case RoleKind::HorizontalWire:
      return join('H', {r.clause, r.slot, r.row});
    case RoleKind::Crossing:
      return join('X', {r.var, r.clause, r.slot, r.side, r.row});
    case RoleKind::Junction:
      return join('J', {r.clause, r.slot}) + '.' + kCorners[r.row - 1][r.side - 1];
    case RoleKind::VerticalEnd:
      return "T" + join('V', {r.var, r.side});
    case RoleKind::HorizontalEnd:
      return "T" + join('H', {r.clause, r.slot, r.row});
  }
  return "?";
}

CellRole parse_role_token(std::string_view token) {
  auto fail = [&]() -> CellRole {
    throw InvalidArgument("unknown role token '" + std::string(token) + "'");
  };
  if (token == "S") return {.kind = RoleKind::TopStart};
  if (token == "E") return {.kind = RoleKind::TopEnd};
  if (token == "F") return {.kind = RoleKind::Filler};
  if (token == "P") return {.kind = RoleKind::Padding};
  if (token.size() < 2) return fail();

  // Splits "A2.3" style bodies into integers; corner names only for 'J'.
  auto numbers = [&](std::string_view body, std::size_t expected, std::string_view* tail) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (out.size() < expected) {
      const std::size_t dot = body.find('.', pos);
      const std::string_view part = body.substr(pos, dot == std::string_view::npos ? body.npos : dot - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || v < 1) fail();
      out.push_back(v);
      if (dot == std::string_view::npos) {
        pos = body.size();
        break;
      }
      pos = dot + 1;
    }
    if (out.size() != expected) fail();
    if (tail) {
      *tail = body.substr(pos);
    } else if (pos != body.size()) {
      fail();
    }
    return out;
  };

  const char kind = token[0];
  std::string_view body = token.substr(1);
  if (kind == 'T' && body.size() >= 2) {
    const char sub = body[0];
    body = body.substr(1);
    if (sub == 'V') {
      auto v = numbers(body, 2, nullptr);
      return {.kind = RoleKind::VerticalEnd, .var = v[0], .side = v[1]};
    }
    if (sub == 'H') {
      auto v = numbers(body, 3, nullptr);
      return {.kind = RoleKind::HorizontalEnd, .clause = v[0], .slot = v[1], .row = v[2]};
    }
    return fail();
  }
  switch (kind) {
    case 'A': {
      auto v = numbers(body, 2, nullptr);
      return {.kind = RoleKind::AssignBlock, .var = v[0], .index = v[1]};
    }
    case 'C': {
      auto v = numbers(body, 2, nullptr);
      return {.kind = RoleKind::ClauseCell, .clause = v[0], .index = v[1]};
    }
    case 'V': {
      auto v = numbers(body, 2, nullptr);
      return {.kind = RoleKind::VerticalWire, .var = v[0], .side = v[1]};
    }
    case 'H': {
      auto v = numbers(body, 3, nullptr);
      return {.kind = RoleKind::HorizontalWire, .clause = v[0], .slot = v[1], .row = v[2]};
    }
    case 'X': {
      auto v = numbers(body, 5, nullptr);
      return {.kind = RoleKind::Crossing, .var = v[0], .clause = v[1], .slot = v[2], .side = v[3], .row = v[4]};
    }
    case 'J': {
      std::string_view corner;
      auto v = numbers(body, 2, &corner);
      for (int row = 1; row <= 2; ++row) {
        for (int side = 1; side <= 2; ++side) {
          if (corner == kCorners[row - 1][side - 1]) {
            return {.kind = RoleKind::Junction, .clause = v[0], .slot = v[1], .side = side, .row = row};
          }
        }
      }
      return fail();
    }
    default:
      return fail();
  }
}

std::string serialize_role_map(const ReductionMap& map) {
  std::string out = "tvxroles 1\n";
  out += "dims " + std::to_string(map.width) + ' ' + std::to_string(map.height) + '\n';
  out += "boundary ";
  out += to_string(map.boundary);
  out += "\nlabels ";
  out += to_string(map.labels);
  out += '\n';
  out += "origin " + std::to_string(map.col_offset) + ' ' + std::to_string(map.row_offset) + '\n';
  out += "padbase " + std::to_string(map.pad_base) + '\n';
  out += serialize_1in3(map.formula);
  for (int r = 0; r < map.height; ++r) {
    for (int c = 0; c < map.width; ++c) {
      if (c > 0) out += ' ';
      out += role_token(map.at(r, c));
    }
    out += '\n';
  }
  return out;
}

ReductionMap parse_role_map(std::string_view text) {
  LineReader reader(text);
  ReductionMap map;

  auto header = reader.expect_tokens(2, "header 'tvxroles 1'");
  if (header.tokens[0] != "tvxroles" || header.tokens[1] != "1") {
    throw ParseError(header.number, "expected header 'tvxroles 1'");
  }
  auto dims = reader.expect_tokens(3, "'dims <W> <H>'");
  if (dims.tokens[0] != "dims") throw ParseError(dims.number, "expected 'dims <W> <H>'");
  map.width = parse_positive(dims.tokens[1], dims.number, "width");
  map.height = parse_positive(dims.tokens[2], dims.number, "height");

  auto bnd = reader.expect_tokens(2, "'boundary bordered|toroidal'");
  if (bnd.tokens[0] != "boundary" || (bnd.tokens[1] != "bordered" && bnd.tokens[1] != "toroidal")) {
    throw ParseError(bnd.number, "expected 'boundary bordered' or 'boundary toroidal'");
  }
  map.boundary = bnd.tokens[1] == "toroidal" ? Boundary::Toroidal : Boundary::Bordered;

  auto lab = reader.expect_tokens(2, "'labels rigid|zerofill'");
  if (lab.tokens[0] != "labels" || (lab.tokens[1] != "rigid" && lab.tokens[1] != "zerofill")) {
    throw ParseError(lab.number, "expected 'labels rigid' or 'labels zerofill'");
  }
  map.labels = lab.tokens[1] == "rigid" ? LabelScheme::Rigid : LabelScheme::ZeroFill;

  auto origin = reader.expect_tokens(3, "'origin <col> <row>'");
  if (origin.tokens[0] != "origin") throw ParseError(origin.number, "expected 'origin <col> <row>'");
  map.col_offset = parse_non_negative(origin.tokens[1], origin.number, "column offset");
  map.row_offset = parse_non_negative(origin.tokens[2], origin.number, "row offset");

  auto pad = reader.expect_tokens(2, "'padbase <label>'");
  if (pad.tokens[0] != "padbase") throw ParseError(pad.number, "expected 'padbase <label>'");
  map.pad_base = parse_non_negative(pad.tokens[1], pad.number, "padding label base");

  auto p = reader.expect_tokens(4, "'p 1in3 <n> <m>'");
  if (p.tokens[0] != "p" || p.tokens[1] != "1in3") throw ParseError(p.number, "expected 'p 1in3 <n> <m>'");
  map.formula.n = parse_positive(p.tokens[2], p.number, "variable count");
  const int m = parse_positive(p.tokens[3], p.number, "clause count");
  for (int k = 0; k < m; ++k) {
    auto line = reader.expect_tokens(3, "clause line '<a> <b> <c>'");
    std::array<int, 3> clause{};
    for (std::size_t j = 0; j < 3; ++j) {
      clause[j] = parse_positive(line.tokens[j], line.number, "variable index");
      if (clause[j] > map.formula.n) throw ParseError(line.number, "variable index out of range");
    }
    map.formula.clauses.push_back(clause);
  }
  map.plan = LabelPlan{map.formula.n, m};

  for (int r = 0; r < map.height; ++r) {
    auto line = reader.expect_tokens(static_cast<std::size_t>(map.width), "a row of role tokens");
    for (auto tok : line.tokens) {
      try {
        map.roles.push_back(parse_role_token(tok));
      } catch (const InvalidArgument& e) {
        throw ParseError(line.number, e.what());
      }
    }
  }
  reader.expect_end("more role rows than dims height");
  return map;
}

}  // namespace tvx
