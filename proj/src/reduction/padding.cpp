#include <algorithm>
#include <cstdlib>
#include <string>

#include "gadgets.hpp"
#include "tetravex/error.hpp"
#include "tetravex/reduction.hpp"

namespace tvx {

namespace {

// The padding block is a rigid grid: every internal face gets a fresh label
// shared by exactly the two tiles on either side, every outer face a fresh
// label used once, and the face touching the original board is the
// original's constant sentinel.
struct PadBlock {
  bool columns;  // true: k columns on the left; false: k rows on top
  int k;
  int rows;      // block height
  int cols;      // block width
  std::int64_t base;

  // Vertical faces (between columns) and horizontal faces (between rows),
  // indexed by the cell to their right / below.
  [[nodiscard]] Label vertical_face(int r, int c) const {
    if (columns && c == cols) return Label::left();
    if (columns) return Label::num(base + static_cast<std::int64_t>(r) * cols + c);
    return Label::num(base + static_cast<std::int64_t>(rows) * cols + static_cast<std::int64_t>(r) * (cols + 1) + c);
  }
  [[nodiscard]] Label horizontal_face(int r, int c) const {
    if (!columns && r == rows) return Label::top();
    if (!columns) return Label::num(base + static_cast<std::int64_t>(r) * cols + c);
    return Label::num(base + static_cast<std::int64_t>(rows) * cols + static_cast<std::int64_t>(r) * cols + c);
  }
  [[nodiscard]] Tile tile(int r, int c) const {
    return {horizontal_face(r, c), vertical_face(r, c + 1), horizontal_face(r + 1, c),
            vertical_face(r, c)};
  }
};

PadBlock block_for(int width, int height, std::int64_t base) {
  if (width < height) return {true, height - width, height, height - width, base};
  return {false, width - height, width - height, width, base};
}

std::int64_t fresh_base(const Instance& instance) {
  std::int64_t max_abs = 0;
  for (const Tile& t : instance.tiles()) {
    for (Label l : {t.top, t.right, t.bottom, t.left}) {
      if (l.is_num()) max_abs = std::max<std::int64_t>(max_abs, std::llabs(l.value()));
    }
  }
  return max_abs + 1;
}

void require_padable(const Instance& instance, const ReductionMap& map) {
  if (instance.boundary() != Boundary::Bordered || map.boundary != Boundary::Bordered) {
    throw Refusal("pad_to_square: only bordered reduction instances can be padded");
  }
  if (instance.width() != map.width || instance.height() != map.height) {
    throw Refusal("pad_to_square: map dims do not match the instance");
  }
  if (map.pad_base != 0) throw Refusal("pad_to_square: map is already padded");

  const int w = instance.width();
  const int h = instance.height();
  if (w == h) return;
  // The docking edge must be a constant sentinel that nothing else can match.
  const Label sentinel = w < h ? Label::left() : Label::top();
  const auto tiles = instance.tiles();
  const auto on_edge = std::count_if(tiles.begin(), tiles.end(), [&](const Tile& t) {
    return (w < h ? t.left : t.top) == sentinel;
  });
  const bool matched = std::any_of(tiles.begin(), tiles.end(), [&](const Tile& t) {
    return (w < h ? t.right : t.bottom) == sentinel;
  });
  if (on_edge != (w < h ? h : w) || matched) {
    throw Refusal(std::string("pad_to_square: instance has no constant ") +
                  (w < h ? "Left" : "Top") + " sentinel edge to dock against");
  }
}

}  // namespace

namespace detail {

Tile padding_tile(const ReductionMap& map, int row, int col) {
  const int w = map.width - map.col_offset;
  const int h = map.height - map.row_offset;
  return block_for(w, h, map.pad_base).tile(row, col);
}

}  // namespace detail

Instance pad_to_square(const Instance& instance, const ReductionMap& map) {
  require_padable(instance, map);
  const int w = instance.width();
  const int h = instance.height();
  if (w == h) return instance;

  const PadBlock block = block_for(w, h, fresh_base(instance));
  std::vector<Tile> tiles(instance.tiles().begin(), instance.tiles().end());
  for (int r = 0; r < block.rows; ++r) {
    for (int c = 0; c < block.cols; ++c) tiles.push_back(block.tile(r, c));
  }
  const int side = std::max(w, h);
  return Instance(side, side, Boundary::Bordered, std::move(tiles));
}

ReductionMap pad_map_to_square(const ReductionMap& map, const Instance& instance) {
  require_padable(instance, map);
  if (map.width == map.height) return map;

  const PadBlock block = block_for(map.width, map.height, fresh_base(instance));
  const int side = std::max(map.width, map.height);
  ReductionMap out = map;
  out.width = side;
  out.height = side;
  out.col_offset = block.columns ? block.k : 0;
  out.row_offset = block.columns ? 0 : block.k;
  out.pad_base = block.base;
  out.roles.assign(static_cast<std::size_t>(side) * static_cast<std::size_t>(side),
                   CellRole{.kind = RoleKind::Padding});
  for (int r = 0; r < map.height; ++r) {
    for (int c = 0; c < map.width; ++c) {
      out.roles[static_cast<std::size_t>(r + out.row_offset) * static_cast<std::size_t>(side) +
                static_cast<std::size_t>(c + out.col_offset)] = map.at(r, c);
    }
  }
  return out;
}

}  // namespace tvx
