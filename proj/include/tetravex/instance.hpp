#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tetravex/label.hpp"

namespace tvx {

enum class Boundary { Bordered, Toroidal };

std::string_view to_string(Boundary boundary);

/// Board dimensions, boundary mode and a multiset of tiles.
///
/// The tile multiset is stored in canonical (sorted) order, so two instances
/// compare equal iff they have the same dimensions, boundary and multiset.
class Instance {
 public:
  /// Throws InvalidArgument unless width, height >= 1 and
  /// tiles.size() == width * height.
  Instance(int width, int height, Boundary boundary, std::vector<Tile> tiles);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] Boundary boundary() const noexcept { return boundary_; }
  [[nodiscard]] std::size_t cell_count() const noexcept { return tiles_.size(); }
  /// Canonical tile list; index i here is "slot i" in tiling files.
  [[nodiscard]] std::span<const Tile> tiles() const noexcept { return tiles_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int width_;
  int height_;
  Boundary boundary_;
  std::vector<Tile> tiles_;
};

struct CellPos {
  int row = 0;
  int col = 0;
  friend constexpr bool operator==(const CellPos&, const CellPos&) noexcept = default;
};

/// A complete placement: one tile type per cell, row-major.
class Tiling {
 public:
  Tiling(int width, int height, std::vector<Tile> cells);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] const Tile& at(int row, int col) const { return cells_[index(row, col)]; }
  [[nodiscard]] const Tile& at(CellPos p) const { return at(p.row, p.col); }
  void set(int row, int col, const Tile& tile) { cells_[index(row, col)] = tile; }
  [[nodiscard]] std::span<const Tile> cells() const noexcept { return cells_; }

  friend bool operator==(const Tiling&, const Tiling&) = default;

 private:
  [[nodiscard]] std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_;
  int height_;
  std::vector<Tile> cells_;
};

/// One mismatched adjacency. `first` is the left (or upper) cell and
/// `first_edge` its right (or bottom) label; `second`/`second_edge` the
/// neighbour's facing label. Wrap pairs list the last column/row first.
struct Violation {
  CellPos first;
  CellPos second;
  Label first_edge;
  Label second_edge;
  bool wraps = false;
};

struct ValidationReport {
  bool valid = false;
  std::vector<Violation> violations;
  bool multiset_ok = false;
};

/// Checks every adjacency (plus wrap pairs for toroidal instances) and that
/// the grid uses exactly the instance multiset. Throws InvalidArgument when
/// the grid dimensions differ from the instance's.
ValidationReport validate_tiling(const Instance& instance, const Tiling& tiling);

}  // namespace tvx
