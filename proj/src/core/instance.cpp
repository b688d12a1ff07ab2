#include "tetravex/instance.hpp"

#include <algorithm>
#include <string>

#include "tetravex/error.hpp"

namespace tvx {

std::string_view to_string(Boundary boundary) {
  return boundary == Boundary::Toroidal ? "toroidal" : "bordered";
}

Instance::Instance(int width, int height, Boundary boundary, std::vector<Tile> tiles)
    : width_(width), height_(height), boundary_(boundary), tiles_(std::move(tiles)) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("instance dimensions must be positive, got " + std::to_string(width) +
                          "x" + std::to_string(height));
  }
  const auto cells = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (tiles_.size() != cells) {
    throw InvalidArgument("instance has " + std::to_string(tiles_.size()) + " tiles but " +
                          std::to_string(width) + "x" + std::to_string(height) + " needs " +
                          std::to_string(cells));
  }
  std::sort(tiles_.begin(), tiles_.end());
}

Tiling::Tiling(int width, int height, std::vector<Tile> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
  if (width < 1 || height < 1 ||
      cells_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw InvalidArgument("tiling grid does not match its dimensions");
  }
}

ValidationReport validate_tiling(const Instance& instance, const Tiling& tiling) {
  if (tiling.width() != instance.width() || tiling.height() != instance.height()) {
    throw InvalidArgument("tiling is " + std::to_string(tiling.width()) + "x" +
                          std::to_string(tiling.height()) + " but instance is " +
                          std::to_string(instance.width()) + "x" +
                          std::to_string(instance.height()));
  }

  const int w = tiling.width();
  const int h = tiling.height();
  const bool torus = instance.boundary() == Boundary::Toroidal;
  ValidationReport report;

  auto check_h = [&](int r, int c1, int c2, bool wraps) {
    const Label a = tiling.at(r, c1).right;
    const Label b = tiling.at(r, c2).left;
    if (a != b) report.violations.push_back({{r, c1}, {r, c2}, a, b, wraps});
  };
  auto check_v = [&](int r1, int r2, int c, bool wraps) {
    const Label a = tiling.at(r1, c).bottom;
    const Label b = tiling.at(r2, c).top;
    if (a != b) report.violations.push_back({{r1, c}, {r2, c}, a, b, wraps});
  };

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (c + 1 < w) check_h(r, c, c + 1, false);
      if (r + 1 < h) check_v(r, r + 1, c, false);
    }
  }
  if (torus) {
    for (int r = 0; r < h; ++r) check_h(r, w - 1, 0, true);
    for (int c = 0; c < w; ++c) check_v(h - 1, 0, c, true);
  }

  std::vector<Tile> used(tiling.cells().begin(), tiling.cells().end());
  std::sort(used.begin(), used.end());
  report.multiset_ok = std::equal(used.begin(), used.end(), instance.tiles().begin(),
                                  instance.tiles().end());
  report.valid = report.violations.empty() && report.multiset_ok;
  return report;
}

}  // namespace tvx
