#include "tetravex/text_format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "tetravex/error.hpp"
#include "tetravex/text_lines.hpp"

namespace tvx {

std::string serialize_instance(const Instance& instance) {
  std::string out;
  out += "tvx 1\n";
  out += "dims " + std::to_string(instance.width()) + ' ' + std::to_string(instance.height()) + '\n';
  out += "boundary ";
  out += to_string(instance.boundary());
  out += '\n';
  out += "tiles " + std::to_string(instance.cell_count()) + '\n';
  for (const Tile& t : instance.tiles()) {
    out += to_string(t);
    out += '\n';
  }
  return out;
}

Instance parse_instance(std::string_view text) {
  LineReader reader(text);

  auto header = reader.expect_tokens(2, "header 'tvx 1'");
  if (header.tokens[0] != "tvx" || header.tokens[1] != "1") {
    throw ParseError(header.number, "expected header 'tvx 1'");
  }

  auto dims = reader.expect_tokens(3, "'dims <W> <H>'");
  if (dims.tokens[0] != "dims") throw ParseError(dims.number, "expected 'dims <W> <H>'");
  const int width = parse_positive(dims.tokens[1], dims.number, "width");
  const int height = parse_positive(dims.tokens[2], dims.number, "height");

  auto bnd = reader.expect_tokens(2, "'boundary bordered|toroidal'");
  Boundary boundary;
  if (bnd.tokens[0] == "boundary" && bnd.tokens[1] == "bordered") {
    boundary = Boundary::Bordered;
  } else if (bnd.tokens[0] == "boundary" && bnd.tokens[1] == "toroidal") {
    boundary = Boundary::Toroidal;
  } else {
    throw ParseError(bnd.number, "expected 'boundary bordered' or 'boundary toroidal'");
  }

  auto count_line = reader.expect_tokens(2, "'tiles <count>'");
  if (count_line.tokens[0] != "tiles") throw ParseError(count_line.number, "expected 'tiles <count>'");
  const int count = parse_non_negative(count_line.tokens[1], count_line.number, "tile count");
  if (static_cast<long long>(count) != static_cast<long long>(width) * height) {
    throw ParseError(count_line.number, "tile count " + std::to_string(count) +
                                            " does not match dims " + std::to_string(width) + "x" +
                                            std::to_string(height));
  }

  std::vector<Tile> tiles;
  tiles.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    auto line = reader.expect_tokens(4, "tile line '<top> <right> <bottom> <left>'");
    std::array<Label, 4> labels;
    for (std::size_t k = 0; k < 4; ++k) {
      auto label = parse_label(line.tokens[k]);
      if (!label) {
        throw ParseError(line.number, "bad label token '" + std::string(line.tokens[k]) +
                                          "' (expected integer, T, L or R)");
      }
      labels[k] = *label;
    }
    tiles.push_back({labels[0], labels[1], labels[2], labels[3]});
  }
  reader.expect_end("tile list longer than 'tiles " + std::to_string(count) + "'");
  return Instance(width, height, boundary, std::move(tiles));
}

std::string serialize_tiling(const Tiling& tiling) {
  // First slot index of each tile type in the canonical (sorted) list.
  std::vector<Tile> sorted(tiling.cells().begin(), tiling.cells().end());
  std::sort(sorted.begin(), sorted.end());
  std::map<Tile, std::size_t> next_slot;
  for (std::size_t i = sorted.size(); i-- > 0;) next_slot[sorted[i]] = i;

  std::string out = "tvxsol 1\n";
  out += "dims " + std::to_string(tiling.width()) + ' ' + std::to_string(tiling.height()) + '\n';
  for (int r = 0; r < tiling.height(); ++r) {
    for (int c = 0; c < tiling.width(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(next_slot[tiling.at(r, c)]++);
    }
    out += '\n';
  }
  return out;
}

Tiling parse_tiling(std::string_view text, const Instance& instance) {
  LineReader reader(text);

  auto header = reader.expect_tokens(2, "header 'tvxsol 1'");
  if (header.tokens[0] != "tvxsol" || header.tokens[1] != "1") {
    throw ParseError(header.number, "expected header 'tvxsol 1'");
  }
  auto dims = reader.expect_tokens(3, "'dims <W> <H>'");
  if (dims.tokens[0] != "dims") throw ParseError(dims.number, "expected 'dims <W> <H>'");
  const int width = parse_positive(dims.tokens[1], dims.number, "width");
  const int height = parse_positive(dims.tokens[2], dims.number, "height");
  if (width != instance.width() || height != instance.height()) {
    throw ParseError(dims.number, "tiling dims " + std::to_string(width) + "x" +
                                      std::to_string(height) + " do not match instance dims " +
                                      std::to_string(instance.width()) + "x" +
                                      std::to_string(instance.height()));
  }

  const auto slots = instance.tiles();
  std::vector<bool> seen(slots.size(), false);
  std::vector<Tile> cells;
  cells.reserve(slots.size());
  for (int r = 0; r < height; ++r) {
    auto line = reader.next();
    if (!line) throw ParseError(0, "expected " + std::to_string(height) + " grid rows, got " + std::to_string(r));
    if (line->tokens.size() != static_cast<std::size_t>(width)) {
      throw ParseError(line->number, "expected " + std::to_string(width) + " indices, got " +
                                         std::to_string(line->tokens.size()));
    }
    for (auto tok : line->tokens) {
      const int idx = parse_non_negative(tok, line->number, "slot index");
      if (static_cast<std::size_t>(idx) >= slots.size()) {
        throw ParseError(line->number, "slot index " + std::to_string(idx) + " out of range 0.." +
                                           std::to_string(slots.size() - 1));
      }
      if (seen[static_cast<std::size_t>(idx)]) {
        throw ParseError(line->number, "slot index " + std::to_string(idx) + " used twice");
      }
      seen[static_cast<std::size_t>(idx)] = true;
      cells.push_back(slots[static_cast<std::size_t>(idx)]);
    }
  }
  reader.expect_end("more grid rows than dims height " + std::to_string(height));
  return Tiling(width, height, std::move(cells));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace tvx
