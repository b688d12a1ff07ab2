#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tetravex/instance.hpp"

namespace tvx {

// Instance file:
//   tvx 1
//   dims <W> <H>
//   boundary bordered|toroidal
//   tiles <count>
//   <top> <right> <bottom> <left>      (count lines, canonical order)
//
// Tiling file:
//   tvxsol 1
//   dims <W> <H>
//   <H lines of W 0-based slot indices into the canonical tile list>

std::string serialize_instance(const Instance& instance);
Instance parse_instance(std::string_view text);

/// Slot indices are assigned per tile type in row-major order, so the output
/// is a pure function of the grid.
std::string serialize_tiling(const Tiling& tiling);
/// Requires every slot 0..W*H-1 exactly once and dimensions equal to the
/// instance's.
Tiling parse_tiling(std::string_view text, const Instance& instance);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace tvx
