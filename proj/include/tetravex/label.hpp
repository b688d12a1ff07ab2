#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace tvx {

/// An edge value: a signed integer or one of the three border sentinels.
///
/// Sentinels are separate variants rather than reserved integers, so no
/// numeric label can ever collide with them. The total order is Num(k) by k,
/// then Top, Left, Right.
class Label {
 public:
  enum class Kind : std::uint8_t { Num = 0, Top = 1, Left = 2, Right = 3 };

  constexpr Label() noexcept = default;

  static constexpr Label num(std::int64_t k) noexcept { return Label(Kind::Num, k); }
  static constexpr Label top() noexcept { return Label(Kind::Top, 0); }
  static constexpr Label left() noexcept { return Label(Kind::Left, 0); }
  static constexpr Label right() noexcept { return Label(Kind::Right, 0); }

  [[nodiscard]] constexpr Kind kind() const noexcept { return kind_; }
  [[nodiscard]] constexpr bool is_num() const noexcept { return kind_ == Kind::Num; }
  [[nodiscard]] constexpr bool is_sentinel() const noexcept { return kind_ != Kind::Num; }
  /// Numeric value; 0 for sentinels.
  [[nodiscard]] constexpr std::int64_t value() const noexcept { return value_; }

  friend constexpr auto operator<=>(const Label&, const Label&) noexcept = default;
  friend constexpr bool operator==(const Label&, const Label&) noexcept = default;

 private:
  constexpr Label(Kind kind, std::int64_t value) noexcept : kind_(kind), value_(value) {}

  // Member order drives the defaulted comparison.
  Kind kind_ = Kind::Num;
  std::int64_t value_ = 0;
};

/// Text token: decimal integer, or `T` / `L` / `R`.
std::string to_string(Label label);

/// Inverse of to_string. Accepts an optional leading '-' but not '+'.
std::optional<Label> parse_label(std::string_view token);

/// One unit tile. Tiles are never rotated or reflected.
struct Tile {
  Label top;
  Label right;
  Label bottom;
  Label left;

  friend constexpr auto operator<=>(const Tile&, const Tile&) noexcept = default;
  friend constexpr bool operator==(const Tile&, const Tile&) noexcept = default;
};

/// "top right bottom left", the line format used by instance files.
std::string to_string(const Tile& tile);

/// Shorthand for an all-numeric tile.
constexpr Tile num_tile(std::int64_t top, std::int64_t right, std::int64_t bottom,
                        std::int64_t left) noexcept {
  return {Label::num(top), Label::num(right), Label::num(bottom), Label::num(left)};
}

}  // namespace tvx

template <>
struct std::hash<tvx::Label> {
  std::size_t operator()(const tvx::Label& l) const noexcept {
    auto v = static_cast<std::uint64_t>(l.value()) * 4u + static_cast<std::uint64_t>(l.kind());
    return std::hash<std::uint64_t>{}(v);
  }
};
