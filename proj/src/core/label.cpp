#include "tetravex/label.hpp"

#include <charconv>

namespace tvx {

std::string to_string(Label label) {
  switch (label.kind()) {
    case Label::Kind::Top:
      return "T";
    case Label::Kind::Left:
      return "L";
    case Label::Kind::Right:
      return "R";
    case Label::Kind::Num:
      break;
  }
  return std::to_string(label.value());
}

std::optional<Label> parse_label(std::string_view token) {
  if (token == "T") return Label::top();
  if (token == "L") return Label::left();
  if (token == "R") return Label::right();
  if (token.empty()) return std::nullopt;

  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return Label::num(value);
}

std::string to_string(const Tile& tile) {
  return to_string(tile.top) + ' ' + to_string(tile.right) + ' ' + to_string(tile.bottom) + ' ' +
         to_string(tile.left);
}

}  // namespace tvx
